"""Command-line behavior: subcommands, formats, exit codes, round-trips."""

import json

import pytest

from exprcount import compute_table
from exprcount.cli import (
    main,
    table_from_csv,
    table_from_json,
    table_to_csv,
    table_to_json,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_table(capsys):
    code, out, _ = run(capsys, "count", "--n", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["k", "A"]
    assert lines[-1].split() == ["3", "94"]


def test_count_all_sequences(capsys):
    code, out, _ = run(capsys, "count", "--n", "2", "--all-sequences")
    assert code == 0
    assert out.splitlines()[0].split() == ["k", "S", "Q", "R", "P", "A"]
    assert out.splitlines()[2].split() == ["2", "4", "1", "3", "6", "10"]


def test_count_json_schema(capsys):
    code, out, _ = run(capsys, "count", "--n", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 2
    assert data["rows"][0] == {"k": 1, "S": "2", "Q": "1", "R": "1", "P": "2", "A": "2"}
    assert all(isinstance(row["A"], str) for row in data["rows"])


def test_json_round_trip():
    table = compute_table(40)
    assert table_from_json(table_to_json(table)) == table


def test_csv_round_trip():
    table = compute_table(40)
    assert table_from_csv(table_to_csv(table, all_sequences=True)) == table


def test_csv_values_are_exact_decimal_strings(capsys):
    code, out, _ = run(capsys, "count", "--n", "30", "--format", "csv", "--all-sequences")
    assert code == 0
    last = out.splitlines()[-1].split(",")
    assert last[0] == "30"
    assert last[-1] == str(compute_table(30).row(30).A)
    assert "e" not in last[-1].lower()


def test_equiv_vectors(capsys):
    for lhs, rhs in [
        ("a+b", "a-(-b)"),
        ("(a-b)*(c-d)", "(d-c)*(b-a)"),
        ("(a*b)/c", "b/(c/a)"),
    ]:
        code, out, _ = run(capsys, "equiv", lhs, rhs)
        assert (code, out.strip()) == (0, "equivalent")
    code, out, _ = run(capsys, "equiv", "a+b", "a*b")
    assert (code, out.strip()) == (1, "inequivalent")


def test_equiv_is_symmetric_and_reflexive(capsys):
    for pair in [("a/b", "b/a"), ("a+b*c", "(b*c)+a")]:
        fwd, _, _ = run(capsys, "equiv", *pair)
        rev, _, _ = run(capsys, "equiv", *reversed(pair))
        assert fwd == rev
    code, _, _ = run(capsys, "equiv", "a*(b+c)", "a*(b+c)")
    assert code == 0


def test_canon_output(capsys):
    code, out, _ = run(capsys, "canon", "(a*b)/c")
    assert code == 0
    assert out.strip() == "(x1*x2)/(x3)"
    code, out, _ = run(capsys, "canon", "a/b + c")
    assert out.strip() == "(x2*x3 + x1)/(x2)"


def test_syntax_error_exits_2(capsys):
    code, _, err = run(capsys, "equiv", "a+", "b")
    assert code == 2
    assert "syntax error" in err
    code, _, err = run(capsys, "canon", "(a")
    assert code == 2


def test_usage_error_exits_2(capsys):
    assert run(capsys, "count")[0] == 2          # missing --n
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "count", "--n", "0")[0] == 2


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-k", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k=1: oracle=2 engine=2 PASS"
    assert lines[1] == "k=2: oracle=10 engine=10 PASS"
    assert lines[-1] == "all 2 checks passed"


def test_verify_refuses_large_without_flag(capsys):
    code, _, err = run(capsys, "verify", "--max-k", "5")
    assert code == 2
    assert "--unsafe-large" in err


def test_bench_reports_counts_deterministically(capsys):
    code, out, err = run(capsys, "bench", "--n", "32", "--repeat", "2")
    assert code == 0
    assert out.startswith("n=32 multiplications=")
    assert "run 1:" in err and "run 2:" in err
    code2, out2, _ = run(capsys, "bench", "--n", "32")
    assert out2 == out  # operation counts carry no timing noise
