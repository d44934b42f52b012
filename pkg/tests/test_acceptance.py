"""Acceptance suite: one test per release criterion, zero tolerance unless stated.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line per
criterion.  The expected oracle counts (2, 10, 94, 1466) were reproduced by
the independent tree-enumeration oracle in this repository before being
frozen here.
"""

import random
import time

import pytest

from exprcount import (
    Frac,
    OpCounter,
    SequenceRow,
    canonicalize,
    compute_table,
    enumerate_grammar,
    enumerate_tree_classes,
)
from exprcount.cli import main as cli_main
from genlib import disjoint_blocks, random_fraction, random_poly

CASES = 1000

ORACLE_EXPECTED = {1: 2, 2: 10, 3: 94, 4: 1466}


@pytest.fixture(scope="module")
def class_sets():
    return {k: enumerate_tree_classes(k) for k in range(1, 5)}


def _pass(line: str) -> None:
    print(f"PASS: {line}")


def test_criterion_base_values():
    table = compute_table(1)
    assert table.row(1) == SequenceRow(S=2, Q=1, R=1, P=2, A=2)
    _pass("base values S=2 Q=1 R=1 P=2 A=2 at k=1")


def test_criterion_oracle_agreement(class_sets):
    table = compute_table(4)
    for k in range(1, 5):
        assert len(class_sets[k]) == ORACLE_EXPECTED[k]
        assert table.row(k).A == ORACLE_EXPECTED[k]
    _pass("oracle count equals engine A_k for k=1..4 (2, 10, 94, 1466)")


def test_criterion_grammar_tree_set_equality(class_sets):
    for k in (1, 2, 3):
        sums = enumerate_grammar(k, "sum")
        products = enumerate_grammar(k, "product")
        assert len(sums) == len(set(sums))
        assert len(products) == len(set(products))
        assert set(sums) | set(products) == class_sets[k].classes
    _pass("grammar union equals tree classes for k<=3 with zero duplicates")


def test_criterion_coefficient_lemma(class_sets):
    checked = 0
    for k in range(1, 5):
        for f in class_sets[k].classes:
            assert all(c in (-1, 1) for c in f.num.terms.values())
            assert all(c in (-1, 1) for c in f.den.terms.values())
            assert not set(f.num.terms) & set(f.den.terms)
            checked += 1
    assert checked == sum(ORACLE_EXPECTED.values())
    _pass(f"coefficients in {{-1,0,1}} and disjoint supports for all {checked} classes")


def test_criterion_property_suite_var_sum_lemma():
    rnd = random.Random(101)
    for _ in range(CASES):
        blocks = disjoint_blocks(rnd, rnd.randint(2, 4))
        fracs = [random_fraction(rnd, b, nonzero=True) for b in blocks]
        total = fracs[0]
        for f in fracs[1:]:
            total = total + f
        expected = frozenset().union(*(f.variables() for f in fracs))
        assert total.variables() == expected
    _pass(f"variable-set sum identity, {CASES} random disjoint families")


def test_criterion_property_suite_var_product_lemma():
    rnd = random.Random(202)
    for _ in range(CASES):
        s = rnd.randint(1, 3)
        t = rnd.randint(0, 2)
        blocks = disjoint_blocks(rnd, s + t)
        tops = [random_fraction(rnd, b, nonzero=True) for b in blocks[:s]]
        bots = [random_fraction(rnd, b, nonzero=True) for b in blocks[s:]]
        value = tops[0]
        for f in tops[1:]:
            value = value * f
        for g in bots:
            value = value / g
        expected = frozenset().union(*(f.variables() for f in tops + bots))
        assert value.variables() == expected
    _pass(f"variable-set product/quotient identity, {CASES} random families")


def test_criterion_property_suite_derivative_laws():
    rnd = random.Random(303)
    for _ in range(CASES):
        f = random_fraction(rnd, [1, 2])
        g = random_fraction(rnd, [2, 3])
        v = rnd.choice([1, 2, 3])
        assert (f + g).derivative(v) == f.derivative(v) + g.derivative(v)
        assert (f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v)
        if not g.is_zero():
            quot_num = f.derivative(v) * g - f * g.derivative(v)
            assert (f / g).derivative(v) == quot_num / (g * g)
        assert f.derivative(v).is_zero() == (v not in f.variables())
    _pass(f"derivative linearity/product/quotient laws, {CASES} random fractions")


def test_criterion_property_suite_field_laws():
    rnd = random.Random(404)
    for _ in range(CASES):
        f = random_fraction(rnd, [1, 2])
        g = random_fraction(rnd, [2, 3])
        h = random_fraction(rnd, [1, 3])
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert f - g == f + (-g)
        if not g.is_zero():
            assert (f / g) * g == f
    _pass(f"field axioms on random triples, {CASES} cases")


def test_criterion_property_suite_canonicalization():
    rnd = random.Random(505)
    for _ in range(CASES):
        num = random_poly(rnd, [1, 2, 3])
        den = random_poly(rnd, [2, 3], nonzero=True)
        scale = random_poly(rnd, [1, 3], nonzero=True)
        f = canonicalize(num, den)
        again = canonicalize(f.num, f.den)
        assert (again.num, again.den) == (f.num, f.den)
        assert canonicalize(num * scale, den * scale) == f
    _pass(f"canonicalization idempotent and scale-invariant, {CASES} cases")


def test_criterion_divisibility_and_runtime_n_1000():
    start = time.perf_counter()
    table = compute_table(1000)  # raises InexactDivisionError on any odd halving
    elapsed = time.perf_counter() - start
    assert table.n == 1000
    assert all(r.S % 2 == 0 for r in table.rows)
    assert elapsed < 60.0
    _pass(f"compute_table(1000) exact throughout, {elapsed:.1f}s < 60s")


def test_criterion_quadratic_scaling():
    c256, c512 = OpCounter(), OpCounter()
    compute_table(256, c256)
    compute_table(512, c512)
    ratio = c512.muls / c256.muls
    assert 3.6 <= ratio <= 4.4
    _pass(f"multiplication count ratio n=512/n=256 is {ratio:.3f} (4 +/- 10%)")


def test_criterion_figure_vectors(capsys):
    pairs = [
        ("a+b", "a-(-b)"),
        ("(a-b)*(c-d)", "(d-c)*(b-a)"),
        ("(a*b)/c", "b/(c/a)"),
    ]
    for lhs, rhs in pairs:
        assert cli_main(["equiv", lhs, rhs]) == 0
        assert capsys.readouterr().out.strip() == "equivalent"
    assert cli_main(["equiv", "a+b", "a*b"]) == 1
    assert capsys.readouterr().out.strip() == "inequivalent"
    _pass("equiv accepts the three picture pairs and rejects a+b vs a*b")
