"""Batch command-line front-end.

Subcommands::

    count  --n N [--format table|csv|json] [--all-sequences]
    verify --max-k K [--unsafe-large] [--processes P]
    equiv  EXPR1 EXPR2
    canon  EXPR
    bench  --n N [--repeat R]

Exit codes: 0 success (and ``equiv`` equivalent), 1 ``equiv`` inequivalent
or ``verify`` mismatch, 2 usage or expression syntax errors, 3 internal
assertion failures.  All stdout output is deterministic; ``bench`` sends
its wall-clock timings to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .counting import (
    InexactDivisionError,
    OpCounter,
    SequenceRow,
    SequenceTable,
    compute_table,
)
from .expressions import ExprSyntaxError, NameMap, evaluate, parse
from .oracle import oracle_count, resolve_cutoff

_COLUMNS = ("S", "Q", "R", "P", "A")


def table_to_json(table: SequenceTable) -> str:
    """Serialize with counts as decimal strings (no precision loss)."""
    rows = [
        {"k": k, **{c: str(v) for c, v in zip(_COLUMNS, row)}}
        for k, row in enumerate(table.rows, start=1)
    ]
    return json.dumps({"n": table.n, "rows": rows}, indent=2)


def table_from_json(text: str) -> SequenceTable:
    data = json.loads(text)
    rows = []
    for i, rec in enumerate(data["rows"], start=1):
        if rec["k"] != i:
            raise ValueError(f"row {i} carries k={rec['k']}")
        rows.append(SequenceRow(*(int(rec[c]) for c in _COLUMNS)))
    if data["n"] != len(rows):
        raise ValueError("row count does not match n")
    return SequenceTable(tuple(rows))


def table_to_csv(table: SequenceTable, all_sequences: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if all_sequences:
        writer.writerow(("k",) + _COLUMNS)
        for k, row in enumerate(table.rows, start=1):
            writer.writerow((k,) + tuple(str(v) for v in row))
    else:
        writer.writerow(("k", "A"))
        for k, row in enumerate(table.rows, start=1):
            writer.writerow((k, str(row.A)))
    return buf.getvalue()


def table_from_csv(text: str) -> SequenceTable:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != ("k",) + _COLUMNS:
        raise ValueError("CSV must carry all five sequences (header k,S,Q,R,P,A)")
    rows = []
    for i, rec in enumerate(reader, start=1):
        if int(rec[0]) != i:
            raise ValueError(f"row {i} carries k={rec[0]}")
        rows.append(SequenceRow(*(int(v) for v in rec[1:])))
    return SequenceTable(tuple(rows))


def _format_table(table: SequenceTable, all_sequences: bool) -> str:
    cols = ("k",) + (_COLUMNS if all_sequences else ("A",))
    data = [
        [str(k)] + [str(getattr(row, c)) for c in cols[1:]]
        for k, row in enumerate(table.rows, start=1)
    ]
    widths = [max(len(col), *(len(r[i]) for r in data)) for i, col in enumerate(cols)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    for r in data:
        lines.append("  ".join(v.rjust(w) for v, w in zip(r, widths)))
    return "\n".join(lines) + "\n"


def _cmd_count(args: argparse.Namespace) -> int:
    table = compute_table(args.n)
    if args.format == "json":
        print(table_to_json(table))
    elif args.format == "csv":
        sys.stdout.write(table_to_csv(table, all_sequences=args.all_sequences))
    else:
        sys.stdout.write(_format_table(table, args.all_sequences))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    k_max = args.max_k
    limit = resolve_cutoff(None)
    if k_max > limit and not args.unsafe_large:
        print(
            f"error: --max-k {k_max} exceeds the safe cutoff {limit}; "
            f"pass --unsafe-large to proceed",
            file=sys.stderr,
        )
        return 2
    table = compute_table(k_max)
    failures = 0
    for k in range(1, k_max + 1):
        counted = oracle_count(k, cutoff=k_max, processes=args.processes)
        expected = table.row(k).A
        status = "PASS" if counted == expected else "FAIL"
        if counted != expected:
            failures += 1
        print(f"k={k}: oracle={counted} engine={expected} {status}")
    if failures:
        print(f"{failures} of {k_max} checks failed")
        return 1
    print(f"all {k_max} checks passed")
    return 0


def _cmd_equiv(args: argparse.Namespace) -> int:
    names = NameMap()
    left, _ = parse(args.expr1, names)
    right, _ = parse(args.expr2, names)
    if evaluate(left) == evaluate(right):
        print("equivalent")
        return 0
    print("inequivalent")
    return 1


def _cmd_canon(args: argparse.Namespace) -> int:
    tree, _ = parse(args.expr)
    print(evaluate(tree).render())
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    counter = OpCounter()
    for run in range(1, args.repeat + 1):
        counter = OpCounter()
        start = time.perf_counter()
        compute_table(args.n, counter)
        elapsed = time.perf_counter() - start
        print(f"run {run}: {elapsed:.3f}s", file=sys.stderr)
    print(
        f"n={args.n} multiplications={counter.muls} "
        f"additions={counter.adds} exact_divisions={counter.divs}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exprcount",
        description=(
            "Count inequivalent arithmetic expressions on distinct variables "
            "and check expression equivalence exactly."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print the sequence values for k = 1..N")
    p.add_argument("--n", type=int, required=True, metavar="N")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument(
        "--all-sequences",
        action="store_true",
        help="show S, Q, R, P and A instead of A only (json always carries all)",
    )
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify", help="cross-check the engine against enumeration")
    p.add_argument("--max-k", type=int, default=3, metavar="K")
    p.add_argument(
        "--unsafe-large",
        action="store_true",
        help="allow K beyond the enumeration cutoff (k=5 takes a long time)",
    )
    p.add_argument("--processes", type=int, default=1, metavar="P")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("equiv", help="decide whether two expressions are equivalent")
    p.add_argument("expr1")
    p.add_argument("expr2")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("canon", help="print the canonical fraction of an expression")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("bench", help="time the engine and count integer operations")
    p.add_argument("--n", type=int, required=True, metavar="N")
    p.add_argument("--repeat", type=int, default=1, metavar="R")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except ExprSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InexactDivisionError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
