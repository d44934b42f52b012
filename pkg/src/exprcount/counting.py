"""Recurrence engine for the expression-counting sequences.

For each k the engine produces five arbitrary-precision counts of
inequivalent expressions on k distinct variables:

    S_k  sum-type expressions,
    Q_k  products of two or more sum-type factors, counted up to sign,
    R_k  Q_k plus sum-type expressions up to sign (R_k = Q_k + S_k/2),
    P_k  product-type expressions,
    A_k  expressions of either type (A_k = S_k + P_k for k >= 2).

Starting from S_1 = P_1 = A_1 = 2 and Q_1 = R_1 = 1, each row follows from
the earlier rows by convolutions against one row of binomial coefficients:

    S_k = sum_{j=1}^{k-1} C(k-1, j-1) * P_j * A_{k-j}
    Q_k = ( sum_{j=1}^{k-1} C(k-1, j-1) * S_j * R_{k-j} ) / 2
    R_k = Q_k + S_k / 2
    P_k = 2 * ( Q_k + sum_{j=1}^{k-1} C(k, j) * R_j * R_{k-j} )
    A_k = S_k + P_k

Both divisions are exact because sum-type expressions pair up with their
negations; an odd sum would mean a bug, so it raises instead of truncating.
Only two Pascal-triangle rows are alive at any point, giving linear memory
in stored integers and a quadratic operation count overall.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple


class InexactDivisionError(ArithmeticError):
    """A halving step in the recurrence hit an odd value (internal fault)."""


class SequenceRow(NamedTuple):
    S: int
    Q: int
    R: int
    P: int
    A: int


BASE_ROW = SequenceRow(S=2, Q=1, R=1, P=2, A=2)


@dataclass(frozen=True)
class PascalRow:
    """Row k of Pascal's triangle: entries[j] = C(k, j)."""

    k: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.k < 0 or len(self.entries) != self.k + 1:
            raise ValueError("Pascal row must have k+1 entries")
        if self.entries[0] != 1 or self.entries[-1] != 1:
            raise ValueError("Pascal row must start and end with 1")


def next_pascal_row(row: PascalRow) -> PascalRow:
    """Row k+1 from row k via C(k+1, j) = C(k, j) + C(k, j-1)."""
    prev = row.entries
    mid = tuple(prev[j - 1] + prev[j] for j in range(1, row.k + 1))
    return PascalRow(row.k + 1, (1,) + mid + (1,))


@dataclass(frozen=True)
class SequenceTable:
    """Counts for k = 1..n; immutable and safe to share across threads."""

    rows: tuple[SequenceRow, ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def row(self, k: int) -> SequenceRow:
        if not 1 <= k <= self.n:
            raise IndexError(f"k must be in 1..{self.n}, got {k}")
        return self.rows[k - 1]

    def restrict(self, m: int) -> "SequenceTable":
        if not 1 <= m <= self.n:
            raise ValueError(f"m must be in 1..{self.n}, got {m}")
        return SequenceTable(self.rows[:m])


@dataclass
class OpCounter:
    """Tally of arbitrary-precision integer operations, for benchmarking."""

    muls: int = 0
    adds: int = 0
    divs: int = 0


def _next_row(
    rows: list[SequenceRow] | tuple[SequenceRow, ...],
    bkm1: tuple[int, ...],
    bk: tuple[int, ...],
    counter: OpCounter | None = None,
) -> SequenceRow:
    """Row k = len(rows)+1 from rows 1..k-1 and Pascal rows k-1 and k."""
    k = len(rows) + 1

    total = 0
    for j in range(1, k):
        total += bkm1[j - 1] * rows[j - 1].P * rows[k - j - 1].A
    s = total

    total = 0
    for j in range(1, k):
        total += bkm1[j - 1] * rows[j - 1].S * rows[k - j - 1].R
    if total % 2:
        raise InexactDivisionError(f"Q numerator odd at k={k}")
    q = total // 2

    if s % 2:
        raise InexactDivisionError(f"S_k odd at k={k}")
    r = q + s // 2

    total = q
    for j in range(1, k):
        total += bk[j] * rows[j - 1].R * rows[k - j - 1].R
    p = 2 * total

    a = s + p

    if counter is not None:
        counter.muls += 6 * (k - 1) + 1
        counter.adds += 3 * (k - 1) + 2
        counter.divs += 2
    return SequenceRow(S=s, Q=q, R=r, P=p, A=a)


def advance(
    table: SequenceTable,
    row_km1: PascalRow,
    row_k: PascalRow,
    counter: OpCounter | None = None,
) -> SequenceRow:
    """Compute row k = table.n + 1 of the five sequences.

    ``row_km1`` and ``row_k`` must be Pascal rows k-1 and k.
    """
    k = table.n + 1
    if k < 2:
        raise ValueError("advance needs at least row 1 in the table")
    if row_km1.k != k - 1 or row_k.k != k:
        raise ValueError(
            f"need Pascal rows {k - 1} and {k}, got {row_km1.k} and {row_k.k}"
        )
    return _next_row(table.rows, row_km1.entries, row_k.entries, counter)


def compute_table(n: int, counter: OpCounter | None = None) -> SequenceTable:
    """All five sequences for k = 1..n.

    Keeps only the current and previous Pascal rows while running.  Raises
    ValueError for n < 1 and InexactDivisionError if an exactness check
    ever fails (which would indicate a bug, not bad input).
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    rows: list[SequenceRow] = [BASE_ROW]
    row_km1 = PascalRow(1, (1, 1))
    row_k = next_pascal_row(row_km1)
    for k in range(2, n + 1):
        rows.append(_next_row(rows, row_km1.entries, row_k.entries, counter))
        if k < n:
            # Drop row k-1 before building row k+1: two rows live at a time.
            row_km1 = row_k
            row_k = next_pascal_row(row_km1)
            if counter is not None:
                counter.adds += row_km1.k
    return SequenceTable(tuple(rows))
