"""Exhaustive ground truth for the counting engine, at desk scale.

Two independent enumeration routes both produce the set of canonical
fractions reachable by expression trees on k distinct variables (each
variable exactly one leaf, binary nodes +, -, *, /, an optional unary
minus at any node position but never directly on top of another one):

* ``enumerate_tree_classes`` walks every (tree shape, leaf labeling) pair
  and collects the values of all operator/negation assignments for it.
  Values are built compositionally: the value set of a subtree only
  depends on its shape and leaves, so shared subtrees are computed once.
  Skipping stacked negations loses no classes since -(-e) = e, and the
  binary ``-`` contributes no value that ``+`` against a negation-closed
  operand set does not already produce.

* ``enumerate_grammar`` builds sum-type / product-type / Pi1 / Pi2
  expressions structurally from their decompositions over variable
  subsets.  Its output lists must be duplicate-free and exactly as long
  as the corresponding engine sequences; the tests enforce both.

Enumeration is intentionally bounded: the raw tree space for k variables
has roughly Catalan(k-1) * k! * 4^(k-1) * 2^(2k-1) members, about 1e6 at
k = 4 and 2e8 at k = 5, so anything above the cutoff (default 4, env
override ``EXPRCOUNT_ORACLE_CUTOFF``) is rejected unless explicitly
requested.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import IO, Iterator, Literal

from .expressions import Add, Div, ExprTree, Leaf, Mul, Neg, Sub, evaluate
from .rational import Frac

DEFAULT_CUTOFF = 4
CUTOFF_ENV_VAR = "EXPRCOUNT_ORACLE_CUTOFF"

GrammarKind = Literal["sum", "product", "pi1", "pi2"]

_KIND_ALIASES = {
    "sum": "sum",
    "sum-type": "sum",
    "product": "product",
    "product-type": "product",
    "pi1": "pi1",
    "pi2": "pi2",
}

# A shape is None for a leaf or a (left, right) pair of shapes.
Shape = None | tuple


@dataclass(frozen=True)
class ClassSet:
    """The equivalence classes on exactly k variables, as canonical fractions."""

    k: int
    classes: frozenset[Frac]

    def __len__(self) -> int:
        return len(self.classes)

    def __contains__(self, f: Frac) -> bool:
        return f in self.classes


def resolve_cutoff(cutoff: int | None = None) -> int:
    """Explicit argument beats the environment variable beats the default."""
    if cutoff is not None:
        return cutoff
    raw = os.environ.get(CUTOFF_ENV_VAR)
    if raw is None:
        return DEFAULT_CUTOFF
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{CUTOFF_ENV_VAR} must be an integer, got {raw!r}")


def _check_k(k: int, cutoff: int | None) -> None:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    limit = resolve_cutoff(cutoff)
    if k > limit:
        raise ValueError(
            f"k={k} exceeds the enumeration cutoff {limit}; "
            f"raise it explicitly if you really want this"
        )


@lru_cache(maxsize=None)
def tree_shapes(leaves: int) -> tuple[Shape, ...]:
    """All ordered binary tree shapes with the given number of leaves."""
    if leaves == 1:
        return (None,)
    out: list[Shape] = []
    for left in range(1, leaves):
        for ls in tree_shapes(left):
            for rs in tree_shapes(leaves - left):
                out.append((ls, rs))
    return tuple(out)


def _leaf_count(shape: Shape) -> int:
    if shape is None:
        return 1
    return _leaf_count(shape[0]) + _leaf_count(shape[1])


def _subtree_values(
    shape: Shape, leaves: tuple[int, ...], memo: dict
) -> frozenset[Frac]:
    """Values of every op/negation assignment over a fixed shape and leaves.

    Each returned set is closed under negation (the optional minus above
    the subtree root), so binary subtraction never has to be applied: for
    any w in the right set, -w is there too, making u - w redundant.
    """
    if shape is None:
        x = Frac.variable(leaves[0])
        return frozenset((x, -x))
    key = (shape, leaves)
    cached = memo.get(key)
    if cached is not None:
        return cached
    nl = _leaf_count(shape[0])
    left = _subtree_values(shape[0], leaves[:nl], memo)
    right = _subtree_values(shape[1], leaves[nl:], memo)
    out: set[Frac] = set()
    for u in left:
        for w in right:
            for r in (u + w, u * w, u / w):
                out.add(r)
                out.add(-r)
    result = frozenset(out)
    memo[key] = result
    return result


def _chunk_class_values(args: tuple[Shape, tuple[tuple[int, ...], ...]]) -> frozenset[Frac]:
    shape, labelings = args
    memo: dict = {}
    out: set[Frac] = set()
    for leaves in labelings:
        out |= _subtree_values(shape, leaves, memo)
    return frozenset(out)


def enumerate_tree_classes(
    k: int, cutoff: int | None = None, processes: int = 1
) -> ClassSet:
    """Deduplicated values of all expression trees on variables x1..xk.

    The work splits into independent (shape, labeling) units whose local
    class sets are merged by set union, so ``processes > 1`` distributes
    the units without changing the result.
    """
    _check_k(k, cutoff)
    labelings = tuple(permutations(range(1, k + 1)))
    shapes = tree_shapes(k)
    if processes <= 1:
        memo: dict = {}
        out: set[Frac] = set()
        for shape in shapes:
            for leaves in labelings:
                out |= _subtree_values(shape, leaves, memo)
        return ClassSet(k, frozenset(out))
    jobs = [(shape, labelings) for shape in shapes]
    merged: set[Frac] = set()
    with ProcessPoolExecutor(max_workers=processes) as pool:
        for part in pool.map(_chunk_class_values, jobs):
            merged |= part
    return ClassSet(k, frozenset(merged))


def oracle_count(k: int, cutoff: int | None = None, processes: int = 1) -> int:
    """Number of equivalence classes on exactly k variables, by enumeration."""
    return len(enumerate_tree_classes(k, cutoff=cutoff, processes=processes))


def iter_expression_trees(k: int, cutoff: int | None = None) -> Iterator[ExprTree]:
    """Yield every admissible expression tree on x1..xk, one by one.

    This is the literal, unbatched enumeration: all shapes, all leaf
    orders, all operator assignments, all non-stacking negation patterns.
    Far slower than ``enumerate_tree_classes`` but useful for
    cross-checking it at small k.
    """
    _check_k(k, cutoff)
    ops = (Add, Sub, Mul, Div)

    def build(shape: Shape, leaves: tuple[int, ...], ops_iter, negs_iter) -> ExprTree:
        if shape is None:
            node: ExprTree = Leaf(leaves[0])
        else:
            nl = _leaf_count(shape[0])
            left = build(shape[0], leaves[:nl], ops_iter, negs_iter)
            right = build(shape[1], leaves[nl:], ops_iter, negs_iter)
            node = next(ops_iter)(left, right)
        return Neg(node) if next(negs_iter) else node

    for shape in tree_shapes(k):
        for leaves in permutations(range(1, k + 1)):
            for op_choice in product(ops, repeat=k - 1):
                for neg_choice in product((False, True), repeat=2 * k - 1):
                    yield build(shape, leaves, iter(op_choice), iter(neg_choice))


def enumerate_tree_classes_literal(k: int, cutoff: int | None = None) -> ClassSet:
    """Class set via the one-tree-at-a-time route (slow; small k only)."""
    return ClassSet(
        k, frozenset(evaluate(t) for t in iter_expression_trees(k, cutoff))
    )


class _GrammarBuilder:
    """Structural generation of expression classes over variable subsets.

    Sum-type values on V split uniquely into the product-type summand
    containing min(V) and the remaining sum; products split into the
    numerator/denominator factor groups, counted up to sign and re-signed
    at the end.  Each class is generated exactly once -- the uniqueness
    theorems for these decompositions are what the duplicate-freedom
    tests exercise.
    """

    def __init__(self) -> None:
        self._sum: dict[frozenset[int], list[Frac]] = {}
        self._product: dict[frozenset[int], list[Frac]] = {}
        self._pi1: dict[frozenset[int], list[Frac]] = {}

    def sum_values(self, vars_: frozenset[int]) -> list[Frac]:
        got = self._sum.get(vars_)
        if got is not None:
            return got
        if len(vars_) == 1:
            x = Frac.variable(min(vars_))
            out = [x, -x]
        else:
            out = []
            anchor = min(vars_)
            rest_pool = sorted(vars_ - {anchor})
            for j in range(1, len(vars_)):
                for extra in combinations(rest_pool, j - 1):
                    head_vars = frozenset((anchor, *extra))
                    tail_vars = vars_ - head_vars
                    tails = self.all_values(tail_vars)
                    for p in self.product_values(head_vars):
                        for a in tails:
                            out.append(p + a)
        self._sum[vars_] = out
        return out

    def sum_reps(self, vars_: frozenset[int]) -> list[Frac]:
        """Sum-type classes up to sign: one representative per +/- pair."""
        return [f for f in self.sum_values(vars_) if f.positive_rep() is f]

    def pi2_reps(self, vars_: frozenset[int]) -> list[Frac]:
        """Products of >= 2 sum-type factors on disjoint variables, up to sign."""
        if len(vars_) == 1:
            return []
        out = []
        anchor = min(vars_)
        rest_pool = sorted(vars_ - {anchor})
        for j in range(1, len(vars_)):
            for extra in combinations(rest_pool, j - 1):
                head_vars = frozenset((anchor, *extra))
                tail_vars = vars_ - head_vars
                tails = self.pi1_reps(tail_vars)
                for s in self.sum_reps(head_vars):
                    for r in tails:
                        out.append((s * r).positive_rep())
        return out

    def pi1_reps(self, vars_: frozenset[int]) -> list[Frac]:
        got = self._pi1.get(vars_)
        if got is not None:
            return got
        if len(vars_) == 1:
            out = [Frac.variable(min(vars_))]
        else:
            out = self.pi2_reps(vars_) + self.sum_reps(vars_)
        self._pi1[vars_] = out
        return out

    def product_values(self, vars_: frozenset[int]) -> list[Frac]:
        got = self._product.get(vars_)
        if got is not None:
            return got
        if len(vars_) == 1:
            x = Frac.variable(min(vars_))
            out = [x, -x]
        else:
            out = []
            for q in self.pi2_reps(vars_):
                out.append(q)
                out.append(-q)
            pool = sorted(vars_)
            for j in range(1, len(vars_)):
                for chosen in combinations(pool, j):
                    num_vars = frozenset(chosen)
                    den_vars = vars_ - num_vars
                    dens = self.pi1_reps(den_vars)
                    for n in self.pi1_reps(num_vars):
                        for d in dens:
                            f = n / d
                            out.append(f)
                            out.append(-f)
        self._product[vars_] = out
        return out

    def all_values(self, vars_: frozenset[int]) -> list[Frac]:
        if len(vars_) == 1:
            x = Frac.variable(min(vars_))
            return [x, -x]
        return self.sum_values(vars_) + self.product_values(vars_)


def enumerate_grammar(
    k: int, kind: str, cutoff: int | None = None, builder: _GrammarBuilder | None = None
) -> list[Frac]:
    """Structurally generated classes on x1..xk for one grammar kind.

    ``kind`` is one of ``sum``, ``product``, ``pi1``, ``pi2`` (hyphenated
    ``sum-type`` / ``product-type`` spellings are accepted).  ``sum`` and
    ``product`` lists carry full signed classes; ``pi1`` and ``pi2`` carry
    one representative per sign pair.  List order is deterministic.
    """
    _check_k(k, cutoff)
    norm = _KIND_ALIASES.get(kind)
    if norm is None:
        raise ValueError(f"unknown grammar kind {kind!r}")
    b = builder if builder is not None else _GrammarBuilder()
    vars_ = frozenset(range(1, k + 1))
    if norm == "sum":
        return list(b.sum_values(vars_))
    if norm == "product":
        return list(b.product_values(vars_))
    if norm == "pi2":
        return list(b.pi2_reps(vars_))
    return list(b.pi1_reps(vars_))


def dump_classes(class_set: ClassSet, out: IO[str]) -> None:
    """Write one canonical fraction per line, in sorted rendering order."""
    for line in sorted(f.render() for f in class_set.classes):
        out.write(line + "\n")
