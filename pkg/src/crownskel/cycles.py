"""Alternating-cycle predicates, skeleton edges, and bounded hyperedge
enumeration over the critical pairs of a poset.

A sequence of duals (x_i, y_i) of incomparable pairs is an alternating
cycle when y_i <= x_{i+1} cyclically; it is strict when y_i <= x_j holds
exactly for j = i+1.  The hypergraph of interest has the critical pairs
as vertices and the subsets whose duals admit some strict cyclic
arrangement as edges; the skeleton keeps only the 2-element edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from collections.abc import Sequence

from .poset import CriticalPair, Element, Poset, PosetError

#: Dual of a critical pair (a, b): the tuple (b, a) = (upper, lower).
DualPair = tuple[Element, Element]

#: A hyperedge is the set of critical pairs whose duals form the cycle.
Hyperedge = frozenset[CriticalPair]

DEFAULT_MAX_CYCLE_LEN = 4
DEFAULT_SUBSET_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """The enumeration would examine more subsets than the budget allows."""


def _check_duals(poset: Poset, duals: Sequence[DualPair]) -> None:
    for x, y in duals:
        if not poset.incomparable(x, y):
            raise PosetError(f"dual ({x!r}, {y!r}) is not an incomparable pair")


def is_alternating_cycle(poset: Poset, duals: Sequence[DualPair]) -> bool:
    """True iff lower_i <= upper_{i+1} cyclically for all i."""
    _check_duals(poset, duals)
    if not duals:
        return False
    s = len(duals)
    return all(poset.leq(duals[i][1], duals[(i + 1) % s][0]) for i in range(s))


def is_strict_alternating_cycle(poset: Poset, duals: Sequence[DualPair]) -> bool:
    """True iff lower_i <= upper_j holds exactly when j = i+1 cyclically."""
    _check_duals(poset, duals)
    if not duals:
        return False
    s = len(duals)
    for i in range(s):
        for j in range(s):
            holds = poset.leq(duals[i][1], duals[j][0])
            if holds != (j == (i + 1) % s):
                return False
    return True


def _dual_arcs(poset: Poset, crit: Sequence[CriticalPair]) -> list[int]:
    """arcs[i] has bit j set iff lower_i <= upper_j (i != j)."""
    arcs = [0] * len(crit)
    for i, ci in enumerate(crit):
        for j, cj in enumerate(crit):
            if i != j and poset.leq(ci.lower, cj.upper):
                arcs[i] |= 1 << j
    return arcs


def skeleton_edges(poset: Poset, crit: Sequence[CriticalPair]) -> set[tuple[int, int]]:
    """Index pairs {i, j} whose duals form a strict 2-cycle: lower_i lies
    below upper_j and lower_j below upper_i (the pairs themselves are
    incomparable by membership in ``crit``)."""
    edges = set()
    for i in range(len(crit)):
        for j in range(i + 1, len(crit)):
            if poset.leq(crit[i].lower, crit[j].upper) and poset.leq(
                crit[j].lower, crit[i].upper
            ):
                edges.add((i, j))
    return edges


def enumerate_hyperedges(
    poset: Poset,
    crit: Sequence[CriticalPair],
    max_len: int = DEFAULT_MAX_CYCLE_LEN,
    budget: int = DEFAULT_SUBSET_BUDGET,
) -> set[Hyperedge]:
    """All subsets of ``crit`` of size 2..max_len whose duals admit some
    cyclic arrangement forming a strict alternating cycle.

    A subset qualifies exactly when the relation lower_i <= upper_j,
    restricted to the subset, is a single directed Hamiltonian cycle:
    strictness forbids every chord, so in-/out-degrees must all be 1.
    Raises BudgetExceededError up front if more than ``budget`` subsets
    would be examined.
    """
    if max_len < 2:
        raise ValueError("max_len must be >= 2")
    n = len(crit)
    total = sum(comb(n, size) for size in range(2, min(max_len, n) + 1))
    if total > budget:
        raise BudgetExceededError(
            f"enumeration needs {total} subset checks, budget is {budget}"
        )
    arcs = _dual_arcs(poset, crit)
    out: set[Hyperedge] = set()
    for size in range(2, min(max_len, n) + 1):
        for subset in combinations(range(n), size):
            mask = 0
            for i in subset:
                mask |= 1 << i
            restricted = [arcs[i] & mask for i in subset]
            if any(row.bit_count() != 1 for row in restricted):
                continue
            succ = {i: row.bit_length() - 1 for i, row in zip(subset, restricted)}
            if len(set(succ.values())) != size:
                continue
            # one out-arc and one in-arc each: check the cycle is a single orbit
            seen = 1
            node = succ[subset[0]]
            while node != subset[0]:
                node = succ[node]
                seen += 1
            if seen == size:
                out.add(frozenset(crit[i] for i in subset))
    return out


@dataclass(frozen=True)
class SkeletonGraph:
    """Simple graph on critical pairs: vertices in canonical order,
    edges as index pairs (i < j)."""

    vertices: tuple[CriticalPair, ...]
    edges: frozenset[tuple[int, int]]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def skeleton(poset: Poset, crit: Sequence[CriticalPair] | None = None) -> SkeletonGraph:
    """Skeleton of the strict hypergraph of critical pairs: only the
    2-element edges. ``crit`` fixes the vertex order; by default the
    critical pairs are sorted."""
    if crit is None:
        crit = sorted(poset.critical_pairs())
    else:
        crit = list(crit)
        if set(crit) != poset.critical_pairs() or len(set(crit)) != len(crit):
            raise PosetError("vertex list does not enumerate the critical pairs")
    return SkeletonGraph(tuple(crit), frozenset(skeleton_edges(poset, crit)))
