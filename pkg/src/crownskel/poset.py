"""Finite strict partial orders backed by integer bitsets.

Only the strict part of the order is stored (irreflexive, antisymmetric,
transitively closed); reflexivity is definitional and never materialised.
Posets are immutable after construction, so they can be shared freely
between threads and worker processes.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import TypeVar

T = TypeVar("T", bound=Hashable)


class PosetError(ValueError):
    """Malformed poset input: unknown elements, bad rows, broken gluing."""


class CycleError(PosetError):
    """The relation that was required to be acyclic contains a cycle."""


@dataclass(frozen=True, order=True)
class Element:
    """One node of a (layered) crown: row index plus cyclic position.

    ``row`` counts from 1 at the bottom; ``pos`` is the canonical cyclic
    representative in ``1..modulus``.
    """

    row: int
    pos: int

    def __post_init__(self) -> None:
        if self.row < 1 or self.pos < 1:
            raise PosetError(f"element indices must be >= 1, got row={self.row} pos={self.pos}")


@dataclass(frozen=True, order=True)
class CriticalPair:
    """An incomparable ordered pair (lower, upper) with nested downsets
    and upsets: D(lower) is contained in D(upper) and U(upper) in U(lower)."""

    lower: Element
    upper: Element


def _close_in_place(succ: list[int]) -> None:
    # Floyd-Warshall reachability over bitset rows.
    for mid in range(len(succ)):
        bit = 1 << mid
        row = succ[mid]
        if not row:
            continue
        for i in range(len(succ)):
            if succ[i] & bit:
                succ[i] |= row


def transitive_closure(
    pairs: Iterable[tuple[T, T]], elements: Iterable[T] = ()
) -> frozenset[tuple[T, T]]:
    """Smallest transitive superset of ``pairs``.

    Raises CycleError if the input is cyclic (a self-pair counts as a
    cycle); the closure of a cyclic relation would break antisymmetry.
    """
    order: list[T] = []
    seen: set[T] = set()
    for x in elements:
        if x not in seen:
            seen.add(x)
            order.append(x)
    pair_list = list(pairs)
    for a, b in pair_list:
        for x in (a, b):
            if x not in seen:
                seen.add(x)
                order.append(x)
    index = {x: i for i, x in enumerate(order)}
    succ = [0] * len(order)
    for a, b in pair_list:
        succ[index[a]] |= 1 << index[b]
    _close_in_place(succ)
    for i, row in enumerate(succ):
        if (row >> i) & 1:
            raise CycleError(f"relation has a cycle through {order[i]!r}")
    out: set[tuple[T, T]] = set()
    for i, row in enumerate(succ):
        while row:
            low = row & -row
            out.add((order[i], order[low.bit_length() - 1]))
            row ^= low
    return frozenset(out)


class Poset:
    """Immutable finite poset over :class:`Element` values.

    Build via :meth:`from_relation`, which closes the given strict
    relation and rejects cyclic input.
    """

    __slots__ = ("elements", "_index", "_up", "_down")

    def __init__(self, elements: tuple[Element, ...], up: tuple[int, ...]):
        self.elements = elements
        self._index = {e: i for i, e in enumerate(elements)}
        if len(self._index) != len(elements):
            raise PosetError("duplicate elements in ground set")
        self._up = up
        down = [0] * len(elements)
        for i, row in enumerate(up):
            r = row
            while r:
                low = r & -r
                down[low.bit_length() - 1] |= 1 << i
                r ^= low
        self._down = tuple(down)

    @classmethod
    def from_relation(
        cls,
        elements: Sequence[Element],
        pairs: Iterable[tuple[Element, Element]],
    ) -> "Poset":
        """Poset on ``elements`` whose order is the transitive closure of
        ``pairs`` (each pair meaning lower < upper)."""
        elements = tuple(elements)
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != len(elements):
            raise PosetError("duplicate elements in ground set")
        succ = [0] * len(elements)
        for a, b in pairs:
            if a not in index or b not in index:
                raise PosetError(f"relation mentions unknown element {a!r} or {b!r}")
            succ[index[a]] |= 1 << index[b]
        _close_in_place(succ)
        for i, row in enumerate(succ):
            if (row >> i) & 1:
                raise CycleError(f"relation has a cycle through {elements[i]!r}")
        return cls(elements, tuple(succ))

    # -- basic queries ------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Element) -> bool:
        return x in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self._up == other._up

    def __hash__(self) -> int:
        return hash((self.elements, self._up))

    def __repr__(self) -> str:
        return f"Poset({len(self.elements)} elements, {self.relation_size()} relations)"

    def index(self, x: Element) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise PosetError(f"unknown element {x!r}") from None

    def lt(self, x: Element, y: Element) -> bool:
        """True iff x < y strictly."""
        return (self._up[self.index(x)] >> self.index(y)) & 1 == 1

    def leq(self, x: Element, y: Element) -> bool:
        """True iff x = y or x < y."""
        return x == y or self.lt(x, y)

    def incomparable(self, x: Element, y: Element) -> bool:
        return x != y and not self.lt(x, y) and not self.lt(y, x)

    def relation_size(self) -> int:
        return sum(row.bit_count() for row in self._up)

    def relation_pairs(self) -> Iterator[tuple[Element, Element]]:
        """All strict pairs (x, y) with x < y."""
        for i, row in enumerate(self._up):
            while row:
                low = row & -row
                yield self.elements[i], self.elements[low.bit_length() - 1]
                row ^= low

    def _mask_elements(self, mask: int) -> frozenset[Element]:
        out = []
        while mask:
            low = mask & -mask
            out.append(self.elements[low.bit_length() - 1])
            mask ^= low
        return frozenset(out)

    def downset(self, x: Element) -> frozenset[Element]:
        """Strict downset {y : y < x}."""
        return self._mask_elements(self._down[self.index(x)])

    def upset(self, x: Element) -> frozenset[Element]:
        """Strict upset {y : x < y}."""
        return self._mask_elements(self._up[self.index(x)])

    def minimals(self) -> frozenset[Element]:
        return frozenset(e for i, e in enumerate(self.elements) if not self._down[i])

    def maximals(self) -> frozenset[Element]:
        return frozenset(e for i, e in enumerate(self.elements) if not self._up[i])

    def incomparable_pairs(self) -> frozenset[tuple[Element, Element]]:
        """All unordered incomparable pairs, each reported as (min, max)
        in element sort order."""
        out = set()
        for i in range(len(self.elements)):
            for j in range(i + 1, len(self.elements)):
                if not ((self._up[i] >> j) & 1) and not ((self._up[j] >> i) & 1):
                    a, b = self.elements[i], self.elements[j]
                    out.add((a, b) if a < b else (b, a))
        return frozenset(out)

    def induced(self, subset: Iterable[Element]) -> "Poset":
        """Restriction of the order to ``subset`` (parent element order kept)."""
        want = set(subset)
        for x in want:
            if x not in self._index:
                raise PosetError(f"unknown element {x!r}")
        kept = [i for i, e in enumerate(self.elements) if e in want]
        up = []
        for a in kept:
            row = 0
            for slot, b in enumerate(kept):
                if (self._up[a] >> b) & 1:
                    row |= 1 << slot
            up.append(row)
        return Poset(tuple(self.elements[i] for i in kept), tuple(up))

    def covers(self) -> list[tuple[Element, Element]]:
        """Cover relation: x < y with nothing strictly between."""
        out = []
        for i in range(len(self.elements)):
            row = self._up[i]
            while row:
                low = row & -row
                j = low.bit_length() - 1
                row ^= low
                if not (self._up[i] & self._down[j]):
                    out.append((self.elements[i], self.elements[j]))
        return out

    def critical_pairs(self, proper: bool = False) -> frozenset[CriticalPair]:
        """All critical pairs (x, y): x incomparable to y, D(x) contained
        in D(y), U(y) contained in U(x).

        With ``proper=True`` both containments are additionally required
        to be strict.
        """
        out = set()
        n = len(self.elements)
        up, down = self._up, self._down
        for i in range(n):
            for j in range(n):
                if i == j or (up[i] >> j) & 1 or (up[j] >> i) & 1:
                    continue
                if down[i] & ~down[j] or up[j] & ~up[i]:
                    continue
                if proper and (down[i] == down[j] or up[i] == up[j]):
                    continue
                out.add(CriticalPair(self.elements[i], self.elements[j]))
        return frozenset(out)
