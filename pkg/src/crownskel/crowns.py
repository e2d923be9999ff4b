"""Constructors for generalized crowns and their layered stacks.

A generalized crown on parameters (n, k) is a height-2 poset with n+k
bottom elements and n+k top elements under cyclic indexing: top element
at position i is incomparable to the k+1 consecutive bottom positions
i..i+k (its "misses") and lies above the remaining n-1 (its "hits").
Stacking glues the top row of one copy onto the bottom row of the next
and closes transitively.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from enum import Enum

from .poset import CriticalPair, Element, Poset, PosetError


class ParameterError(ValueError):
    """Crown parameters outside the supported range."""


MIN_MODULUS = 3


def rep(pos: int, modulus: int) -> int:
    """Canonical cyclic representative of ``pos`` in 1..modulus."""
    return (pos - 1) % modulus + 1


@dataclass(frozen=True)
class CrownParams:
    """Size parameters of a layered crown: n, k and the layer count."""

    n: int
    k: int
    layers: int = 1

    @property
    def modulus(self) -> int:
        return self.n + self.k

    def validate(self, permissive: bool = False) -> None:
        floor = 2 if permissive else 3
        if self.n < floor:
            raise ParameterError(f"n must be >= {floor}, got {self.n}")
        if self.k < 0:
            raise ParameterError(f"k must be >= 0, got {self.k}")
        if self.layers < 1:
            raise ParameterError(f"layers must be >= 1, got {self.layers}")
        if self.modulus < MIN_MODULUS:
            raise ParameterError(f"n + k must be >= {MIN_MODULUS}, got {self.modulus}")


class RegimeKind(Enum):
    SINGLE_CROWN = "single-crown"
    TALL = "tall"
    WIDE_SMALL_L = "wide-small-l"
    WIDE_LARGE_L = "wide-large-l"


@dataclass(frozen=True)
class Regime:
    """Classification of (n, k, layers) by how far incomparabilities
    survive stacking.

    ``w`` is the layer reach ceil((k+1)/(n-2)); the reduced parameters
    describe the single crown the surviving incomparability pattern
    collapses to (reduced_n + reduced_k = n + k).
    """

    kind: RegimeKind
    w: int
    reduced_n: int
    reduced_k: int


def layer_reach(n: int, k: int) -> int:
    """Row distance across which incomparabilities survive stacking."""
    if n < 3:
        raise ParameterError(f"layer reach needs n >= 3, got n={n}")
    return -(-(k + 1) // (n - 2))


def classify(params: CrownParams) -> Regime:
    params.validate()
    n, k, layers = params.n, params.k, params.layers
    w = layer_reach(n, k)
    if layers == 1:
        kind = RegimeKind.SINGLE_CROWN
    elif n >= k + 3:
        kind = RegimeKind.TALL
    elif layers <= w:
        kind = RegimeKind.WIDE_SMALL_L
    else:
        kind = RegimeKind.WIDE_LARGE_L
    reach = min(layers, w)
    shrink = (reach - 1) * (n - 2)
    return Regime(kind, w, n + shrink, k - shrink)


@dataclass(frozen=True)
class CritLayout:
    """Canonical arrangement of the critical pairs of a layered crown.

    Pairs fall into ``groups`` groups; group g pairs a lower element in
    row g with an upper element ``reach`` rows higher.  Each upper
    position carries ``misses`` pairs, the lower positions walking its
    cyclic miss arc: lower pos = upper pos - reach + 1 + t.
    """

    params: CrownParams
    regime: Regime | None
    groups: int
    reach: int
    misses: int

    @property
    def modulus(self) -> int:
        return self.params.modulus

    @property
    def block_rows(self) -> int:
        return self.modulus * self.misses

    @property
    def dim(self) -> int:
        return self.groups * self.block_rows

    def group_rows(self, group: int) -> tuple[int, int]:
        return group, group + self.reach


def layout(params: CrownParams, permissive: bool = False) -> CritLayout:
    if params.n >= 3:
        regime = classify(params)
        reach = min(params.layers, regime.w)
        misses = regime.reduced_k + 1
    else:
        params.validate(permissive)
        if params.layers != 1:
            raise ParameterError("n=2 crowns support a single layer only")
        regime, reach, misses = None, 1, params.k + 1
    return CritLayout(
        params=params,
        regime=regime,
        groups=params.layers - reach + 1,
        reach=reach,
        misses=misses,
    )


def build_crown(n: int, k: int, permissive: bool = False) -> Poset:
    """The (n, k) generalized crown as a two-row poset."""
    params = CrownParams(n, k, 1)
    params.validate(permissive)
    m = params.modulus
    bottom = [Element(1, p) for p in range(1, m + 1)]
    top = [Element(2, p) for p in range(1, m + 1)]
    pairs = [
        (Element(1, rep(i + t, m)), Element(2, i))
        for i in range(1, m + 1)
        for t in range(k + 1, m)
    ]
    return Poset.from_relation(bottom + top, pairs)


def beta_layer(lower: Poset, upper: Poset, glue: Mapping[Element, Element]) -> Poset:
    """Glue ``upper`` on top of ``lower`` along the bijection ``glue``
    from max(lower) onto min(upper), then close transitively.

    Non-glued elements of ``upper`` are re-rowed so the identified row
    keeps the identities from ``lower``.
    """
    tops = lower.maximals()
    bottoms = upper.minimals()
    if set(glue.keys()) != tops:
        raise PosetError("glue map domain must be exactly the maximal elements below")
    values = list(glue.values())
    if len(set(values)) != len(values) or set(values) != bottoms:
        raise PosetError("glue map must be a bijection onto the minimal elements above")
    inverse = {v: x for x, v in glue.items()}
    shift = max(e.row for e in lower.elements) - min(e.row for e in upper.elements)

    def rename(e: Element) -> Element:
        if e in bottoms:
            return inverse[e]
        return Element(e.row + shift, e.pos)

    renamed = [rename(e) for e in upper.elements if e not in bottoms]
    base = set(lower.elements)
    for e in renamed:
        if e in base:
            raise PosetError(f"ground sets collide at {e!r} after gluing")
    elements = list(lower.elements) + renamed
    pairs = list(lower.relation_pairs())
    pairs += [(rename(a), rename(b)) for a, b in upper.relation_pairs()]
    return Poset.from_relation(elements, pairs)


def build_layered_crown(n: int, k: int, layers: int, permissive: bool = False) -> Poset:
    """``layers`` copies of the (n, k) crown glued by position identity."""
    params = CrownParams(n, k, layers)
    params.validate(permissive)
    m = params.modulus
    result = build_crown(n, k, permissive)
    for _ in range(layers - 1):
        top_row = max(e.row for e in result.elements)
        glue = {Element(top_row, p): Element(1, p) for p in range(1, m + 1)}
        result = beta_layer(result, build_crown(n, k, permissive), glue)
    return result


def row_set(poset: Poset, row: int) -> list[Element]:
    """Elements of the given row, ordered by position."""
    rows = {e.row for e in poset.elements}
    if row not in rows:
        raise PosetError(f"row {row} out of range 1..{max(rows)}")
    return sorted((e for e in poset.elements if e.row == row), key=lambda e: e.pos)


def extreme_subposet(poset: Poset, group: int, reach: int) -> Poset:
    """Induced subposet on rows ``group`` and ``group + reach``."""
    top_row = max(e.row for e in poset.elements)
    if group < 1 or reach < 1 or group + reach > top_row:
        raise PosetError(
            f"extreme subposet ({group}, {group + reach}) out of range for {top_row} rows"
        )
    keep = set(row_set(poset, group)) | set(row_set(poset, group + reach))
    return poset.induced(keep)


def iter_closed_form(lay: CritLayout) -> Iterator[tuple[int, int, int, Element, Element]]:
    """Canonical enumeration (group, upper_pos, offset, lower, upper):
    groups ascending, upper position ascending, offset along the miss arc."""
    m = lay.modulus
    for g in range(1, lay.groups + 1):
        low_row, high_row = lay.group_rows(g)
        for q in range(1, m + 1):
            upper = Element(high_row, q)
            for t in range(lay.misses):
                yield g, q, t, Element(low_row, rep(q - lay.reach + 1 + t, m)), upper


def crit_pairs_closed_form(n: int, k: int, layers: int) -> list[CriticalPair]:
    """Critical pairs of the layered crown straight from the regime
    formulas, in canonical order (no poset is built)."""
    lay = layout(CrownParams(n, k, layers))
    return [CriticalPair(lower, upper) for _, _, _, lower, upper in iter_closed_form(lay)]
