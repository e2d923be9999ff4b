"""Skeleton adjacency matrices of layered crowns: closed-form block
construction alongside an exhaustive oracle.

Rows and columns carry the canonical critical-pair labels.  The closed
form assembles the matrix from cyclic-interval membership tests; the
oracle recomputes every entry from the strict 2-cycle test on a freshly
built poset.  The two agree, and ``verify``/``sweep`` in the report
module prove it tuple by tuple.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from collections.abc import Iterator, Sequence

from .crowns import (
    CritLayout,
    CrownParams,
    ParameterError,
    Regime,
    RegimeKind,
    iter_closed_form,
    build_layered_crown,
    layer_reach,
    layout,
    rep,
)
from .cycles import skeleton_edges
from .poset import CriticalPair, Element, Poset

MODE_CORRECTED = "corrected"
MODE_LITERAL = "paper-literal-s3"
MODES = (MODE_CORRECTED, MODE_LITERAL)

Entries = tuple[tuple[int, ...], ...]


class LabelMismatchError(ValueError):
    """The given labels do not enumerate the poset's critical pairs."""


class MatrixMismatchError(RuntimeError):
    """Closed form and oracle disagree where they were asserted equal."""


@dataclass(frozen=True)
class CycInterval:
    """Ascending cyclic walk start..end over representatives 1..modulus."""

    modulus: int
    start: int
    end: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ParameterError("modulus must be >= 1")
        object.__setattr__(self, "start", rep(self.start, self.modulus))
        object.__setattr__(self, "end", rep(self.end, self.modulus))

    def __contains__(self, pos: int) -> bool:
        return (pos - self.start) % self.modulus <= (self.end - self.start) % self.modulus

    def __len__(self) -> int:
        return (self.end - self.start) % self.modulus + 1

    def members(self) -> Iterator[int]:
        for step in range(len(self)):
            yield rep(self.start + step, self.modulus)


def hit_interval(pos: int, n: int, k: int) -> CycInterval:
    """Positions one crown step below top position ``pos``: the n-1 hits,
    starting right after the miss arc."""
    return CycInterval(n + k, pos + k + 1, pos + n + k - 1)


def miss_interval(pos: int, n: int, k: int) -> CycInterval:
    """The k+1 bottom positions incomparable to top position ``pos``."""
    return CycInterval(n + k, pos, pos + k)


@dataclass(frozen=True)
class Label:
    """Row/column label of the adjacency matrix: a critical pair resolved
    from (group, upper position, offset along the miss arc)."""

    group: int
    upper_pos: int
    offset: int
    lower: Element
    upper: Element

    @property
    def pair(self) -> CriticalPair:
        return CriticalPair(self.lower, self.upper)


@dataclass(frozen=True)
class AdjMatrix:
    """Labeled symmetric 0/1 matrix over the canonical critical-pair
    order. ``block_rows`` is the size of one group block."""

    params: CrownParams | None
    regime: Regime | None
    labels: tuple[Label, ...]
    entries: Entries
    block_rows: int

    @property
    def dim(self) -> int:
        return len(self.labels)

    def popcount(self) -> int:
        return sum(sum(row) for row in self.entries)


def canonical_labels(
    n: int, k: int, layers: int = 1, permissive: bool = False
) -> list[Label]:
    """Canonical matrix labels: group ascending, then upper position,
    then offset along the upper element's cyclic miss arc."""
    lay = layout(CrownParams(n, k, layers), permissive)
    return [
        Label(group, q, t, lower, upper)
        for group, q, t, lower, upper in iter_closed_form(lay)
    ]


def _check_block_indices(i: int, j: int, n: int, k: int) -> None:
    CrownParams(n, k, 1).validate()
    if not (1 <= i <= n + k and 1 <= j <= n + k):
        raise ParameterError(f"block index ({i}, {j}) out of range 1..{n + k}")


def single_block(i: int, j: int, n: int, k: int) -> Entries:
    """(k+1) x (k+1) block of the single-crown matrix: rows are the pairs
    with upper position i, columns those with upper position j.

    Entry (u, v) is 1 iff u lies on the hit arc of j and v on the hit arc
    of i; for i = j the arcs avoid the windows entirely and the block is
    zero.
    """
    _check_block_indices(i, j, n, k)
    m = n + k
    u_hits = hit_interval(j, n, k)
    v_hits = hit_interval(i, n, k)
    rows = []
    for s in range(k + 1):
        u = rep(i + s, m)
        if u in u_hits:
            rows.append(tuple(1 if rep(j + t, m) in v_hits else 0 for t in range(k + 1)))
        else:
            rows.append((0,) * (k + 1))
    return tuple(rows)


def _window_hit_overlap(d: int, n: int, k: int) -> int:
    # size of a (k+1)-wide miss window intersected with a hit arc d steps ahead
    return (k + 1) - max(0, k + 1 - d) - max(0, d - (n - 1))


def count_nonzero_block(i: int, j: int, n: int, k: int) -> int:
    """Closed-form popcount of ``single_block(i, j, n, k)``: the product
    of the two window/hit-arc overlaps, a clipped squared-distance count."""
    _check_block_indices(i, j, n, k)
    m = n + k
    d = (j - i) % m
    if d == 0:
        return 0
    return _window_hit_overlap(d, n, k) * _window_hit_overlap(m - d, n, k)


def _zeros(rows: int, cols: int) -> list[list[int]]:
    return [[0] * cols for _ in range(rows)]


def _transpose(block: Entries) -> Entries:
    return tuple(tuple(col) for col in zip(*block))


def single_matrix(n: int, k: int) -> AdjMatrix:
    """Full single-crown adjacency matrix assembled from its blocks.

    The block pattern depends only on the cyclic distance between block
    indices, so one pattern per distance is placed around the grid.
    """
    params = CrownParams(n, k, 1)
    lay = layout(params)
    m, width = params.modulus, k + 1
    pattern = {d: single_block(1, rep(1 + d, m), n, k) for d in range(m)}
    entries = _zeros(lay.dim, lay.dim)
    for bi in range(m):
        for bj in range(m):
            block = pattern[(bj - bi) % m]
            for s in range(width):
                entries[bi * width + s][bj * width : (bj + 1) * width] = block[s]
    return AdjMatrix(
        params=params,
        regime=lay.regime,
        labels=tuple(canonical_labels(n, k, 1)),
        entries=tuple(tuple(row) for row in entries),
        block_rows=lay.block_rows,
    )


def wide_block(i: int, j: int, n: int, k: int, w: int) -> Entries:
    """Group block (i, j) of a layered matrix with layer reach ``w``.

    With r = |i - j|: r = 0 gives the reduced single-crown matrix; for
    0 < r < w the entry for row (.., upper pos beta) and column (lower
    pos gamma, ..) is 1 iff gamma lies on the cyclic interval
    [beta - (w-r)(n-1), beta - w + r]; for r = w it is 1 iff beta equals
    gamma; beyond w the block is zero.
    """
    CrownParams(n, k, 1).validate()
    if i < 1 or j < 1 or w < 1:
        raise ParameterError(f"block index ({i}, {j}) with reach {w} out of range")
    shrink = (w - 1) * (n - 2)
    if k - shrink < 0:
        raise ParameterError(f"reach {w} too large for (n, k) = ({n}, {k})")
    reduced_n, reduced_k = n + shrink, k - shrink
    m = n + k
    misses = reduced_k + 1
    side = m * misses
    r = abs(i - j)
    if r == 0:
        return single_matrix(reduced_n, reduced_k).entries
    if r > w:
        return tuple((0,) * side for _ in range(side))
    if i > j:
        return _transpose(wide_block(j, i, n, k, w))
    rows = []
    for beta in range(1, m + 1):
        if r == w:
            ok = CycInterval(m, beta, beta)
        else:
            ok = CycInterval(m, beta - (w - r) * (n - 1), beta - w + r)
        row = []
        for delta in range(1, m + 1):
            for t in range(misses):
                gamma = rep(delta - w + 1 + t, m)
                row.append(1 if gamma in ok else 0)
        rows.extend([tuple(row)] * misses)
    return tuple(rows)


def layered_matrix(n: int, k: int, layers: int, mode: str = MODE_CORRECTED) -> AdjMatrix:
    """Closed-form adjacency matrix of the layered crown.

    ``mode=corrected`` (default) fills the diagonal blocks of the tall
    regime with the single-crown matrix, which is what the exhaustive
    oracle produces.  ``mode=paper-literal-s3`` keeps those diagonal
    blocks zero instead, reproducing an alternate closed form that only
    records cross-layer edges; ``verify`` shows exactly where the two
    disagree.
    """
    if mode not in MODES:
        raise ParameterError(f"unknown mode {mode!r}; expected one of {MODES}")
    params = CrownParams(n, k, layers)
    lay = layout(params)
    labels = tuple(canonical_labels(n, k, layers))
    assert lay.regime is not None
    if layers == 1:
        entries = single_matrix(n, k).entries
    elif lay.regime.kind is RegimeKind.WIDE_SMALL_L:
        entries = single_matrix(lay.regime.reduced_n, lay.regime.reduced_k).entries
    else:
        side = lay.block_rows
        grid = _zeros(lay.dim, lay.dim)
        for gi in range(1, lay.groups + 1):
            for gj in range(1, lay.groups + 1):
                if (
                    mode == MODE_LITERAL
                    and lay.regime.kind is RegimeKind.TALL
                    and gi == gj
                ):
                    continue
                block = wide_block(gi, gj, n, k, lay.reach)
                base_r, base_c = (gi - 1) * side, (gj - 1) * side
                for s in range(side):
                    grid[base_r + s][base_c : base_c + side] = block[s]
        entries = tuple(tuple(row) for row in grid)
    return AdjMatrix(params, lay.regime, labels, entries, lay.block_rows)


def adjacency_oracle(
    poset: Poset,
    labels: Sequence[Label],
    params: CrownParams | None = None,
    regime: Regime | None = None,
    block_rows: int | None = None,
) -> AdjMatrix:
    """Adjacency matrix recomputed entry by entry from the strict
    2-cycle test.  ``labels`` must enumerate the poset's critical pairs
    bijectively."""
    pairs = [label.pair for label in labels]
    if len(set(pairs)) != len(pairs) or set(pairs) != poset.critical_pairs():
        raise LabelMismatchError("labels do not enumerate the critical pairs")
    dim = len(pairs)
    grid = _zeros(dim, dim)
    for i, j in skeleton_edges(poset, pairs):
        grid[i][j] = grid[j][i] = 1
    return AdjMatrix(
        params=params,
        regime=regime,
        labels=tuple(labels),
        entries=tuple(tuple(row) for row in grid),
        block_rows=block_rows if block_rows is not None else dim,
    )


def oracle_matrix(n: int, k: int, layers: int, permissive: bool = False) -> AdjMatrix:
    """Build the layered crown and run the exhaustive oracle on it."""
    lay = layout(CrownParams(n, k, layers), permissive)
    poset = build_layered_crown(n, k, layers, permissive)
    labels = canonical_labels(n, k, layers, permissive)
    return adjacency_oracle(poset, labels, lay.params, lay.regime, lay.block_rows)


@dataclass(frozen=True)
class BenchReport:
    params: CrownParams
    dimension: int
    formula_seconds: float
    oracle_seconds: float


def bench(n: int, k: int, layers: int, mode: str = MODE_CORRECTED) -> BenchReport:
    """Time the closed form against the oracle; equality of the two
    matrices is asserted before any timing is reported."""
    start = time.perf_counter()
    formula = layered_matrix(n, k, layers, mode)
    formula_seconds = time.perf_counter() - start
    start = time.perf_counter()
    oracle = oracle_matrix(n, k, layers)
    oracle_seconds = time.perf_counter() - start
    if formula.labels != oracle.labels or formula.entries != oracle.entries:
        raise MatrixMismatchError(
            f"closed form and oracle disagree for (n, k, layers) = ({n}, {k}, {layers})"
        )
    return BenchReport(formula.params, formula.dim, formula_seconds, oracle_seconds)
