"""Differential verification: closed form against the exhaustive oracle.

``verify`` compares the formula matrix with the oracle matrix entry by
entry and the closed-form critical pairs with the brute-force set; it
also records how the pair count changes when the containment tests are
required to be proper (the delta is zero on every crown in range).
``sweep`` runs verify over a parameter box, optionally across a process
pool.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from collections.abc import Iterator

from .crowns import CrownParams, build_layered_crown, layout
from .matrix import MODE_CORRECTED, MODES, adjacency_oracle, layered_matrix
from .crowns import ParameterError
from .serialize import pair_label


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one formula-vs-oracle comparison.

    ``mismatches`` holds (row label, column label, formula bit, oracle
    bit) for every differing entry; it is empty iff the matrices are
    equal (when the critical-pair sets disagree no entrywise comparison
    is possible and only ``crit_set_match``/``dimensions_match`` speak).
    """

    params: CrownParams
    mode: str
    dimensions_match: bool
    mismatches: tuple[tuple[str, str, int, int], ...]
    crit_set_match: bool
    strict_vs_nonstrict_delta: int

    @property
    def ok(self) -> bool:
        return self.dimensions_match and not self.mismatches and self.crit_set_match

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        p = self.params
        return (
            f"{status} n={p.n} k={p.k} l={p.layers} mode={self.mode} "
            f"dims_match={self.dimensions_match} mismatches={len(self.mismatches)} "
            f"crit_match={self.crit_set_match} delta={self.strict_vs_nonstrict_delta}"
        )


def verify(n: int, k: int, layers: int, mode: str = MODE_CORRECTED) -> VerifyReport:
    """Compare the closed-form matrix and critical pairs with the oracle."""
    if mode not in MODES:
        raise ParameterError(f"unknown mode {mode!r}; expected one of {MODES}")
    params = CrownParams(n, k, layers)
    lay = layout(params)
    formula = layered_matrix(n, k, layers, mode)
    poset = build_layered_crown(n, k, layers)
    oracle_crit = poset.critical_pairs()
    delta = len(oracle_crit) - len(poset.critical_pairs(proper=True))
    closed_pairs = [label.pair for label in formula.labels]
    crit_set_match = (
        len(set(closed_pairs)) == len(closed_pairs) and set(closed_pairs) == oracle_crit
    )
    single = layers == 1
    if not crit_set_match:
        return VerifyReport(
            params=params,
            mode=mode,
            dimensions_match=formula.dim == len(oracle_crit),
            mismatches=(),
            crit_set_match=False,
            strict_vs_nonstrict_delta=delta,
        )
    oracle = adjacency_oracle(poset, formula.labels, params, lay.regime, lay.block_rows)
    mismatches: list[tuple[str, str, int, int]] = []
    if formula.entries != oracle.entries:
        names = [pair_label(p, single) for p in closed_pairs]
        for i, (frow, orow) in enumerate(zip(formula.entries, oracle.entries)):
            if frow == orow:
                continue
            for j, (fbit, obit) in enumerate(zip(frow, orow)):
                if fbit != obit:
                    mismatches.append((names[i], names[j], fbit, obit))
    return VerifyReport(
        params=params,
        mode=mode,
        dimensions_match=True,
        mismatches=tuple(mismatches),
        crit_set_match=True,
        strict_vs_nonstrict_delta=delta,
    )


@dataclass(frozen=True)
class SweepResult:
    reports: tuple[VerifyReport, ...]
    complete: bool

    @property
    def all_ok(self) -> bool:
        return all(r.ok for r in self.reports)

    @property
    def failures(self) -> tuple[VerifyReport, ...]:
        return tuple(r for r in self.reports if not r.ok)


def sweep_tuples(
    n_max: int, k_max: int, l_max: int, nk_max: int | None = None
) -> Iterator[tuple[int, int, int]]:
    for n in range(3, n_max + 1):
        for k in range(0, k_max + 1):
            if nk_max is not None and n + k > nk_max:
                continue
            for layers in range(1, l_max + 1):
                yield n, k, layers


def _verify_star(args: tuple[int, int, int, str]) -> VerifyReport:
    n, k, layers, mode = args
    return verify(n, k, layers, mode)


def sweep(
    n_max: int,
    k_max: int,
    l_max: int,
    nk_max: int | None = None,
    mode: str = MODE_CORRECTED,
    budget: int | None = None,
    jobs: int = 1,
) -> SweepResult:
    """Verify every tuple in the box; output order follows tuple order.

    With a ``budget`` smaller than the tuple count only the first
    ``budget`` tuples run and the result is flagged incomplete.
    """
    tuples = list(sweep_tuples(n_max, k_max, l_max, nk_max))
    complete = True
    if budget is not None and len(tuples) > budget:
        tuples = tuples[:budget]
        complete = False
    work = [(n, k, layers, mode) for n, k, layers in tuples]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = tuple(pool.map(_verify_star, work))
    else:
        reports = tuple(_verify_star(item) for item in work)
    return SweepResult(reports, complete)
