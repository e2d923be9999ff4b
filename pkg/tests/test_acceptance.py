"""Acceptance battery: one test per criterion, each printing a PASS or
FAIL line (run with ``pytest -s`` to see them stream).

All comparisons are exact; the two timed criteria assert their stated
wall-clock bounds.
"""

import io
import time
from contextlib import contextmanager, redirect_stdout

from crownskel import (
    CriticalPair,
    CrownParams,
    Element,
    MODE_LITERAL,
    RegimeKind,
    build_crown,
    build_layered_crown,
    canonical_labels,
    classify,
    count_nonzero_block,
    crit_pairs_closed_form,
    layered_matrix,
    rep,
    single_block,
    skeleton,
    verify,
)
from crownskel.cli import main
from crownskel.serialize import pair_label

from goldens import (
    A_3_1_L3,
    A_3_1_L4,
    A_3_1_L5,
    A_6_1,
    A_6_1_LABELS,
    CRIT_3_1_L3,
    CRIT_6_1,
)


@contextmanager
def criterion(num: int, description: str):
    try:
        yield
    except BaseException:
        print(f"[criterion {num}] FAIL - {description}", flush=True)
        raise
    print(f"[criterion {num}] PASS - {description}", flush=True)


def run_cli(*argv: str) -> tuple[int, str]:
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = main(list(argv))
    return code, buffer.getvalue()


def parse_pretty(text: str) -> tuple[list[str], list[str], list[str]]:
    lines = [line for line in text.splitlines() if line]
    header = lines[0].split()
    row_labels, rows = [], []
    for line in lines[1:]:
        parts = line.split()
        row_labels.append(parts[0])
        rows.append("".join(parts[1:]))
    return header, row_labels, rows


def sweep_range():
    for n in range(3, 11):
        for k in range(0, 11 - n):
            if k > 6:
                continue
            for layers in range(1, 7):
                yield n, k, layers


def test_criterion_1_single_crown_golden_matrix():
    with criterion(1, "14x14 single-crown matrix, both methods, < 1 s"):
        start = time.perf_counter()
        code, out = run_cli(
            "matrix", "-n", "6", "-k", "1", "-l", "1", "--method", "both"
        )
        elapsed = time.perf_counter() - start
        assert code == 0
        header, row_labels, rows = parse_pretty(out)
        assert header == list(A_6_1_LABELS)
        assert row_labels == list(A_6_1_LABELS)
        assert rows == list(A_6_1)
        assert elapsed < 1.0, f"took {elapsed:.3f}s"


def test_criterion_2_layered_golden_matrices():
    goldens = {3: A_3_1_L3, 4: A_3_1_L4, 5: A_3_1_L5}
    with criterion(2, "layered (3,1) matrices for 3, 4, 5 layers, both methods, < 1 s each"):
        for layers, golden in goldens.items():
            start = time.perf_counter()
            code, out = run_cli(
                "matrix", "-n", "3", "-k", "1", "-l", str(layers), "--method", "both"
            )
            elapsed = time.perf_counter() - start
            assert code == 0
            _, _, rows = parse_pretty(out)
            assert rows == list(golden), f"layers={layers}"
            assert elapsed < 1.0, f"layers={layers} took {elapsed:.3f}s"


def test_criterion_3_critical_pair_goldens():
    with criterion(3, "critical-pair goldens for (3,0), (6,1) and the 3-layer (3,1) stack"):
        assert build_crown(3, 0).critical_pairs() == {
            CriticalPair(Element(1, p), Element(2, p)) for p in (1, 2, 3)
        }

        listed = crit_pairs_closed_form(6, 1, 1)
        assert [(p.lower.pos, p.upper.pos) for p in listed] == list(CRIT_6_1)
        assert set(listed) == build_crown(6, 1).critical_pairs()

        stacked = crit_pairs_closed_form(3, 1, 3)
        assert [
            (p.lower.row, p.lower.pos, p.upper.row, p.upper.pos) for p in stacked
        ] == list(CRIT_3_1_L3)
        assert set(stacked) == build_layered_crown(3, 1, 3).critical_pairs()


def test_criterion_4_hypergraph_golden():
    with criterion(4, "permissive (2,1) crown: 3 graph edges plus 2 strict 3-cycles"):
        code, out = run_cli(
            "hyper", "-n", "2", "-k", "1", "-l", "1",
            "--permissive", "--max-cycle-len", "3",
        )
        assert code == 0
        assert out.splitlines() == [
            "b1a1 b2a3",
            "b1a2 b3a3",
            "b2a2 b3a1",
            "b1a1 b2a2 b3a3",
            "b1a2 b2a3 b3a1",
        ]


def test_criterion_5_differential_sweep():
    with criterion(5, "sweep n+k <= 10, k <= 6, layers <= 6: zero mismatches, < 5 min"):
        start = time.perf_counter()
        code, out = run_cli(
            "sweep", "--n-max", "10", "--k-max", "6", "--l-max", "6",
            "--nk-max", "10",
        )
        elapsed = time.perf_counter() - start
        assert code == 0
        lines = out.splitlines()
        assert lines[-1] == "sweep: 210 tuples, 210 pass, 0 fail (complete)"
        assert all(line.startswith("PASS") for line in lines[:-1])
        assert elapsed < 300.0, f"took {elapsed:.1f}s"


def test_criterion_6_block_count_closed_form():
    with criterion(6, "block popcounts equal the closed-form squared count on every block"):
        for n in range(3, 11):
            for k in range(0, 11 - n):
                m = n + k
                for i in range(1, m + 1):
                    for j in range(1, m + 1):
                        block = single_block(i, j, n, k)
                        assert count_nonzero_block(i, j, n, k) == sum(
                            map(sum, block)
                        ), (n, k, i, j)


def test_criterion_7_literal_mode_discrepancy_is_diagonal():
    with criterion(7, "literal mode disagrees exactly on tall diagonal blocks"):
        literal = verify(6, 1, 2, MODE_LITERAL)
        assert not literal.ok
        assert literal.crit_set_match and literal.dimensions_match
        assert len(literal.mismatches) > 0
        group_of = {
            pair_label(label.pair, False): label.group
            for label in canonical_labels(6, 1, 2)
        }
        for row, col, formula_bit, oracle_bit in literal.mismatches:
            assert group_of[row] == group_of[col]
            assert formula_bit == 0 and oracle_bit == 1

        corrected = verify(6, 1, 2)
        assert corrected.ok and not corrected.mismatches


def _block(entries, side, gi, gj):
    base_r, base_c = (gi - 1) * side, (gj - 1) * side
    return [row[base_c : base_c + side] for row in entries[base_r : base_r + side]]


def test_criterion_8_property_suite():
    with criterion(8, "symmetry, zero diagonal, circulance, block row sums, shift invariance"):
        for n, k, layers in sweep_range():
            mat = layered_matrix(n, k, layers)
            dim = mat.dim
            entries = mat.entries
            assert all(entries[i][i] == 0 for i in range(dim)), (n, k, layers)
            assert entries == tuple(zip(*entries)), (n, k, layers)

            # relabelling every position one step around the cycle fixes
            # the matrix
            m = n + k
            position = {
                (lab.group, lab.upper_pos, lab.offset): idx
                for idx, lab in enumerate(mat.labels)
            }
            perm = [
                position[(lab.group, rep(lab.upper_pos + 1, m), lab.offset)]
                for lab in mat.labels
            ]
            for i in range(dim):
                permuted = entries[perm[i]]
                original = entries[i]
                for j in range(dim):
                    if original[j] != permuted[perm[j]]:
                        raise AssertionError((n, k, layers, i, j))

            regime = classify(CrownParams(n, k, layers))
            side = mat.block_rows
            groups = dim // side
            if layers > 1 and regime.kind is RegimeKind.TALL:
                for g in range(1, groups):
                    for row in _block(entries, side, g, g + 1):
                        assert sum(row) == k + 1, (n, k, layers, g)
            if regime.kind is RegimeKind.WIDE_LARGE_L:
                w = regime.w
                expected_per_r = {
                    r: (regime.reduced_k + 1) * ((w - r) * (n - 2) + 1)
                    for r in range(1, w)
                }
                for gi in range(1, groups + 1):
                    for gj in range(1, groups + 1):
                        r = abs(gi - gj)
                        if 0 < r < w:
                            for row in _block(entries, side, gi, gj):
                                assert sum(row) == expected_per_r[r], (n, k, layers, gi, gj)

        # block circulance of the single-crown grid
        for n in range(3, 11):
            for k in range(0, min(6, 10 - n) + 1):
                m = n + k
                for i in range(1, m + 1):
                    for j in range(1, m + 1):
                        assert single_block(i, j, n, k) == single_block(
                            rep(i + 1, m), rep(j + 1, m), n, k
                        )

        # oracle skeletons are invariant under the same position shift
        for n in range(3, 11):
            for k in range(0, min(6, 10 - n) + 1):
                poset = build_layered_crown(n, k, 1)
                pairs = [label.pair for label in canonical_labels(n, k)]
                graph = skeleton(poset, pairs)
                m = n + k
                index = {p: i for i, p in enumerate(pairs)}

                def shifted(pair):
                    return CriticalPair(
                        Element(pair.lower.row, rep(pair.lower.pos + 1, m)),
                        Element(pair.upper.row, rep(pair.upper.pos + 1, m)),
                    )

                for i, j in graph.edges:
                    si, sj = index[shifted(pairs[i])], index[shifted(pairs[j])]
                    assert (min(si, sj), max(si, sj)) in graph.edges
