from itertools import permutations

import pytest

from crownskel import (
    BudgetExceededError,
    CriticalPair,
    PosetError,
    build_crown,
    build_layered_crown,
    canonical_labels,
    enumerate_hyperedges,
    is_alternating_cycle,
    is_strict_alternating_cycle,
    skeleton,
    skeleton_edges,
)

from conftest import chain, el
from goldens import S_2_1_EDGES, S_2_1_TRIPLES


def crown_crit(n, k, layers=1, permissive=False):
    poset = build_layered_crown(n, k, layers, permissive)
    pairs = [label.pair for label in canonical_labels(n, k, layers, permissive)]
    assert set(pairs) == poset.critical_pairs()
    return poset, pairs


def dual(p, q):
    # (upper, lower) for the crown pair (a_p, b_q)
    return el(2, q), el(1, p)


def test_alternating_cycle_on_smallest_crown():
    crown = build_crown(3, 0)
    assert is_alternating_cycle(crown, [dual(3, 3), dual(2, 2), dual(1, 1)])
    assert is_alternating_cycle(crown, [dual(2, 2), dual(1, 1)])
    assert not is_alternating_cycle(crown, [dual(1, 1)])


def test_alternating_cycle_rejects_comparable_input():
    crown = build_crown(3, 0)
    with pytest.raises(PosetError):
        is_alternating_cycle(crown, [(el(2, 1), el(1, 2))])
    with pytest.raises(PosetError):
        is_strict_alternating_cycle(crown, [(el(2, 1), el(1, 2))])


def test_strict_alternating_cycle_on_smallest_crown():
    crown = build_crown(3, 0)
    assert is_strict_alternating_cycle(crown, [dual(2, 2), dual(1, 1)])
    assert not is_strict_alternating_cycle(
        crown, [dual(3, 3), dual(2, 2), dual(1, 1)]
    )


def test_strict_three_cycle_in_permissive_crown():
    crown = build_layered_crown(2, 1, 1, permissive=True)
    seq = [dual(1, 1), dual(2, 2), dual(3, 3)]
    assert is_strict_alternating_cycle(crown, seq)
    assert is_alternating_cycle(crown, seq)


def test_empty_sequence_is_not_a_cycle():
    crown = build_crown(3, 0)
    assert not is_alternating_cycle(crown, [])
    assert not is_strict_alternating_cycle(crown, [])


def test_skeleton_edges_permissive_crown_exact():
    poset, pairs = crown_crit(2, 1, permissive=True)
    assert skeleton_edges(poset, pairs) == {(0, 3), (1, 4), (2, 5)}


def test_skeleton_edges_smallest_crown_is_a_triangle():
    poset, pairs = crown_crit(3, 0)
    assert skeleton_edges(poset, pairs) == {(0, 1), (0, 2), (1, 2)}


def test_skeleton_edge_present_in_six_one_crown():
    poset, pairs = crown_crit(6, 1)
    assert pairs[0] == CriticalPair(el(1, 1), el(2, 1))
    assert pairs[3] == CriticalPair(el(1, 3), el(2, 2))
    assert (0, 3) in skeleton_edges(poset, pairs)


def test_no_edge_joins_pairs_with_the_same_upper():
    for n, k, layers in [(6, 1, 1), (3, 1, 3), (4, 1, 2)]:
        poset, pairs = crown_crit(n, k, layers)
        for i, j in skeleton_edges(poset, pairs):
            assert pairs[i].upper != pairs[j].upper


def test_strict_two_cycles_match_the_four_condition_test():
    poset, pairs = crown_crit(6, 1)
    edges = skeleton_edges(poset, pairs)
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            duals = [
                (pairs[i].upper, pairs[i].lower),
                (pairs[j].upper, pairs[j].lower),
            ]
            assert is_strict_alternating_cycle(poset, duals) == ((i, j) in edges)


def test_hyperedges_permissive_crown():
    poset, pairs = crown_crit(2, 1, permissive=True)
    found = enumerate_hyperedges(poset, pairs, max_len=3)
    expected = {frozenset(pairs[i] for i in e) for e in S_2_1_EDGES}
    expected |= {frozenset(pairs[i] for i in e) for e in S_2_1_TRIPLES}
    assert found == expected


def test_hyperedges_smallest_crown_has_no_strict_triple():
    poset, pairs = crown_crit(3, 0)
    assert len(enumerate_hyperedges(poset, pairs, max_len=2)) == 3
    assert len(enumerate_hyperedges(poset, pairs, max_len=3)) == 3


def test_two_element_hyperedges_are_the_skeleton_edges():
    for n, k, layers, permissive in [
        (2, 1, 1, True), (3, 0, 1, False), (6, 1, 1, False), (3, 1, 3, False),
    ]:
        poset, pairs = crown_crit(n, k, layers, permissive)
        found = enumerate_hyperedges(poset, pairs, max_len=2)
        expected = {
            frozenset({pairs[i], pairs[j]}) for i, j in skeleton_edges(poset, pairs)
        }
        assert found == expected


def test_hyperedge_sets_admit_a_strict_cyclic_order():
    # cross-check the degree-based search against brute-force sequencing
    poset, pairs = crown_crit(2, 1, permissive=True)
    found = enumerate_hyperedges(poset, pairs, max_len=3)
    index = {p: i for i, p in enumerate(pairs)}
    for size in (2, 3):
        from itertools import combinations

        for subset in combinations(range(len(pairs)), size):
            members = [pairs[i] for i in subset]
            some_order = any(
                is_strict_alternating_cycle(
                    poset,
                    [(p.upper, p.lower) for p in (members[0],) + perm],
                )
                for perm in permutations(members[1:])
            )
            assert some_order == (frozenset(members) in found), subset
    assert all(frozenset(index[p] for p in e) for e in found)


def test_hyperedge_budget_is_enforced():
    poset, pairs = crown_crit(6, 1)
    with pytest.raises(BudgetExceededError):
        enumerate_hyperedges(poset, pairs, max_len=4, budget=10)


def test_max_len_below_two_rejected():
    poset, pairs = crown_crit(3, 0)
    with pytest.raises(ValueError):
        enumerate_hyperedges(poset, pairs, max_len=1)


def test_skeleton_graph_shapes():
    poset, pairs = crown_crit(2, 1, permissive=True)
    graph = skeleton(poset, pairs)
    assert graph.vertex_count == 6 and graph.edge_count == 3

    poset, pairs = crown_crit(6, 1)
    graph = skeleton(poset, pairs)
    assert graph.vertex_count == 14 and graph.edge_count == 63

    assert skeleton(chain(3)).vertex_count == 0
    assert skeleton(chain(3)).edge_count == 0


def test_skeleton_rejects_wrong_vertex_list():
    poset, pairs = crown_crit(3, 0)
    with pytest.raises(PosetError):
        skeleton(poset, pairs[:-1])


def test_skeleton_edges_invariant_under_cyclic_shift():
    from crownskel import rep

    for n, k, layers in [(6, 1, 1), (3, 1, 3), (4, 0, 2)]:
        poset, pairs = crown_crit(n, k, layers)
        m = n + k
        edges = skeleton_edges(poset, pairs)
        index = {p: i for i, p in enumerate(pairs)}

        def shifted(pair):
            return CriticalPair(
                el(pair.lower.row, rep(pair.lower.pos + 1, m)),
                el(pair.upper.row, rep(pair.upper.pos + 1, m)),
            )

        for i, j in edges:
            si, sj = index[shifted(pairs[i])], index[shifted(pairs[j])]
            assert (min(si, sj), max(si, sj)) in edges
