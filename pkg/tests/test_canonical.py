from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blockdecomp.blocks import k_blocks
from blockdecomp.canonical import (
    DEFAULT_MAX_N,
    SizeGuardError,
    all_k_separations,
    canonical_systems,
    canonical_tree_decompositions,
    distinguishes_efficiently,
    max_n,
    systems_as_lists,
)
from blockdecomp.families import (
    bowtie,
    complete_graph,
    cycle_graph,
    empty_graph,
    grid_graph,
    path_graph,
    random_graph,
)
from blockdecomp.oracle import enumerate_all_separations, verify_invariance
from blockdecomp.separations import make_separation
from blockdecomp.structure import NestedSystem
from properties import leanness_violations, fixed_order_violations, sequence_violations
from strategies import graphs


def test_path_separations_of_order_one():
    seps = all_k_separations(path_graph(5), 1)
    assert len(seps) == 6
    assert {s.separator for s in seps} == {frozenset({1}), frozenset({2}), frozenset({3})}


def test_cycle_has_no_cutvertex():
    assert len(all_k_separations(cycle_graph(5), 1)) == 0
    assert len(all_k_separations(cycle_graph(5), 2)) == 10


def test_connected_graph_has_no_zero_separation():
    assert len(all_k_separations(path_graph(4), 0)) == 0
    assert len(all_k_separations(empty_graph(3), 0)) == 6


def test_negative_order():
    with pytest.raises(ValueError):
        all_k_separations(path_graph(3), -1)
    with pytest.raises(ValueError):
        canonical_systems(path_graph(3), -1)


@given(graphs(max_n=8), st.integers(0, 4))
def test_separations_match_exhaustive_listing(g, k):
    fast = {(s.a, s.b) for j in range(k + 1) for s in all_k_separations(g, j)}
    assert fast == enumerate_all_separations(g, k)


def test_complete_graph_needs_no_separations():
    g = complete_graph(5)
    seq = canonical_systems(g, g.n)
    assert all(len(n) == 0 for n in seq.systems)
    assert all(td.parts == (g.vertex_set,) for td in seq.decompositions)


def test_edgeless_graph_splits_into_vertices():
    # each vertex is a 0-block, so level 0 must already tell them apart
    g = empty_graph(3)
    seq = canonical_systems(g, g.n)
    assert seq.levels[0].robust == (frozenset({0}), frozenset({1}), frozenset({2}))
    assert {s.order for s in seq.systems[0]} == {0}
    assert seq.systems[-1] == seq.systems[0]
    td = seq.decompositions[0]
    # three leaves around a hub with an empty separator
    assert sorted(td.parts, key=sorted) == [frozenset(), frozenset({0}), frozenset({1}), frozenset({2})]
    hub = td.parts.index(frozenset())
    assert td.kinds[hub].hub and len(td.neighbours(hub)) == 3
    assert canonical_systems(empty_graph(1), 1).systems[1].separations == frozenset()


def test_disconnected_graph_splits_at_level_zero():
    from blockdecomp.graph import build_graph

    two = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    seq = canonical_systems(two, 1)
    assert {s.order for s in seq.systems[0]} == {0}
    td = seq.decompositions[0]
    assert sorted(map(sorted, td.parts)) == [[0, 1, 2], [3, 4, 5]]


def test_bowtie_sequence():
    g = bowtie()
    seq = canonical_systems(g, 1)
    assert len(seq.systems[0]) == 0
    expected = make_separation(g, {0, 1, 2}, {2, 3, 4})
    assert seq.systems[1].separations == {expected, expected.inverse()}
    td = seq.decompositions[1]
    assert sorted(map(sorted, td.parts)) == [[0, 1, 2], [2, 3, 4]]
    assert td.adhesion() == 1
    assert distinguishes_efficiently(g, seq.systems[1], {0, 1, 2}, {2, 3, 4})
    assert not distinguishes_efficiently(g, NestedSystem(g, ()), {0, 1, 2}, {2, 3, 4})


def test_bowtie_extraction_keeps_the_only_candidate():
    g = bowtie()
    seq = canonical_systems(g, 1)
    rec = seq.levels[1].records[0]
    assert len(rec.candidates) == 2
    assert set(rec.extracted) == set(rec.candidates)


def test_single_part_when_K_is_zero():
    tds = canonical_tree_decompositions(cycle_graph(6), 0)
    assert len(tds) == 1 and tds[0].parts == (frozenset(range(6)),)


def test_five_by_five_grid():
    g = grid_graph(5, 5)
    seq = canonical_systems(g, 2, limit=30)
    td = seq.decompositions[2]
    blocks = [b.vertices for b in k_blocks(g, 2)]
    assert len(blocks) == 5
    homes = [td.part_containing(b) for b in blocks]
    assert all(len(h) == 1 for h in homes)
    assert len({h[0] for h in homes}) == 5
    assert td.adhesion() <= 2
    assert all(s.order == 2 for s in seq.systems[2])


def test_size_guard(monkeypatch):
    g = grid_graph(5, 5)
    assert max_n() == DEFAULT_MAX_N
    with pytest.raises(SizeGuardError, match="25 vertices"):
        canonical_systems(g, 1)
    monkeypatch.setenv("BLOCKDECOMP_MAX_N", "30")
    assert len(canonical_systems(g, 1).systems) == 2


def test_levels_record_provenance():
    g = random_graph(9, 0.45, 7)
    seq = canonical_systems(g, g.n)
    for level in seq.levels:
        for rec in level.records:
            assert len(rec.family) >= 2
            assert all(x <= rec.block for x in rec.family)
            assert set(rec.extracted) <= set(rec.candidates)
        assert set(level.robust) <= set(level.blocks)


def test_output_is_stable():
    g = random_graph(9, 0.5, 3)
    first = [[str(s) for s in n] for n in systems_as_lists(canonical_systems(g, g.n))]
    second = [[str(s) for s in n] for n in systems_as_lists(canonical_systems(g, g.n))]
    assert first == second


def test_sequence_on_six_cycle_is_invariant():
    g = cycle_graph(6)

    def recompute(h):
        return [frozenset((s.a, s.b) for s in n) for n in canonical_systems(h, h.n).systems]

    assert verify_invariance(g, recompute, samples=5).agree


@given(graphs(min_n=2, max_n=8))
def test_levels_are_nested_tight_and_stratified(g):
    assert sequence_violations(g) == []


@given(graphs(min_n=2, max_n=8), st.integers(0, 3))
def test_decomposition_separates_blocks(g, k):
    assert fixed_order_violations(g, k) == []


@given(graphs(min_n=2, max_n=8))
def test_every_new_separation_is_needed(g):
    assert leanness_violations(g, g.n) == []


@given(graphs(min_n=2, max_n=7), st.data())
def test_systems_are_equivariant(g, data):
    from blockdecomp.separations import transport

    perm = tuple(data.draw(st.permutations(list(range(g.n)))))
    big_k = data.draw(st.integers(0, g.n))
    base = canonical_systems(g, big_k).systems
    moved = canonical_systems(g.relabel(perm), big_k).systems
    for n, m in zip(base, moved):
        assert {transport(s, perm, g.relabel(perm)) for s in n} == set(m)


@given(graphs(min_n=2, max_n=8))
def test_parts_hold_inseparable_sets(g):
    # every k-block lies in exactly one part of the k-th decomposition
    tds = canonical_tree_decompositions(g, min(g.n, 4))
    for k, td in enumerate(tds):
        for b in k_blocks(g, k):
            assert len(td.part_containing(b.vertices)) == 1


def test_distinguishing_needs_the_least_order():
    g = path_graph(5)
    seps = all_k_separations(g, 1)
    nested = [s for s in seps if s.separator == {2}]
    n = NestedSystem(g, nested)
    assert distinguishes_efficiently(g, n, {0, 1}, {3, 4})
    assert not distinguishes_efficiently(g, n, {0, 1}, {1, 2})
    for b1, b2 in combinations([{0, 1}, {3, 4}], 2):
        assert distinguishes_efficiently(g, canonical_systems(g, 1).systems[1], b1, b2)
