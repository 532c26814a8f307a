from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from blockdecomp.families import bowtie, complete_graph, cycle_graph, grid_graph, path_graph
from blockdecomp.graph import (
    AdjacencyError,
    ContainmentError,
    GraphError,
    automorphisms,
    build_graph,
    compose,
    components,
    invert,
    local_connectivity,
    min_set_separator,
    min_vertex_cut,
)
from blockdecomp.oracle import brute_min_vertex_cut
from strategies import graphs, permutations_of


def test_build_complete_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert all(g.degree(v) == 2 for v in g.vertices)


def test_edges_are_normalized():
    g = build_graph(5, [(1, 0), (2, 1), (3, 2), (4, 3)])
    assert g == path_graph(5)


@pytest.mark.parametrize(
    "n, edges, bad",
    [(2, [(0, 0)], (0, 0)), (3, [(0, 1), (1, 0)], (1, 0)), (3, [(0, 3)], (0, 3)), (2, [(-1, 0)], (-1, 0))],
)
def test_build_rejects_bad_edges(n, edges, bad):
    with pytest.raises(GraphError) as info:
        build_graph(n, edges)
    assert info.value.edge == bad


def test_components_of_path_minus_middle():
    assert components(path_graph(5), {2}) == [frozenset({0, 1}), frozenset({3, 4})]


def test_components_of_cycle():
    assert components(cycle_graph(5)) == [frozenset(range(5))]


def test_grid_minus_middle_row():
    assert components(grid_graph(3, 3), {3, 4, 5}) == [frozenset({0, 1, 2}), frozenset({6, 7, 8})]


@given(graphs(max_n=9), st.data())
def test_components_partition(g, data):
    removed = data.draw(st.sets(st.sampled_from(range(g.n)))) if g.n else set()
    comps = components(g, removed)
    assert frozenset().union(*comps) | removed == g.vertex_set
    assert sum(map(len, comps)) + len(removed) == g.n
    owner = {v: i for i, c in enumerate(comps) for v in c}
    for u, v in g.edges:
        if u in owner and v in owner:
            assert owner[u] == owner[v]
    assert [min(c) for c in comps] == sorted(min(c) for c in comps)


def test_min_vertex_cut_examples():
    assert min_vertex_cut(cycle_graph(5), 0, 2)[0] == 2
    assert min_vertex_cut(grid_graph(3, 3), 0, 8)[0] == 2
    k4 = build_graph(4, [e for e in combinations(range(4), 2) if e != (0, 1)])
    assert min_vertex_cut(k4, 0, 1) == (2, frozenset({2, 3}))


def test_min_vertex_cut_is_lexicographically_least():
    # opposite grid corners: the least 2-cut is {1, 3}
    assert min_vertex_cut(grid_graph(3, 3), 0, 8) == (2, frozenset({1, 3}))


@pytest.mark.parametrize("u, v", [(0, 0), (0, 1)])
def test_min_vertex_cut_rejects_adjacent(u, v):
    with pytest.raises(AdjacencyError):
        min_vertex_cut(path_graph(3), u, v)


@given(graphs(min_n=2, max_n=9), st.data())
def test_min_vertex_cut_matches_brute_force_and_menger(g, data):
    u, v = data.draw(st.lists(st.sampled_from(range(g.n)), min_size=2, max_size=2, unique=True))
    if g.has_edge(u, v):
        assert local_connectivity(g, u, v) is None
        return
    size, cut = min_vertex_cut(g, u, v)
    assert size == brute_min_vertex_cut(g, u, v) == len(cut)
    assert u not in cut and v not in cut
    assert not any(u in c and v in c for c in components(g, cut))
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(g.vertices)
    assert size == nx.node_connectivity(h, u, v)


def test_min_set_separator_examples():
    assert min_set_separator(path_graph(5), {0}, {4})[0] == 1
    assert min_set_separator(bowtie(), {0, 1, 2}, {2, 3, 4}) == (1, frozenset({2}))
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert min_set_separator(g, {0, 1, 2}, {2, 3, 4}) == (1, frozenset({2}))


def test_min_set_separator_containment():
    with pytest.raises(ContainmentError):
        min_set_separator(path_graph(4), {0, 1}, {0, 1, 2})


@given(graphs(min_n=2, max_n=8), st.data())
def test_min_set_separator_is_a_separator(g, data):
    x = data.draw(st.sets(st.sampled_from(range(g.n)), min_size=1))
    y = data.draw(st.sets(st.sampled_from(range(g.n)), min_size=1))
    if x <= y or y <= x:
        return
    size, cut = min_set_separator(g, x, y)
    assert len(cut) == size and x & y <= cut
    for comp in components(g, cut):
        assert not (comp & x and comp & y)


@pytest.mark.parametrize(
    "g, count", [(cycle_graph(5), 10), (path_graph(5), 2), (grid_graph(3, 3), 8), (complete_graph(4), 24)]
)
def test_automorphism_counts(g, count):
    group = automorphisms(g)
    assert len(group) == count
    assert group[0] == tuple(range(g.n))


@given(graphs(max_n=7))
def test_automorphisms_form_a_group(g):
    group = automorphisms(g)
    members = set(group)
    assert len(members) == len(group)
    for p in group:
        assert g.relabel(p) == g
        assert invert(p) in members
        for q in group[:4]:
            assert compose(p, q) in members
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(g.vertices)
    matcher = nx.algorithms.isomorphism.GraphMatcher(h, h)
    assert len(group) == sum(1 for _ in matcher.isomorphisms_iter())


@given(graphs(min_n=3, max_n=8), st.data())
def test_separator_size_is_invariant(g, data):
    group = automorphisms(g)
    alpha = data.draw(st.sampled_from(group))
    x = data.draw(st.sets(st.sampled_from(range(g.n)), min_size=1))
    y = data.draw(st.sets(st.sampled_from(range(g.n)), min_size=1))
    if x <= y or y <= x:
        return
    ax, ay = {alpha[v] for v in x}, {alpha[v] for v in y}
    assert min_set_separator(g, x, y)[0] == min_set_separator(g, ax, ay)[0]


@given(graphs(max_n=7), st.data())
def test_relabel_round_trip(g, data):
    p = data.draw(permutations_of(g.n))
    assert g.relabel(p).relabel(invert(p)) == g
