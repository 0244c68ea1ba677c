import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from distgraph import (
    INFINITY,
    GraphError,
    bfs_distances,
    build_graph,
    complement,
    component_masks,
    induced_subgraph,
    is_connected,
    is_two_connected,
    metrics,
    random_graph,
)
from distgraph.families import basic_family, named_graph


def test_build_rejects_bad_edges():
    with pytest.raises(GraphError):
        build_graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        build_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        build_graph(-1, [])


def test_edges_roundtrip():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 1)])
    assert g.edges() == [(0, 1), (1, 2), (1, 3), (2, 3)]
    assert g.edge_count == 4
    assert g.degrees() == [1, 3, 2, 2]
    assert g.has_edge(1, 3) and not g.has_edge(0, 2)
    assert sorted(g.neighbors(1)) == [0, 2, 3]


@given(st.integers(2, 9), st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_complement_involution(n, seed):
    g = random_graph(n, 0.5, seed)
    assert complement(complement(g)) == g
    assert g.edge_count + complement(g).edge_count == n * (n - 1) // 2


def test_induced_subgraph_keeps_order():
    g = basic_family("cycle", 5)
    h = induced_subgraph(g, [1, 2, 3])
    assert h.edges() == [(0, 1), (1, 2)]
    assert induced_subgraph(g, range(5)) == g


@given(st.integers(1, 9), st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_bfs_matches_floyd_oracle(n, seed):
    g = random_graph(n, 0.4, seed)
    ref = oracles.floyd_distances(g)
    for v in range(n):
        dist = bfs_distances(g, v)
        for u in range(n):
            expected = ref[v][u]
            assert dist[u] == (-1 if expected == INFINITY else expected)


def test_components_and_connectivity():
    g = build_graph(5, [(0, 1), (2, 3)])
    comps = component_masks(g)
    assert sorted(comps) == [0b00011, 0b01100, 0b10000]
    assert not is_connected(g)
    assert is_connected(basic_family("path", 5))


def test_metrics_known_graphs():
    m = metrics(basic_family("cycle", 5))
    assert (m.diameter, m.girth, m.triangle_count) == (2, 5, 0)
    assert m.two_connected and m.component_count == 1
    assert m.degree_histogram == {2: 5}

    m = metrics(basic_family("path", 4))
    assert (m.diameter, m.girth, m.two_connected) == (3, INFINITY, False)

    m = metrics(basic_family("complete", 4))
    assert (m.diameter, m.girth, m.triangle_count, m.max_degree) == (1, 3, 4, 3)

    m = metrics(named_graph("petersen"))
    assert (m.diameter, m.girth, m.triangle_count) == (2, 5, 0)

    assert metrics(build_graph(1, [])).diameter == 0
    assert metrics(build_graph(3, [(0, 1)])).diameter == INFINITY


def test_girth_triangle_consistency(classes_by_n):
    for g in classes_by_n[6]:
        m = metrics(g)
        assert (m.girth == 3) == (m.triangle_count > 0)
        if g.edge_count == 0:
            assert m.girth == INFINITY


def test_two_connected_matches_deletion_oracle(classes_by_n):
    for g in classes_by_n[5]:
        assert is_two_connected(g) == oracles.two_connected_by_deletion(g)
    for seed in range(40):
        g = random_graph(8, 0.35, seed)
        assert is_two_connected(g) == oracles.two_connected_by_deletion(g)
