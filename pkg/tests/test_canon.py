from itertools import combinations, permutations

from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from distgraph import (
    are_isomorphic,
    build_graph,
    canonical_graph,
    canonical_key,
    complement,
    find_subgraph,
    random_graph,
)
from distgraph.families import basic_family, complete, named_graph


def _relabel(g, perm):
    return build_graph(g.n, [(perm[a], perm[b]) for a, b in g.edges()])


@given(st.integers(1, 12), st.integers(0, 2**32), st.integers(0, 2**32))
@settings(max_examples=150, deadline=None)
def test_canonical_key_is_relabeling_invariant(n, seed, perm_seed):
    g = random_graph(n, 0.5, seed)
    perm = list(range(n))
    s = perm_seed
    for i in range(n - 1, 0, -1):
        s = (s * 6364136223846793005 + 1442695040888963407) % 2**64
        j = s % (i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    assert canonical_key(_relabel(g, perm)) == canonical_key(g)


def test_canonical_graph_is_a_fixed_point():
    for seed in range(25):
        g = random_graph(9, 0.5, seed)
        c = canonical_graph(g)
        assert canonical_graph(c) == c
        assert are_isomorphic(g, c)[0]


def test_canonical_key_separates_same_degree_sequence():
    c6 = basic_family("cycle", 6)
    two_triangles = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_key(c6) != canonical_key(two_triangles)


def test_c5_isomorphic_to_own_complement():
    c5 = basic_family("cycle", 5)
    ok, phi = are_isomorphic(c5, complement(c5))
    assert ok and sorted(phi) == list(range(5))


def test_are_isomorphic_matches_permutation_oracle(classes_by_n):
    reps = classes_by_n[5]
    for g, h in combinations(reps, 2):
        assert not are_isomorphic(g, h)[0]
        assert not oracles.permutation_isomorphic(g, h)
    for g in reps:
        for perm in (list(range(4, -1, -1)), [2, 0, 4, 1, 3]):
            ok, phi = are_isomorphic(g, _relabel(g, perm))
            assert ok
            assert _relabel(g, phi) == _relabel(g, perm)


def test_isomorphism_witness_is_edge_preserving():
    g = named_graph("petersen")
    perm = [7, 2, 9, 0, 4, 1, 8, 3, 5, 6]
    h = _relabel(g, perm)
    ok, phi = are_isomorphic(g, h)
    assert ok
    for a, b in combinations(range(g.n), 2):
        assert g.has_edge(a, b) == h.has_edge(phi[a], phi[b])


def test_high_symmetry_graphs():
    assert are_isomorphic(complete(7), complete(7))[0]
    assert not are_isomorphic(complete(7), complement(complete(7)))[0]
    assert canonical_graph(complete(7)) == complete(7)


def test_find_subgraph():
    host = named_graph("c5c3")
    assert find_subgraph(basic_family("cycle", 5), host) is not None
    assert find_subgraph(basic_family("cycle", 3), host) is not None
    assert find_subgraph(complete(4), host) is None

    claw = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    k4 = complete(4)
    assert find_subgraph(claw, k4) is not None
    assert find_subgraph(claw, k4, induced=True) is None

    hit = find_subgraph(basic_family("cycle", 4), named_graph("petersen"), induced=True)
    assert hit is None  # girth 5


def test_find_subgraph_witness_embeds():
    pattern = basic_family("cycle", 5)
    host = named_graph("petersen")
    phi = find_subgraph(pattern, host, induced=True)
    assert phi is not None and len(set(phi)) == 5
    for a, b in permutations(range(5), 2):
        if a < b:
            assert pattern.has_edge(a, b) == host.has_edge(phi[a], phi[b])
