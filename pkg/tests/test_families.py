import pytest

from distgraph import (
    are_isomorphic,
    build_graph,
    canonical_key,
    complement,
    find_subgraph,
    induced_subgraph,
    is_self_two_distance,
    metrics,
    random_graph,
)
from distgraph.families import (
    basic_family,
    complete,
    cycle,
    edged_product,
    named_graph,
    paley,
    path,
    prop23_construction,
)


def test_basic_families():
    assert cycle(5).edge_count == 5
    assert path(5).edge_count == 4
    assert complete(5).edge_count == 10
    assert basic_family("cycle", 4) == cycle(4)
    with pytest.raises(ValueError):
        cycle(2)
    with pytest.raises(ValueError):
        basic_family("wheel", 5)


def test_edged_product_counts():
    g = edged_product(cycle(5), (0, 1), cycle(3), (0, 1))
    assert g.n == 6 and g.edge_count == 7
    assert are_isomorphic(g, named_graph("c5c3"))[0]

    h = edged_product(complete(3), (0, 1), complete(3), (1, 2))
    assert h.n == 4 and h.edge_count == 5  # the diamond
    assert are_isomorphic(h, named_graph("diamond"))[0]

    with pytest.raises(ValueError):
        edged_product(cycle(5), (0, 2), cycle(3), (0, 1))


def test_edged_product_independent_of_edge_choice():
    """For edge-transitive factors the glued graph does not depend on which
    edges are identified, nor on their orientation."""
    keys = set()
    for e1 in cycle(5).edges():
        for e2 in cycle(3).edges():
            for a in (e1, (e1[1], e1[0])):
                for b in (e2, (e2[1], e2[0])):
                    keys.add(canonical_key(edged_product(cycle(5), a, cycle(3), b)))
    assert len(keys) == 1


def test_named_fixtures():
    f1 = named_graph("fig_5_1_1")
    assert (f1.n, f1.edge_count) == (8, 14)
    assert is_self_two_distance(f1)[0]

    f2 = named_graph("fig_5_1_2")
    assert (f2.n, f2.edge_count) == (9, 18)
    assert is_self_two_distance(f2)[0]
    # the 9th vertex is joined to the whole inner square
    assert sorted(f2.neighbors(8)) == [4, 5, 6, 7]
    assert induced_subgraph(f2, range(8)) == f1

    pet = named_graph("petersen")
    assert (pet.n, pet.edge_count) == (10, 15)
    assert not is_self_two_distance(pet)[0]

    with pytest.raises(ValueError):
        named_graph("unknown")


def test_prop23_construction_small():
    out = prop23_construction(build_graph(1, []))
    assert are_isomorphic(out, cycle(5))[0]

    out = prop23_construction(complete(2))
    assert out.n == 9
    assert is_self_two_distance(out)[0]
    assert metrics(out).diameter == 2


def test_prop23_embeds_input():
    g = path(4)
    out = prop23_construction(g)
    assert out.n == 17
    assert find_subgraph(g, out, induced=True) is not None
    assert is_self_two_distance(out)[0]


def test_paley_graphs():
    p5 = paley(5)
    assert are_isomorphic(p5, cycle(5))[0]

    p13 = paley(13)
    assert p13.n == 13 and all(d == 6 for d in p13.degrees())
    assert are_isomorphic(p13, complement(p13))[0]
    assert metrics(p13).diameter == 2

    for q in (9, 7, 4, 12):
        with pytest.raises(ValueError):
            paley(q)


def test_random_graph_determinism():
    a = random_graph(10, 0.5, 12345)
    b = random_graph(10, 0.5, 12345)
    assert a == b
    c = random_graph(10, 0.5, 12346)
    assert a != c
    assert random_graph(8, 0.0, 7).edge_count == 0
    assert random_graph(8, 1.0, 7).edge_count == 28


def test_random_graph_edge_density_sane():
    total = sum(random_graph(12, 0.5, seed).edge_count for seed in range(100))
    # 100 draws of Binomial(66, 0.5); mean 3300, sd ~40
    assert 3000 < total < 3600
