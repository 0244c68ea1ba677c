import pytest

import oracles
from distgraph import (
    build_graph,
    distance_graph,
    has_c4_subgraph,
    has_diamond,
    pattern_report,
    random_graph,
    triangle_provenance,
    triangles,
    triangles_pairwise_disjoint,
)
from distgraph.families import basic_family, complete, named_graph


def test_flags_on_known_graphs():
    assert not has_c4_subgraph(basic_family("cycle", 5))
    assert has_c4_subgraph(basic_family("cycle", 4))
    assert has_c4_subgraph(complete(4))

    diamond = build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert has_diamond(diamond)
    assert has_c4_subgraph(diamond)
    assert not has_diamond(basic_family("cycle", 6))
    assert not has_diamond(named_graph("c5c3"))

    assert triangles(complete(4)) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert triangles_pairwise_disjoint(named_graph("c5c3"))
    assert not triangles_pairwise_disjoint(complete(4))
    assert triangles_pairwise_disjoint(basic_family("path", 3))


def test_flags_match_brute_oracle(classes_by_n):
    for g in classes_by_n[6]:
        assert has_c4_subgraph(g) == oracles.has_c4_subgraph(g)
        assert has_diamond(g) == oracles.has_diamond_subgraph(g)
        assert triangles_pairwise_disjoint(g) == oracles.triangles_pairwise_disjoint(g)
    for seed in range(40):
        g = random_graph(9, 0.35, seed)
        assert has_c4_subgraph(g) == oracles.has_c4_subgraph(g)
        assert has_diamond(g) == oracles.has_diamond_subgraph(g)
        assert triangles_pairwise_disjoint(g) == oracles.triangles_pairwise_disjoint(g)


def test_pattern_report_fields():
    rep = pattern_report(named_graph("c5c3"))
    assert not rep.has_c4_subgraph and not rep.has_diamond
    assert rep.triangles_pairwise_disjoint and rep.has_c5c3_subgraph
    assert not rep.has_induced_claw  # both degree-3 vertices sit on the chord
    assert "c5c3_subgraph" in rep.witnesses

    rep = pattern_report(complete(4))
    assert rep.has_c4_subgraph and rep.has_diamond
    assert not rep.triangles_pairwise_disjoint and not rep.has_induced_claw
    assert not rep.has_c5c3_subgraph
    assert {"c4_subgraph", "diamond", "sharing_triangles"} <= set(rep.witnesses)


def test_provenance_requires_c4_free_host():
    with pytest.raises(ValueError):
        triangle_provenance(basic_family("cycle", 4))


def test_provenance_claw():
    claw = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    tagged = triangle_provenance(claw)
    assert len(tagged) == 1
    tri, tag = tagged[0]
    assert sorted(tri) == [1, 2, 3] and tag == "claw"


def test_provenance_c6():
    tagged = triangle_provenance(basic_family("cycle", 6))
    assert len(tagged) == 2
    assert {tag for _, tag in tagged} == {"c6"}
    assert sorted(sorted(t) for t, _ in tagged) == [[0, 2, 4], [1, 3, 5]]


def test_provenance_c5c3():
    tagged = triangle_provenance(named_graph("c5c3"))
    tags = {tag for _, tag in tagged}
    assert "c5c3" in tags
    assert None not in tags


def test_provenance_covers_random_c4_free_graphs():
    found = 0
    seed = 0
    while found < 100:
        seed += 1
        g = random_graph(4 + seed % 7, 0.25, seed)
        if has_c4_subgraph(g):
            continue
        found += 1
        g2 = distance_graph(g, 2)
        for tri, tag in triangle_provenance(g):
            assert tag in ("claw", "c6", "c5c3", None)
            a, b, c = tri
            assert g2.has_edge(a, b) and g2.has_edge(a, c) and g2.has_edge(b, c)
