"""Forbidden and characteristic substructures as witness-producing predicates.

Conventions match the classification scans these feed: 4-cycles and
diamonds are sought as subgraphs (chords allowed), claws as induced
subgraphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .canon import find_subgraph
from .distance import distance_graph
from .graph import Graph, build_graph

__all__ = [
    "PatternReport",
    "pattern_report",
    "has_c4_subgraph",
    "has_diamond",
    "triangles",
    "triangles_pairwise_disjoint",
    "triangle_provenance",
]

_CLAW = build_graph(4, [(0, 1), (0, 2), (0, 3)])
# edge-glued 5-cycle and triangle: 0-1-2-3-4-5-0 with chord 1-5
_C5C3 = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 5)])


def _c4_witness(g: Graph):
    """Any two vertices with two common neighbors span a 4-cycle subgraph."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = g.masks[u] & g.masks[v]
            if common.bit_count() >= 2:
                a = (common & -common).bit_length() - 1
                common &= common - 1
                b = (common & -common).bit_length() - 1
                return [u, a, v, b]
    return None


def has_c4_subgraph(g: Graph) -> bool:
    return _c4_witness(g) is not None


def _diamond_witness(g: Graph):
    """An edge lying in two triangles is exactly a diamond subgraph."""
    for u, v in g.edges():
        common = g.masks[u] & g.masks[v]
        if common.bit_count() >= 2:
            a = (common & -common).bit_length() - 1
            common &= common - 1
            b = (common & -common).bit_length() - 1
            return [u, v, a, b]
    return None


def has_diamond(g: Graph) -> bool:
    return _diamond_witness(g) is not None


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in g.edges():
        common = g.masks[u] & g.masks[v] >> (v + 1) << (v + 1)
        while common:
            w = (common & -common).bit_length() - 1
            common &= common - 1
            out.append((u, v, w))
    return out


def _sharing_triangles(g: Graph):
    tris = triangles(g)
    for i, t1 in enumerate(tris):
        s1 = set(t1)
        for t2 in tris[i + 1 :]:
            if s1 & set(t2):
                return t1, t2
    return None


def triangles_pairwise_disjoint(g: Graph) -> bool:
    return _sharing_triangles(g) is None


@dataclass(frozen=True)
class PatternReport:
    has_c4_subgraph: bool
    has_diamond: bool
    triangles_pairwise_disjoint: bool
    has_induced_claw: bool
    has_c5c3_subgraph: bool
    witnesses: dict = field(hash=False, default_factory=dict)


def pattern_report(g: Graph) -> PatternReport:
    witnesses: dict[str, list[int]] = {}
    c4 = _c4_witness(g)
    if c4:
        witnesses["c4_subgraph"] = c4
    dia = _diamond_witness(g)
    if dia:
        witnesses["diamond"] = dia
    sharing = _sharing_triangles(g)
    if sharing:
        witnesses["sharing_triangles"] = list(sharing[0]) + list(sharing[1])
    claw = find_subgraph(_CLAW, g, induced=True)
    if claw:
        witnesses["induced_claw"] = list(claw)
    c5c3 = find_subgraph(_C5C3, g, induced=False)
    if c5c3:
        witnesses["c5c3_subgraph"] = list(c5c3)
    return PatternReport(
        has_c4_subgraph=c4 is not None,
        has_diamond=dia is not None,
        triangles_pairwise_disjoint=sharing is None,
        has_induced_claw=claw is not None,
        has_c5c3_subgraph=c5c3 is not None,
        witnesses=witnesses,
    )


def _claw_provenance(g: Graph, tri: tuple[int, int, int]):
    x, y, z = tri
    want = (1 << x) | (1 << y) | (1 << z)
    for c in range(g.n):
        if c in tri:
            continue
        if g.masks[c] & want != want:
            continue
        # leaves pairwise non-adjacent makes the claw induced
        if g.masks[x] & ((1 << y) | (1 << z)) or g.masks[y] >> z & 1:
            continue
        return [c, x, y, z]
    return None


def _c6_provenance(g: Graph, tri: tuple[int, int, int]):
    x, y, z = tri
    tri_mask = (1 << x) | (1 << y) | (1 << z)
    for a in g.neighbors(x):
        if 1 << a & tri_mask or not g.masks[a] >> y & 1:
            continue
        for b in g.neighbors(y):
            if b == a or 1 << b & tri_mask or not g.masks[b] >> z & 1:
                continue
            for c in g.neighbors(z):
                if c in (a, b) or 1 << c & tri_mask or not g.masks[c] >> x & 1:
                    continue
                # hexagon x-a-y-b-z-c must be induced
                cycle = [x, a, y, b, z, c]
                induced = True
                for i in range(6):
                    for j in range(i + 1, 6):
                        adj = bool(g.masks[cycle[i]] >> cycle[j] & 1)
                        if adj != ((j - i) in (1, 5)):
                            induced = False
                            break
                    if not induced:
                        break
                if induced:
                    return cycle
    return None


def _c5c3_provenance(g: Graph, tri: tuple[int, int, int]):
    # In the glued pentagon/triangle with hexagon a..f (temples b,f adjacent),
    # vertices {a, c, e} are pairwise at distance two.  Try mapping the
    # triangle onto (forehead, left jaw, right jaw) in every orientation.
    for a, c, e in permutations(tri):
        for b in g.neighbors(a):
            if b in tri or not g.masks[b] >> c & 1:
                continue
            for f in g.neighbors(a):
                if f == b or f in tri or not g.masks[f] >> e & 1:
                    continue
                if not g.masks[b] >> f & 1:
                    continue
                for d in g.neighbors(c):
                    if d in (b, f) or d in tri or not g.masks[d] >> e & 1:
                        continue
                    return [a, b, c, d, e, f]
    return None


def triangle_provenance(g: Graph) -> list[tuple[tuple[int, int, int], str | None]]:
    """Attribute every triangle of the 2-distance graph to an induced claw,
    an induced hexagon, or a glued pentagon/triangle subgraph in ``g``.

    Requires ``g`` to be 4-cycle free.  A ``None`` tag flags a triangle the
    attribution failed to explain (reported, never assumed away).
    """
    if has_c4_subgraph(g):
        raise ValueError("triangle provenance requires a C4-free graph")
    g2 = distance_graph(g, 2)
    out: list[tuple[tuple[int, int, int], str | None]] = []
    for tri in triangles(g2):
        if _claw_provenance(g, tri):
            out.append((tri, "claw"))
        elif _c6_provenance(g, tri):
            out.append((tri, "c6"))
        elif _c5c3_provenance(g, tri):
            out.append((tri, "c5c3"))
        else:
            out.append((tri, None))
    return out
