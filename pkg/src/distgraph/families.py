"""Concrete graph constructions: standard families, edge-glued products,
named fixtures, the diameter-two embedding construction, Paley graphs and
a reproducible random graph generator."""

from __future__ import annotations

from .graph import Graph, GraphError, build_graph, complement

__all__ = [
    "basic_family",
    "cycle",
    "path",
    "complete",
    "edged_product",
    "named_graph",
    "NAMED_GRAPH_IDS",
    "prop23_construction",
    "paley",
    "random_graph",
]


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least 1 vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least 1 vertex")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def basic_family(kind: str, n: int) -> Graph:
    makers = {"cycle": cycle, "path": path, "complete": complete}
    if kind not in makers:
        raise GraphError(f"unknown family kind: {kind!r}")
    return makers[kind](n)


def edged_product(g: Graph, e_g: tuple[int, int], h: Graph, e_h: tuple[int, int]) -> Graph:
    """Glue ``h`` onto ``g`` by identifying edge ``e_h`` with ``e_g``.

    The identification is orientation-sensitive: first endpoint onto first
    endpoint.  For edge-transitive factors every choice lands in the same
    isomorphism class.
    """
    if not g.has_edge(*e_g):
        raise GraphError(f"{e_g} is not an edge of the first factor")
    if not h.has_edge(*e_h):
        raise GraphError(f"{e_h} is not an edge of the second factor")
    mapping = {e_h[0]: e_g[0], e_h[1]: e_g[1]}
    nxt = g.n
    for v in range(h.n):
        if v not in mapping:
            mapping[v] = nxt
            nxt += 1
    edges = g.edges() + [(mapping[u], mapping[v]) for u, v in h.edges()]
    return build_graph(nxt, edges)


def _first_edge(g: Graph) -> tuple[int, int]:
    return g.edges()[0]


def _fig_5_1_1() -> Graph:
    # outer square 0..3, inner square 4..7 with both diagonals of the inner
    # square replaced by the two chords 4-6 and 5-7; each inner vertex sits
    # on an outer edge and is joined to its two ends
    a, b, c, d, e, f, g, h = range(8)
    return build_graph(
        8,
        [
            (a, b), (b, c), (c, d), (d, a),
            (a, e), (e, b), (b, f), (f, c), (c, g), (g, d), (d, h), (h, a),
            (e, g), (f, h),
        ],
    )


def _fig_5_1_2() -> Graph:
    # the 8-vertex fixture plus a center vertex adjacent to all four inner
    # vertices; the inner chords are retained
    base = _fig_5_1_1()
    edges = base.edges() + [(8, v) for v in (4, 5, 6, 7)]
    return build_graph(9, edges)


def _petersen() -> Graph:
    from itertools import combinations

    pairs = list(combinations(range(5), 2))
    idx = {p: i for i, p in enumerate(pairs)}
    edges = [
        (idx[p], idx[q])
        for p in pairs
        for q in pairs
        if p < q and not set(p) & set(q)
    ]
    return build_graph(10, edges)


NAMED_GRAPH_IDS = ("c5c3", "diamond", "fig_5_1_1", "fig_5_1_2", "petersen")


def named_graph(name: str) -> Graph:
    if name == "c5c3":
        c5, c3 = cycle(5), cycle(3)
        return edged_product(c5, _first_edge(c5), c3, _first_edge(c3))
    if name == "diamond":
        c3 = cycle(3)
        return edged_product(c3, _first_edge(c3), cycle(3), _first_edge(c3))
    if name == "fig_5_1_1":
        return _fig_5_1_1()
    if name == "fig_5_1_2":
        return _fig_5_1_2()
    if name == "petersen":
        return _petersen()
    raise GraphError(f"unknown named graph: {name!r}")


def prop23_construction(g: Graph) -> Graph:
    """Embed ``g`` into a self 2-distance graph on 4n+1 vertices.

    Two copies of ``g`` (blocks 1, 2), two copies of its complement
    (blocks 3, 4) and an apex; the apex is joined to blocks 1 and 2, and
    complete bipartite joins run between blocks 1-3, 2-4 and 3-4.  Block 1
    occupies vertices 0..n-1, so it is an induced copy of ``g``.
    """
    n = g.n
    gc = complement(g)
    edges: list[tuple[int, int]] = []
    for off, block in ((0, g), (n, g), (2 * n, gc), (3 * n, gc)):
        edges += [(u + off, v + off) for u, v in block.edges()]
    apex = 4 * n
    for i in range(n):
        for j in range(n):
            edges.append((i, 2 * n + j))          # block 1 - block 3
            edges.append((n + i, 3 * n + j))      # block 2 - block 4
            edges.append((2 * n + i, 3 * n + j))  # block 3 - block 4
        edges.append((apex, i))
        edges.append((apex, n + i))
    return build_graph(4 * n + 1, edges)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def paley(q: int) -> Graph:
    """Quadratic-residue graph on the integers mod a prime q = 1 (mod 4)."""
    if not _is_prime(q):
        raise GraphError(f"{q} is not prime (prime powers unsupported)")
    if q % 4 != 1:
        raise GraphError(f"{q} is not congruent to 1 mod 4")
    residues = {x * x % q for x in range(1, q)}
    return build_graph(q, [(a, b) for a in range(q) for b in range(a + 1, q) if (a - b) % q in residues])


_MASK64 = (1 << 64) - 1


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Edge-independent random graph, fully determined by (n, p, seed).

    Pairs are visited in the fixed order (0,1), (0,2), (1,2), (0,3), ...;
    each draws one value from a splitmix64 stream seeded with ``seed`` and
    becomes an edge when value / 2**64 < p.  Identical on every platform.
    """
    if not 0 <= p <= 1:
        raise GraphError("edge probability must lie in [0, 1]")
    state = seed & _MASK64
    threshold = int(p * (1 << 64))
    edges = []
    for j in range(n):
        for i in range(j):
            state, draw = _splitmix64(state)
            if draw < threshold:
                edges.append((i, j))
    return build_graph(n, edges)
