"""Immutable simple undirected graphs on dense vertices 0..n-1."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

#: Sentinel for distances/diameter/girth of disconnected or acyclic graphs.
#: Compares greater than every natural number.
INFINITY = float("inf")

ExtendedNat = "int | float"


class GraphError(ValueError):
    """Raised on malformed graph construction arguments."""


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph.

    ``masks[v]`` is the neighborhood of ``v`` as a bitmask (bit ``u`` set
    iff ``u ~ v``).  Instances are immutable and hashable, so they can be
    shared freely across workers.
    """

    n: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be >= 0")
        if len(self.masks) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.masks):
            if m & ~full:
                raise GraphError(f"neighbor of {v} out of range")
            if m >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v, m in enumerate(self.masks):
            w = m
            while w:
                u = (w & -w).bit_length() - 1
                w &= w - 1
                if not self.masks[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at {{{u},{v}}}")

    # -- basic accessors -------------------------------------------------

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.masks]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        m = self.masks[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            yield u

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            m = self.masks[v] >> (v + 1) << (v + 1)
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                out.append((v, u))
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse, loops rejected."""
    if n < 0:
        raise GraphError("vertex count must be >= 0")
    masks = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge endpoint out of range: ({u},{v})")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ m) & ~(1 << v) for v, m in enumerate(g.masks)))


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph induced on ``vs``, relabeled 0..|vs|-1 by ascending index."""
    order = sorted(set(vs))
    for v in order:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(order)}
    masks = [0] * len(order)
    for v in order:
        m = g.masks[v]
        for u in order:
            if m >> u & 1:
                masks[pos[v]] |= 1 << pos[u]
    return Graph(len(order), tuple(masks))


def bfs_distances(g: Graph, src: int) -> list[int]:
    """Distances from ``src``; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[src] = 0
    seen = frontier = 1 << src
    d = 0
    masks = g.masks
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= masks[v]
        nxt &= ~seen
        seen |= nxt
        d += 1
        m = nxt
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            dist[v] = d
        frontier = nxt
    return dist


def component_masks(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks."""
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        src = (remaining & -remaining).bit_length() - 1
        seen = frontier = 1 << src
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= g.masks[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        remaining &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(component_masks(g)) == 1


def triangle_count(g: Graph) -> int:
    total = 0
    for v in range(g.n):
        m = g.masks[v] >> (v + 1) << (v + 1)
        w = m
        while w:
            u = (w & -w).bit_length() - 1
            w &= w - 1
            # count common neighbors above u to take each triangle once
            total += (g.masks[v] & g.masks[u] >> (u + 1) << (u + 1)).bit_count()
    return total


def girth(g: Graph):
    """Length of a shortest cycle; INFINITY if acyclic.

    Removes each edge in turn and measures the detour distance between its
    endpoints.  Exact by definition and cheap at the sizes handled here.
    """
    best = INFINITY
    for u, v in g.edges():
        masks = list(g.masks)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        stripped = Graph(g.n, tuple(masks))
        d = bfs_distances(stripped, u)[v]
        if d >= 0 and d + 1 < best:
            best = d + 1
            if best == 3:
                break
    return best


def _articulation_free(g: Graph) -> bool:
    """True when the (connected) graph has no cut vertex (iterative lowpoint DFS)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    timer = 0
    root_children = 0
    it_stack = [(0, g.masks[0])]
    disc[0] = low[0] = timer
    timer += 1
    while it_stack:
        v, m = it_stack[-1]
        if m:
            u = (m & -m).bit_length() - 1
            it_stack[-1] = (v, m & (m - 1))
            if disc[u] == -1:
                parent[u] = v
                if v == 0:
                    root_children += 1
                disc[u] = low[u] = timer
                timer += 1
                it_stack.append((u, g.masks[u]))
            elif u != parent[v]:
                if disc[u] < low[v]:
                    low[v] = disc[u]
        else:
            it_stack.pop()
            if it_stack:
                p = it_stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != 0 and low[v] >= disc[p]:
                    return False
    return root_children <= 1


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and _articulation_free(g)


@dataclass(frozen=True)
class MetricsReport:
    diameter: "int | float"
    girth: "int | float"
    triangle_count: int
    max_degree: int
    degree_histogram: dict = field(hash=False)
    component_count: int = 1
    two_connected: bool = False


def metrics(g: Graph) -> MetricsReport:
    """Diameter, girth, triangle count, degree data and connectivity flags."""
    comps = component_masks(g)
    if g.n <= 1:
        diameter = 0
    elif len(comps) > 1:
        diameter = INFINITY
    else:
        diameter = 0
        for v in range(g.n):
            diameter = max(diameter, max(bfs_distances(g, v)))
    hist: dict[int, int] = {}
    for d in g.degrees():
        hist[d] = hist.get(d, 0) + 1
    return MetricsReport(
        diameter=diameter,
        girth=girth(g),
        triangle_count=triangle_count(g),
        max_degree=max(g.degrees(), default=0),
        degree_histogram=hist,
        component_count=len(comps),
        two_connected=is_two_connected(g),
    )
