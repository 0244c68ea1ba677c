"""Exact canonical labeling, isomorphism testing and subgraph search.

Canonical labeling works by iterated color refinement plus backtracking
over non-singleton cells, selecting the lexicographically smallest
upper-triangle adjacency bit string.  Automorphisms discovered during the
search prune sibling branches, which keeps highly symmetric graphs
(complete graphs, unions of cliques) tractable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

__all__ = ["CanonicalForm", "canonical_form", "canonical_key", "are_isomorphic", "find_subgraph"]


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-class key: two graphs with equal ``n`` are isomorphic
    iff their ``canonical_bits`` agree.

    ``canonical_bits`` packs the upper triangle x(0,1), x(0,2), x(1,2),
    x(0,3), ... of the canonically relabeled graph, first pair in the most
    significant bit.  ``relabeling[v]`` is the canonical position of
    original vertex ``v``.
    """

    n: int
    canonical_bits: int
    relabeling: tuple[int, ...]


def _refine(masks: tuple[int, ...], n: int, colors: list[int]) -> list[int]:
    """Stable color refinement; returns colors renumbered 0..k-1 in an
    order invariant under relabeling of the vertices."""
    while True:
        # collect one bitmask per color class
        class_masks: dict[int, int] = {}
        for v in range(n):
            c = colors[v]
            class_masks[c] = class_masks.get(c, 0) | (1 << v)
        if len(class_masks) == n:
            return colors
        items = sorted(class_masks.items())
        sigs = []
        for v in range(n):
            m = masks[v]
            sigs.append((colors[v], tuple((m & cm).bit_count() for _, cm in items)))
        order = sorted(set(sigs))
        if len(order) == len(class_masks):
            return colors
        index = {s: i for i, s in enumerate(order)}
        colors = [index[s] for s in sigs]


def _cells(colors: list[int], n: int) -> list[list[int]]:
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    return [by_color[c] for c in sorted(by_color)]


def _bits_from_order(masks: tuple[int, ...], order: list[int]) -> int:
    bits = 0
    for j in range(1, len(order)):
        mj = masks[order[j]]
        for i in range(j):
            bits = bits << 1 | (mj >> order[i] & 1)
    return bits


def canonical_form(g: Graph) -> CanonicalForm:
    n = g.n
    if n == 0:
        return CanonicalForm(0, 0, ())
    masks = g.masks
    degs = [m.bit_count() for m in masks]
    init = _refine(masks, n, degs[:])

    best_bits: int | None = None
    best_order: list[int] | None = None
    autos: list[tuple[int, ...]] = []

    def search(colors: list[int], path: tuple[int, ...]) -> None:
        nonlocal best_bits, best_order
        cells = _cells(colors, n)
        target = None
        for cell in cells:
            if len(cell) > 1:
                target = cell
                break
        if target is None:
            order = [c[0] for c in cells]
            bits = _bits_from_order(masks, order)
            if best_bits is None or bits < best_bits:
                best_bits = bits
                best_order = order
            elif bits == best_bits and len(autos) < 64:
                # two labelings with identical code give an automorphism
                gamma = [0] * n
                for i, v in enumerate(best_order):
                    gamma[v] = order[i]
                autos.append(tuple(gamma))
            return
        # automorphisms fixing the current individualization path may
        # translate between siblings of the target cell
        usable = [a for a in autos if all(a[p] == p for p in path)]
        seen_autos = len(autos)
        tried: set[int] = set()
        for v in target:  # ascending original index: deterministic ties
            if any(a[v] in tried for a in usable):
                tried.add(v)
                continue
            tried.add(v)
            nxt = [c * 2 for c in colors]
            nxt[v] -= 1
            search(_refine(masks, n, nxt), path + (v,))
            if len(autos) != seen_autos:
                usable = [a for a in autos if all(a[p] == p for p in path)]
                seen_autos = len(autos)

    search(init, ())
    assert best_order is not None
    relabeling = [0] * n
    for pos, v in enumerate(best_order):
        relabeling[v] = pos
    return CanonicalForm(n, best_bits or 0, tuple(relabeling))


def canonical_key(g: Graph) -> tuple[int, int]:
    cf = canonical_form(g)
    return (cf.n, cf.canonical_bits)


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of ``g``."""
    cf = canonical_form(g)
    masks = [0] * g.n
    for v in range(g.n):
        m = g.masks[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            masks[cf.relabeling[v]] |= 1 << cf.relabeling[u]
    return Graph(g.n, tuple(masks))


def _vertex_invariants(g: Graph) -> list[tuple[int, ...]]:
    """Per-vertex invariant used to filter mapping candidates."""
    degs = g.degrees()
    inv = []
    for v in range(g.n):
        nd = sorted(degs[u] for u in g.neighbors(v))
        tri = 0
        for u in g.neighbors(v):
            tri += (g.masks[v] & g.masks[u]).bit_count()
        inv.append((degs[v], tri // 2, *nd))
    return inv


def _verify_bijection(g: Graph, h: Graph, phi: list[int]) -> bool:
    for v in range(g.n):
        target = 0
        m = g.masks[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            target |= 1 << phi[u]
        if target != h.masks[phi[v]]:
            return False
    return True


def are_isomorphic(g: Graph, h: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Isomorphism test with witness.

    The witness maps vertices of ``g`` onto vertices of ``h`` and is
    verified edge-for-edge before being returned.
    """
    if g.n != h.n:
        return False, None
    n = g.n
    if n == 0:
        return True, ()
    if g.edge_count != h.edge_count:
        return False, None
    inv_g = _vertex_invariants(g)
    inv_h = _vertex_invariants(h)
    if sorted(inv_g) != sorted(inv_h):
        return False, None

    # map g-vertices in an order that keeps each new vertex attached to the
    # already mapped part whenever possible, rarest invariant first
    counts: dict[tuple, int] = {}
    for s in inv_g:
        counts[s] = counts.get(s, 0) + 1
    order: list[int] = []
    placed = 0
    unused = set(range(n))
    while unused:
        attached = [v for v in unused if g.masks[v] & placed]
        pool = attached or list(unused)
        v = min(pool, key=lambda v: (counts[inv_g[v]], -g.degree(v), v))
        order.append(v)
        unused.remove(v)
        placed |= 1 << v

    phi = [-1] * n
    used_h = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        mv = g.masks[v]
        for w in range(n):
            if used_h[w] or inv_h[w] != inv_g[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if bool(mv >> u & 1) != bool(h.masks[w] >> phi[u] & 1):
                    ok = False
                    break
            if ok:
                phi[v] = w
                used_h[w] = True
                if extend(i + 1):
                    return True
                used_h[w] = False
                phi[v] = -1
        return False

    if not extend(0):
        return False, None
    assert _verify_bijection(g, h, phi)
    return True, tuple(phi)


def find_subgraph(pattern: Graph, host: Graph, induced: bool = False) -> tuple[int, ...] | None:
    """Injective embedding of ``pattern`` into ``host``, or None.

    With ``induced=True`` non-edges of the pattern must also map onto
    non-edges of the host.
    """
    p, n = pattern.n, host.n
    if p > n:
        return None
    if p == 0:
        return ()
    host_degs = host.degrees()
    pat_degs = pattern.degrees()

    order: list[int] = []
    placed = 0
    unused = set(range(p))
    while unused:
        attached = [v for v in unused if pattern.masks[v] & placed]
        pool = attached or list(unused)
        v = max(pool, key=lambda v: (pat_degs[v], -v))
        order.append(v)
        unused.remove(v)
        placed |= 1 << v

    phi = [-1] * p
    used = [False] * n

    def extend(i: int) -> bool:
        if i == p:
            return True
        v = order[i]
        mv = pattern.masks[v]
        for w in range(n):
            if used[w] or (not induced and host_degs[w] < pat_degs[v]):
                continue
            ok = True
            for j in range(i):
                u = order[j]
                pe = bool(mv >> u & 1)
                he = bool(host.masks[w] >> phi[u] & 1)
                if pe and not he:
                    ok = False
                    break
                if induced and he and not pe:
                    ok = False
                    break
            if ok:
                phi[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                phi[v] = -1
        return False

    if not extend(0):
        return None
    return tuple(phi)
