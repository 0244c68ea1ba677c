"""Isomorph-free exhaustive generation of small graphs and the search
driver for self 2-distance hits.

Generation proceeds level by level: every (k+1)-vertex class is obtained
from some k-vertex class by attaching one new vertex, and children are
deduplicated globally by canonical form.  Hereditary filters (4-cycle-free,
diamond-free, disjoint triangles, bounded degree) prune attachments before
any canonical form is computed; for connected targets intermediates are
kept connected (every connected graph has a deletion chain of non-cut
vertices), and unconstrained scans additionally only attach new vertices of
minimum degree, which every class admits.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, asdict
from typing import Callable, Optional

from .canon import canonical_form
from .graph import Graph
from .graph6 import encode_graph6

__all__ = [
    "SearchFilter",
    "SearchCertificate",
    "EnumerationError",
    "enumerate_graphs",
    "search_self_two_distance",
    "TOOL_VERSION",
]

TOOL_VERSION = "distgraph 0.1.0"

DEFAULT_CEILING = 10


class EnumerationError(ValueError):
    pass


@dataclass(frozen=True)
class SearchFilter:
    connected_only: bool = False
    min_n: int = 0
    regular_degree: Optional[int] = None
    require_c4_free: bool = False
    require_diamond_free: bool = False
    require_disjoint_triangles: bool = False

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class SearchCertificate:
    """Persisted record of one exhaustive scan."""

    n: int
    filter: SearchFilter
    classes_scanned: int
    hits: list[str]
    degenerate_hits: list[str]
    wall_time: float
    shard_count: int
    tool_version: str = TOOL_VERSION

    def to_json(self) -> dict:
        d = asdict(self)
        d["filter"] = self.filter.to_json()
        d["schema"] = "distgraph.search-certificate/1"
        return d


def _canonical_rep(g: Graph) -> tuple[tuple[int, int], Graph]:
    cf = canonical_form(g)
    masks = [0] * g.n
    for v in range(g.n):
        m = g.masks[v]
        pv = cf.relabeling[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            masks[pv] |= 1 << cf.relabeling[u]
    return (g.n, cf.canonical_bits), Graph(g.n, tuple(masks))


def _triangle_vertex_mask(masks: tuple[int, ...], k: int) -> int:
    out = 0
    for v in range(k):
        m = masks[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if u > v and masks[v] & masks[u]:
                out |= (1 << v) | (1 << u) | (masks[v] & masks[u])
    return out


def _regular_feasible(degs: list[int], r: int, remaining: int, connected: bool) -> bool:
    deficits = [r - d for d in degs]
    if any(d < 0 for d in deficits):
        return False
    total = sum(deficits)
    if remaining == 0:
        return total == 0
    if connected and total == 0:
        return False
    if any(d > remaining for d in deficits):
        return False
    spare = r * remaining - total  # endpoints left for edges among future vertices
    if spare < 0 or spare % 2:
        return False
    if spare > remaining * (remaining - 1):
        return False
    return True


def _expand_parent(parent: Graph, filt: SearchFilter, target_n: int, out: dict) -> None:
    k = parent.n
    masks = parent.masks
    degs = [m.bit_count() for m in masks]
    final = k + 1 == target_n
    r = filt.regular_degree
    tri_mask = None
    if filt.require_disjoint_triangles:
        tri_mask = _triangle_vertex_mask(masks, k)

    hereditary = (
        filt.require_c4_free or filt.require_diamond_free or filt.require_disjoint_triangles
    )
    # For hereditary filters and degree-bounded scans, connected targets
    # admit generation chains through connected intermediates (delete a
    # non-cut vertex).  Unconstrained scans instead attach only new
    # vertices of minimum degree (delete a minimum-degree vertex) and
    # test connectivity at the final level only.
    min_degree_rule = r is None and not hereditary
    connected_prune = filt.connected_only and not min_degree_rule

    if r is not None:
        eligible = [v for v in range(k) if degs[v] < r]
        from itertools import combinations

        lo = 1 if connected_prune else 0
        subsets = []
        for size in range(lo, min(r, len(eligible)) + 1):
            for combo in combinations(eligible, size):
                m = 0
                for v in combo:
                    m |= 1 << v
                subsets.append(m)
    else:
        lo = 1 if connected_prune else 0
        subsets = range(lo, 1 << k)

    for s in subsets:
        size = s.bit_count()

        if min_degree_rule and size:
            ok = True
            for v in range(k):
                dv = degs[v] + (1 if s >> v & 1 else 0)
                if dv < size:
                    ok = False
                    break
            if not ok:
                continue

        if filt.require_c4_free:
            bad = False
            m = s
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                rest = m
                while rest:
                    v = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    if masks[u] & masks[v]:
                        bad = True
                        break
                if bad:
                    break
            if bad:
                continue

        if filt.require_diamond_free:
            bad = False
            m = s
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                inside = masks[u] & s
                if inside.bit_count() >= 2:
                    bad = True
                    break
                if inside:
                    v = (inside & -inside).bit_length() - 1
                    if masks[u] & masks[v]:
                        bad = True
                        break
            if bad:
                continue

        if filt.require_disjoint_triangles:
            pair = None
            count = 0
            m = s
            while m and count < 2:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                inside = masks[u] & s & ~((1 << (u + 1)) - 1)
                c = inside.bit_count()
                count += c
                if c == 1 and pair is None:
                    pair = (u, (inside & -inside).bit_length() - 1)
            if count >= 2:
                continue
            if count == 1 and tri_mask & ((1 << pair[0]) | (1 << pair[1])):
                continue

        child_masks = list(masks)
        m = s
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            child_masks[v] |= 1 << k
        child_masks.append(s)

        if r is not None:
            child_degs = [cm.bit_count() for cm in child_masks]
            if not _regular_feasible(child_degs, r, target_n - (k + 1), filt.connected_only):
                continue

        child = Graph(k + 1, tuple(child_masks))
        key, rep = _canonical_rep(child)
        if key not in out:
            out[key] = rep


def _expand_chunk(parents: list[Graph], filt: SearchFilter, target_n: int) -> dict:
    out: dict = {}
    for p in parents:
        _expand_parent(p, filt, target_n, out)
    return out


def _level_reps(n: int, filt: SearchFilter, jobs: int) -> list[Graph]:
    reps = [Graph(1, (0,))]
    if filt.regular_degree is not None and not _regular_feasible(
        [0], filt.regular_degree, n - 1, filt.connected_only
    ):
        reps = []
    for k in range(1, n):
        if not reps:
            break
        if jobs > 1 and len(reps) >= 4 * jobs:
            chunks = [reps[i::jobs] for i in range(jobs)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_expand_chunk, chunks, [filt] * jobs, [n] * jobs))
            merged: dict = {}
            for res in results:
                merged.update(res)
        else:
            merged = _expand_chunk(reps, filt, n)
        reps = [merged[key] for key in sorted(merged)]
    return reps


def _passes_final(g: Graph, filt: SearchFilter) -> bool:
    from .graph import is_connected

    if filt.connected_only and not is_connected(g):
        return False
    if filt.regular_degree is not None and any(d != filt.regular_degree for d in g.degrees()):
        return False
    return True


def enumerate_graphs(
    n: int,
    filt: SearchFilter = SearchFilter(),
    visitor: Optional[Callable[[Graph], None]] = None,
    jobs: int = 1,
    ceiling: int = DEFAULT_CEILING,
) -> int:
    """Visit one canonical representative per isomorphism class on exactly
    ``n`` vertices satisfying the filter; returns the class count."""
    if n < 1:
        raise EnumerationError("vertex count must be >= 1")
    if n > ceiling:
        raise EnumerationError(f"n={n} above the enumeration ceiling {ceiling}")
    count = 0
    for g in _level_reps(n, filt, jobs):
        if not _passes_final(g, filt):
            continue
        count += 1
        if visitor is not None:
            visitor(g)
    return count


def search_self_two_distance(
    n: int,
    filt: SearchFilter = SearchFilter(),
    jobs: int = 1,
    ceiling: int = DEFAULT_CEILING,
) -> SearchCertificate:
    """Exhaustively scan all classes on ``n`` vertices for graphs isomorphic
    to their own 2-distance graph.

    Edgeless fixed points are reported separately in ``degenerate_hits``.
    """
    from .distance import is_self_two_distance

    start = time.monotonic()
    hits: list[str] = []
    degenerate: list[str] = []
    scanned = 0
    for g in _level_reps(n, filt, jobs):
        if not _passes_final(g, filt):
            continue
        scanned += 1
        if is_self_two_distance(g)[0]:
            code = encode_graph6(g)
            if g.edge_count == 0:
                degenerate.append(code)
            else:
                hits.append(code)
    return SearchCertificate(
        n=n,
        filter=filt,
        classes_scanned=scanned,
        hits=sorted(hits),
        degenerate_hits=sorted(degenerate),
        wall_time=time.monotonic() - start,
        shard_count=max(1, jobs),
    )
