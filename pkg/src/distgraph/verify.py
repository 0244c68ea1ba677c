"""One-command re-verifications of the known self 2-distance
classifications and conjecture evidence scans, at desk scale."""

from __future__ import annotations

import time
from dataclasses import dataclass, asdict
from typing import Optional

from .distance import is_self_two_distance
from .enumeration import (
    SearchCertificate,
    SearchFilter,
    TOOL_VERSION,
    search_self_two_distance,
)
from .families import cycle, named_graph
from .graph import Graph, is_two_connected
from .graph6 import decode_graph6, encode_graph6

__all__ = [
    "SrgParams",
    "srg_parameters",
    "VerificationReport",
    "verify_classification",
    "verify_no_cubic",
    "conjecture_scan",
    "CLASSIFICATION_FAMILIES",
]


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int


def srg_parameters(g: Graph) -> Optional[SrgParams]:
    """Parameters when ``g`` is strongly regular, else None.

    Requires constant degree, constant codegree on adjacent and on
    non-adjacent pairs, and at least one pair of each kind.
    """
    if g.n < 2:
        return None
    degs = g.degrees()
    k = degs[0]
    if any(d != k for d in degs):
        return None
    lam = mu = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            c = (g.masks[u] & g.masks[v]).bit_count()
            if g.has_edge(u, v):
                if lam is None:
                    lam = c
                elif lam != c:
                    return None
            else:
                if mu is None:
                    mu = c
                elif mu != c:
                    return None
    if lam is None or mu is None:
        return None
    return SrgParams(g.n, k, lam, mu)


@dataclass
class VerificationReport:
    claim_id: str
    max_n: int
    status: str  # "confirmed" | "counterexample"
    expected_hits: list[str]
    actual_hits: list[str]
    counterexamples: list[str]
    certificate: SearchCertificate

    def to_json(self) -> dict:
        d = asdict(self)
        d["certificate"] = self.certificate.to_json()
        d["schema"] = "distgraph.verification-report/1"
        return d


CLASSIFICATION_FAMILIES = {
    "c4_free": SearchFilter(connected_only=True, min_n=3, require_c4_free=True),
    "disjoint_triangles": SearchFilter(connected_only=True, min_n=3, require_disjoint_triangles=True),
    "diamond_free": SearchFilter(connected_only=True, min_n=3, require_diamond_free=True),
}


def _expected_classification_hits(family: str, max_n: int) -> list[str]:
    """Expected hit lists: odd cycles of length at least five, the glued
    pentagon/triangle, and for the diamond-free family the two 8- and
    9-vertex fixtures."""
    graphs = [cycle(n) for n in range(5, max_n + 1, 2)]
    if max_n >= 6:
        graphs.append(named_graph("c5c3"))
    if family == "diamond_free":
        if max_n >= 8:
            graphs.append(named_graph("fig_5_1_1"))
        if max_n >= 9:
            graphs.append(named_graph("fig_5_1_2"))
    return sorted(_canonical_g6(g) for g in graphs)


def _canonical_g6(g: Graph) -> str:
    from .canon import canonical_graph

    return encode_graph6(canonical_graph(g))


def _merge_certificates(
    certs: list[SearchCertificate], max_n: int, filt: SearchFilter, jobs: int, wall: float
) -> SearchCertificate:
    hits: list[str] = []
    degenerate: list[str] = []
    scanned = 0
    for c in certs:
        hits += c.hits
        degenerate += c.degenerate_hits
        scanned += c.classes_scanned
    return SearchCertificate(
        n=max_n,
        filter=filt,
        classes_scanned=scanned,
        hits=sorted(hits),
        degenerate_hits=sorted(degenerate),
        wall_time=wall,
        shard_count=max(1, jobs),
        tool_version=TOOL_VERSION,
    )


def _scan_range(filt: SearchFilter, max_n: int, jobs: int, ceiling: int) -> SearchCertificate:
    start = time.monotonic()
    lo = max(3, filt.min_n)
    certs = [
        search_self_two_distance(n, filt, jobs=jobs, ceiling=ceiling)
        for n in range(lo, max_n + 1)
    ]
    return _merge_certificates(certs, max_n, filt, jobs, time.monotonic() - start)


def _revalidate_hits(cert: SearchCertificate) -> None:
    """Every persisted hit must decode, re-pass the predicate and
    re-canonicalize to itself."""
    for code in cert.hits:
        g = decode_graph6(code)
        if not is_self_two_distance(g)[0]:
            raise AssertionError(f"hit {code} fails the self 2-distance predicate")
        if _canonical_g6(g) != code:
            raise AssertionError(f"hit {code} is not in canonical form")


def verify_classification(family: str, max_n: int, jobs: int = 1, ceiling: int = 10) -> VerificationReport:
    if family not in CLASSIFICATION_FAMILIES:
        raise ValueError(f"unknown classification family: {family!r}")
    filt = CLASSIFICATION_FAMILIES[family]
    cert = _scan_range(filt, max_n, jobs, ceiling)
    _revalidate_hits(cert)
    expected = _expected_classification_hits(family, max_n)
    actual = cert.hits
    extra = sorted(set(actual) - set(expected))
    status = "confirmed" if actual == expected and not extra else "counterexample"
    return VerificationReport(
        claim_id=f"classification.{family}",
        max_n=max_n,
        status=status,
        expected_hits=expected,
        actual_hits=actual,
        counterexamples=extra,
        certificate=cert,
    )


def verify_no_cubic(max_n: int, jobs: int = 1, ceiling: int = 14) -> VerificationReport:
    """Scan every connected 3-regular class up to ``max_n``; the claim is
    confirmed exactly when no hit exists."""
    filt = SearchFilter(connected_only=True, min_n=4, regular_degree=3)
    start = time.monotonic()
    certs = [
        search_self_two_distance(n, filt, jobs=jobs, ceiling=max(ceiling, max_n))
        for n in range(4, max_n + 1, 2)
    ]
    cert = _merge_certificates(certs, max_n, filt, jobs, time.monotonic() - start)
    _revalidate_hits(cert)
    return VerificationReport(
        claim_id="no-cubic-self-two-distance",
        max_n=max_n,
        status="confirmed" if not cert.hits else "counterexample",
        expected_hits=[],
        actual_hits=cert.hits,
        counterexamples=cert.hits,
        certificate=cert,
    )


def conjecture_scan(max_n: int, jobs: int = 1, ceiling: int = 10) -> tuple[VerificationReport, VerificationReport]:
    """Evidence scans (not proofs) for the two open conjectures: every
    connected hit is 2-connected, and no hit is regular of odd degree."""
    filt = SearchFilter(connected_only=True, min_n=3)
    cert = _scan_range(filt, max_n, jobs, ceiling)
    _revalidate_hits(cert)
    not_two_connected = []
    odd_regular = []
    for code in cert.hits:
        g = decode_graph6(code)
        if not is_two_connected(g):
            not_two_connected.append(code)
        degs = g.degrees()
        if degs and all(d == degs[0] for d in degs) and degs[0] % 2 == 1:
            odd_regular.append(code)
    two_conn = VerificationReport(
        claim_id="conjecture.two-connected (evidence)",
        max_n=max_n,
        status="confirmed" if not not_two_connected else "counterexample",
        expected_hits=[],
        actual_hits=cert.hits,
        counterexamples=not_two_connected,
        certificate=cert,
    )
    odd = VerificationReport(
        claim_id="conjecture.no-odd-regular (evidence)",
        max_n=max_n,
        status="confirmed" if not odd_regular else "counterexample",
        expected_hits=[],
        actual_hits=cert.hits,
        counterexamples=odd_regular,
        certificate=cert,
    )
    return two_conn, odd
