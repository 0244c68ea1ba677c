"""graph6 codec for graphs on at most 62 vertices.

Layout: first byte is n+63; the upper-triangle bits x(0,1), x(0,2),
x(1,2), x(0,3), ... follow column-major, zero-padded to a multiple of six,
each 6-bit group emitted as its value plus 63.  sparse6 and the multi-byte
size headers are deliberately not supported.
"""

from __future__ import annotations

from .graph import Graph, build_graph

__all__ = ["encode_graph6", "decode_graph6", "Graph6Error"]


class Graph6Error(ValueError):
    pass


def encode_graph6(g: Graph) -> str:
    if g.n > 62:
        raise Graph6Error("graphs on more than 62 vertices are unsupported")
    bits = []
    for j in range(1, g.n):
        mj = g.masks[j]
        for i in range(j):
            bits.append(mj >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"non-printable or out-of-range byte {ord(ch)}")
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("multi-byte size headers (n > 62) are unsupported")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise Graph6Error(f"insufficient bit groups: need {need}, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing garbage: {len(body) - need} extra bytes")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[k:]):
        raise Graph6Error("nonzero padding bits")
    return build_graph(n, edges)
