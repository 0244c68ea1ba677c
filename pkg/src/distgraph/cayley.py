"""Finite groups as explicit multiplication tables and Cayley graphs.

Verifies, at desk scale, that the 2-distance graph of Cay(G, S) is again a
Cayley graph on the squared connection set with S and the identity removed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distance import distance_graph
from .graph import Graph

__all__ = [
    "GroupTable",
    "group_table",
    "validate_connection_set",
    "cayley_graph",
    "product_set",
    "DistanceIdentityReport",
    "distance_identity_check",
    "group_automorphisms",
]


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its full multiplication table.

    ``mul[x][y]`` is the product xy; associativity and inverses are checked
    exhaustively at construction (orders here never exceed 64).
    """

    order: int
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]

    def __post_init__(self) -> None:
        n, mul, e = self.order, self.mul, self.identity
        if len(mul) != n or any(len(row) != n for row in mul):
            raise GroupError("multiplication table has wrong shape")
        for x in range(n):
            if mul[e][x] != x or mul[x][e] != x:
                raise GroupError("identity element does not act as identity")
            if mul[x][self.inv[x]] != e or mul[self.inv[x]][x] != e:
                raise GroupError(f"inverse map wrong at element {x}")
        if n <= 64:
            for x in range(n):
                for y in range(n):
                    for z in range(n):
                        if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                            raise GroupError("multiplication is not associative")


def group_table(kind: str, m: int) -> GroupTable:
    """Cyclic group of order m, or dihedral group of order 2m.

    Dihedral indexing: elements 0..m-1 are the rotations r^i, elements
    m..2m-1 are the reflections s*r^i, with s*r^i * s*r^j = r^(j-i).
    """
    if kind == "cyclic":
        if m < 1:
            raise GroupError("cyclic group needs order >= 1")
        mul = tuple(tuple((i + j) % m for j in range(m)) for i in range(m))
        inv = tuple((-i) % m for i in range(m))
        return GroupTable(m, mul, 0, inv)
    if kind == "dihedral":
        if m < 3:
            raise GroupError("dihedral group needs m >= 3")
        n = 2 * m

        def mult(a: int, b: int) -> int:
            ra, fa = a % m, a >= m
            rb, fb = b % m, b >= m
            if not fa and not fb:
                return (ra + rb) % m
            if not fa and fb:
                return m + (rb - ra) % m
            if fa and not fb:
                return m + (ra + rb) % m
            return (rb - ra) % m

        mul = tuple(tuple(mult(a, b) for b in range(n)) for a in range(n))
        inv = tuple(mul[a].index(0) for a in range(n))
        return GroupTable(n, mul, 0, inv)
    raise GroupError(f"unknown group kind: {kind!r}")


def validate_connection_set(g: GroupTable, s: frozenset[int]) -> frozenset[int]:
    s = frozenset(s)
    for x in s:
        if not 0 <= x < g.order:
            raise GroupError(f"element {x} out of range")
    if g.identity in s:
        raise GroupError("connection set must not contain the identity")
    if any(g.inv[x] not in s for x in s):
        raise GroupError("connection set must be closed under inversion")
    return s


def cayley_graph(g: GroupTable, s: frozenset[int]) -> Graph:
    s = validate_connection_set(g, s)
    masks = [0] * g.order
    for x in range(g.order):
        ix = g.inv[x]
        for y in range(g.order):
            if y != x and g.mul[ix][y] in s:
                masks[x] |= 1 << y
    return Graph(g.order, tuple(masks))


def product_set(g: GroupTable, s: frozenset[int], n: int) -> frozenset[int]:
    """All products of exactly n elements of s (with repetition)."""
    if n < 1:
        raise GroupError("product length must be >= 1")
    current = frozenset(s)
    for _ in range(n - 1):
        current = frozenset(g.mul[a][b] for a in current for b in s)
    return current


@dataclass(frozen=True)
class DistanceIdentityReport:
    holds: bool
    connection_set_used: frozenset[int]


def distance_identity_check(g: GroupTable, s: frozenset[int]) -> DistanceIdentityReport:
    """Labeled-graph equality of the 2-distance graph of Cay(G, S) with
    Cay(G, S^2 minus S and the identity).

    The identity must be dropped on top of S itself: squares of involutions
    land on it and no connection set may contain it.
    """
    s = validate_connection_set(g, s)
    gamma2 = distance_graph(cayley_graph(g, s), 2)
    used = product_set(g, s, 2) - s - {g.identity}
    return DistanceIdentityReport(gamma2 == cayley_graph(g, used), used)


def group_automorphisms(g: GroupTable) -> list[tuple[int, ...]]:
    """All automorphisms, by backtracking over element images.

    Exhaustive and only intended for small orders (report-style checks on
    whether some automorphism maps S onto the distance-two connection set).
    """
    n = g.order
    order_of = [0] * n
    for x in range(n):
        k, y = 1, x
        while y != g.identity:
            y = g.mul[y][x]
            k += 1
        order_of[x] = k

    phi = [-1] * n
    used = [False] * n
    phi[g.identity] = g.identity
    used[g.identity] = True
    elems = sorted(set(range(n)) - {g.identity})
    out: list[tuple[int, ...]] = []

    def extend(i: int) -> None:
        if i == len(elems):
            if all(
                phi[g.mul[a][b]] == g.mul[phi[a]][phi[b]]
                for a in range(n)
                for b in range(n)
            ):
                out.append(tuple(phi))
            return
        x = elems[i]
        for y in range(n):
            if used[y] or order_of[y] != order_of[x]:
                continue
            phi[x] = y
            # incremental homomorphism check against settled images
            ok = True
            for a in range(n):
                if phi[a] < 0:
                    continue
                p1, p2 = g.mul[a][x], g.mul[x][a]
                if phi[p1] >= 0 and g.mul[phi[a]][y] != phi[p1]:
                    ok = False
                    break
                if phi[p2] >= 0 and g.mul[y][phi[a]] != phi[p2]:
                    ok = False
                    break
            if ok:
                used[y] = True
                extend(i + 1)
                used[y] = False
            phi[x] = -1

    extend(0)
    return out
