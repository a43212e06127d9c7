"""Locally twisted cube LTQ_n: adjacency, generators and vertex classification.

Vertices are plain integers in ``[0, 2**n)``; bit ``i`` of the label is the
``u_i`` digit of the binary string ``u_{n-1} ... u_0``.  Edges are
``(lo, hi)`` tuples with ``lo < hi``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

Vertex = int
Edge = Tuple[int, int]


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


def edge(u: int, v: int) -> Edge:
    """Canonical form of the undirected edge ``{u, v}``."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def bit(v: int, i: int) -> int:
    return (v >> i) & 1


def to_binary(v: int, n: int) -> str:
    return format(v, f"0{n}b")


def _check_dimension(n: int) -> None:
    if n < 2:
        raise ValueError(f"LTQ_n requires n >= 2, got n={n}")


def _check_vertex(v: int, n: int) -> None:
    if not 0 <= v < (1 << n):
        raise ValueError(f"vertex {v} outside [0, 2^{n})")


def dimension_neighbor(v: int, d: int, n: int) -> int:
    """Return the d-neighbor of ``v``: the neighbor whose leftmost differing bit is ``d``."""
    _check_vertex(v, n)
    if not 0 <= d < n:
        raise ValueError(f"dimension {d} outside [0, {n - 1}]")
    w = v ^ (1 << d)
    if d >= 2 and v & 1:
        w ^= 1 << (d - 1)
    return w


def is_adjacent(u: int, v: int, n: int) -> bool:
    """Literal adjacency test: checks both conditions of the non-recursive definition bit by bit."""
    _check_vertex(u, n)
    _check_vertex(v, n)
    u0 = bit(u, 0)
    for i in range(n):
        if bit(u, i) == bit(v, i):
            continue
        if i >= 2:
            if bit(u, i - 1) != bit(v, i - 1) ^ u0:
                continue
            rest = [j for j in range(n) if j not in (i, i - 1)]
        else:
            rest = [j for j in range(n) if j != i]
        if all(bit(u, j) == bit(v, j) for j in rest):
            return True
    return False


@dataclass(frozen=True)
class LtqTopology:
    n: int
    edges: FrozenSet[Edge]

    @property
    def num_vertices(self) -> int:
        return 1 << self.n

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def build_ltq_direct(n: int) -> LtqTopology:
    """Build LTQ_n vertex by vertex from the d-neighbor rule."""
    _check_dimension(n)
    edges = set()
    for v in range(1 << n):
        for d in range(n):
            w = dimension_neighbor(v, d, n)
            if v < w:
                edges.add((v, w))
    return LtqTopology(n, frozenset(edges))


def build_ltq_recursive(n: int) -> LtqTopology:
    """Build LTQ_n by doubling LTQ_2, adding the twisted cross links at each level."""
    _check_dimension(n)
    edges = {(0, 1), (0, 2), (1, 3), (2, 3)}
    for m in range(3, n + 1):
        high = 1 << (m - 1)
        copy = {(a + high, b + high) for a, b in edges}
        cross = set()
        for u in range(high):
            # 0 u_{m-2} ... u_0  ->  1 (u_{m-2} xor u_0) u_{m-3} ... u_0
            partner = high | (u ^ ((u & 1) << (m - 2)))
            cross.add((u, partner))
        edges |= copy | cross
    return LtqTopology(n, frozenset(edges))


def edge_parity(e: Edge) -> Parity:
    a, b = e[0] & 1, e[1] & 1
    if a != b:
        return Parity.MIXED
    return Parity.ODD if a else Parity.EVEN


_SUBCUBES = {0b00: "A", 0b10: "B", 0b11: "C", 0b01: "D"}


def subcube_of(v: int, n: int) -> str:
    """Quarter of an even-dimensional LTQ_n holding ``v``, by its two leading bits."""
    if n % 2 or n < 4:
        raise ValueError(f"subcube split needs an even n >= 4, got n={n}")
    _check_vertex(v, n)
    return _SUBCUBES[v >> (n - 2)]


def subcube_base(name: str, n: int) -> int:
    """Smallest label in subcube ``name`` of LTQ_n (n even)."""
    offsets = {"A": 0, "B": 1 << (n - 1), "C": 3 << (n - 2), "D": 1 << (n - 2)}
    return offsets[name]


def lemma1_holds(u: int, v: int, n: int) -> bool:
    """Check the label-difference law for an adjacent pair ``u > v``.

    Even ``u``: ``u - v`` is a power of two.  Odd ``u``: ``u - v`` is 1 or 2,
    or ``2**i - (-1)**u_{i-1} * 2**(i-1)`` for some ``i >= 2``.
    """
    if u <= v:
        raise ValueError(f"expected u > v, got u={u}, v={v}")
    if not is_adjacent(u, v, n):
        raise ValueError(f"({u}, {v}) is not an edge of LTQ_{n}")
    diff = u - v
    if u % 2 == 0:
        return any(diff == 1 << i for i in range(n))
    if diff in (1, 2):
        return True
    for i in range(2, n):
        sign = -1 if bit(u, i - 1) else 1
        if diff == (1 << i) - sign * (1 << (i - 1)):
            return True
    return False


def neighbors(v: int, n: int) -> list[int]:
    return [dimension_neighbor(v, d, n) for d in range(n)]


def edges_between(edges: Iterable[Edge], n: int) -> dict[tuple[str, str], list[Edge]]:
    """Group the subcube-crossing edges of an even-dimensional LTQ_n by subcube pair."""
    groups: dict[tuple[str, str], list[Edge]] = {}
    for e in edges:
        a, b = subcube_of(e[0], n), subcube_of(e[1], n)
        if a != b:
            groups.setdefault(tuple(sorted((a, b))), []).append(e)
    return groups
