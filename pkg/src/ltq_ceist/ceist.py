"""Recursive construction of floor(n/2) pairwise edge-disjoint spanning trees of LTQ_n.

Odd dimensions double the trees of LTQ_{n-1} and join each pair of copies
with one edge.  Even dimensions quadruple the trees of LTQ_{n-2}, splice
the copies, and assemble one extra tree out of the remaining cross edges.
The edges left over at even n form a path of even vertices starting at 0,
which is what the next even level uses as splice anchors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Optional, Union

import numpy as np

from .topology import Edge, edge


class SpanningTree:
    """Edge set of a (candidate) spanning tree of LTQ_n, stored as an ``(m, 2)`` array.

    Rows are canonical (``lo < hi``) but not sorted; ``edges`` gives the
    frozenset view and ``sorted_edges()`` the ordered list.
    """

    def __init__(self, n: int, edges: Union[np.ndarray, Iterable[Edge]]):
        arr = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges), dtype=np.int64)
        arr = arr.reshape(-1, 2)
        if np.any(arr[:, 0] > arr[:, 1]):
            arr = np.sort(arr, axis=1)
        self.n = n
        self.array = arr

    @cached_property
    def edges(self) -> FrozenSet[Edge]:
        return frozenset(zip(self.array[:, 0].tolist(), self.array[:, 1].tolist()))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"SpanningTree(n={self.n}, edges={len(self.array)})"


@dataclass(frozen=True)
class CeistSet:
    n: int
    trees: tuple[SpanningTree, ...]
    path: Optional[tuple[int, ...]] = None

    @property
    def path_edges(self) -> list[Edge]:
        if not self.path:
            return []
        return [edge(a, b) for a, b in zip(self.path, self.path[1:])]


def _pairs(pairs: Iterable[Edge]) -> np.ndarray:
    return np.array([edge(a, b) for a, b in pairs], dtype=np.int64).reshape(-1, 2)


def _neighbors(v: np.ndarray, d: int) -> np.ndarray:
    """Vectorized d-neighbor."""
    w = v ^ (1 << d)
    if d >= 2:
        w = w ^ ((v & 1) << (d - 1))
    return w


def _cross(start: int, count: int, d: int, parity: Optional[int] = None) -> np.ndarray:
    """Edges from the vertices ``start .. start+count-1`` (optionally one parity) along dimension d."""
    v = np.arange(start, start + count, dtype=np.int64)
    if parity is not None:
        v = v[v % 2 == parity]
    w = _neighbors(v, d)
    return np.stack([np.minimum(v, w), np.maximum(v, w)], axis=1)


def _without(edges: np.ndarray, drop: Iterable[Edge], n: int) -> np.ndarray:
    drop = _pairs(drop)
    if not len(drop):
        return edges
    keys = (edges[:, 0] << n) | edges[:, 1]
    return edges[~np.isin(keys, (drop[:, 0] << n) | drop[:, 1])]


def base_case() -> CeistSet:
    """The single tree 0-1-3-2 of LTQ_2; edge (0, 2) is left over."""
    return CeistSet(2, (SpanningTree(2, [(0, 1), (1, 3), (2, 3)]),), (0, 2))


def translate_tree(t: SpanningTree, offset: int, n: Optional[int] = None) -> SpanningTree:
    """Copy ``t`` into the subcube whose labels start at ``offset``.

    ``n`` is the dimension of the enclosing cube; it defaults to ``t.n + 1``
    for a half split.  The offset must be a nonzero multiple of ``2**t.n`` that
    leaves the copy inside LTQ_n.
    """
    if n is None:
        n = t.n + 1
    size = 1 << t.n
    if offset <= 0 or offset % size or offset + size > (1 << n):
        raise ValueError(f"offset {offset} is not a subcube base for LTQ_{t.n} inside LTQ_{n}")
    return SpanningTree(n, t.array + offset)


def odd_step(prev: CeistSet, n: int) -> CeistSet:
    """Trees of LTQ_n (n odd) from the trees and leftover path of LTQ_{n-1}."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"odd_step needs an odd n >= 3, got {n}")
    k = n // 2
    if prev.n != n - 1 or len(prev.trees) != k:
        raise ValueError(f"expected {k} trees of LTQ_{n - 1}, got {len(prev.trees)} of LTQ_{prev.n}")
    if prev.path is None or len(prev.path) != (n + 1) // 2:
        raise ValueError(f"odd_step needs a path of {(n + 1) // 2} vertices")

    high = 1 << (n - 1)
    trees = []
    for i in range(k):
        ta = prev.trees[i].array
        anchor = prev.path[i]
        trees.append(SpanningTree(n, np.concatenate([ta, ta + high, _pairs([(anchor, anchor + high)])])))
    return CeistSet(n, tuple(trees))


def even_step(prev: CeistSet, n: int) -> CeistSet:
    """Trees and leftover path of LTQ_n (n even) from those of LTQ_{n-2}."""
    if n < 4 or n % 2:
        raise ValueError(f"even_step needs an even n >= 4, got {n}")
    half = n // 2
    if prev.n != n - 2 or len(prev.trees) != half - 1:
        raise ValueError(f"expected {half - 1} trees of LTQ_{n - 2}, got {len(prev.trees)} of LTQ_{prev.n}")
    if prev.path is None or len(prev.path) != half:
        raise ValueError(f"even_step needs a path of {half} vertices")

    quarter = 1 << (n - 2)
    base_b, base_c, base_d = 2 * quarter, 3 * quarter, quarter
    pa = list(prev.path)
    pb = [v + base_b for v in pa]
    pc = [v + base_c for v in pa]
    pd = [v + base_d for v in pa]

    trees: list[SpanningTree] = []

    # splice the four copies of each inherited tree except the last
    for i in range(half - 2):
        ta = prev.trees[i].array
        splices = _pairs([(pa[i], pb[i]), (pb[i], pc[i]), (pc[i], pd[i])])
        trees.append(SpanningTree(n, np.concatenate([ta, ta + base_b, ta + base_c, ta + base_d, splices])))

    # last inherited tree: B, C, D copies plus every A-D edge
    i = half - 2
    last = prev.trees[i].array
    splices = _pairs([(pb[i], pc[i]), (pc[i], pd[i])])
    a_to_d = _cross(0, quarter, n - 2)
    trees.append(SpanningTree(n, np.concatenate([last + base_b, last + base_c, last + base_d, splices, a_to_d])))

    # new tree: A's copy of the last tree plus the unused cross edges
    used_ab = [(pa[j], pb[j]) for j in list(range(half - 2)) + [half - 1]]
    used_bc = [(pb[j], pc[j]) for j in range(half - 1)]
    used_cd = [(pc[j], pd[j]) for j in range(half - 1)]
    path_copies = _pairs((p[j], p[j + 1]) for p in (pb, pc, pd) for j in range(half - 1))
    parts = [
        last,
        _without(_cross(0, quarter, n - 1, 0), used_ab, n),  # even A-B
        _without(_cross(base_b, quarter, n - 2, 0), used_bc, n),  # even B-C
        _without(_cross(base_c, quarter, n - 1, 0), used_cd, n),  # even C-D
        _cross(0, quarter, n - 1, 1),  # odd A-C
        _cross(base_c, quarter, n - 2, 1),  # odd C-B
        _cross(base_b, quarter, n - 1, 1),  # odd B-D
        path_copies,
    ]
    trees.append(SpanningTree(n, np.concatenate(parts)))

    path = tuple(pa) + (pa[-1] + base_b,)
    return CeistSet(n, tuple(trees), path)


def construct(n: int) -> CeistSet:
    """floor(n/2) edge-disjoint spanning trees of LTQ_n, plus the leftover path when n is even."""
    if n < 2:
        raise ValueError(f"LTQ_n requires n >= 2, got n={n}")
    # iterative form of the recursion: 2 -> 4 -> ... then one odd step if needed
    cs = base_case()
    top_even = n - (n % 2)
    for m in range(4, top_even + 1, 2):
        cs = even_step(cs, m)
    if n % 2:
        cs = odd_step(cs, n)
    return cs

