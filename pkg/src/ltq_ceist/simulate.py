"""Broadcast latency of round-robin multi-tree dispatch versus a single tree.

A message of ``x`` packets is spread cyclically over ``k`` trees.  Each tree
forwards its packets one after another, one hop per packet per time unit,
so a channel carrying ``p`` packets over a tree of diameter ``mt`` needs
``p * mt`` time units to reach its farthest vertex.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import asdict, dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .ceist import SpanningTree
from .topology import Edge

DEFAULT_MESSAGE_BYTES = 1 << 20
DEFAULT_PACKET_BYTES = 1500
DEFAULT_PACKET_COUNT = 700


@dataclass(frozen=True)
class BroadcastConfig:
    message_bytes: int = DEFAULT_MESSAGE_BYTES
    packet_payload_bytes: int = DEFAULT_PACKET_BYTES
    packet_count_override: Optional[int] = DEFAULT_PACKET_COUNT

    @property
    def packet_count(self) -> int:
        if self.packet_count_override is not None:
            x = self.packet_count_override
        else:
            if self.packet_payload_bytes <= 0:
                raise ValueError("packet payload must be positive")
            x = -(-self.message_bytes // self.packet_payload_bytes)
        if x < 1:
            raise ValueError(f"packet count must be >= 1, got {x}")
        return x


@dataclass
class LatencyReport:
    n: int
    k: int
    x: int
    mt: list[int]
    loads: list[int]
    mbl_multi: int
    mbl_single: int
    abl_multi_literal: float
    abl_single_literal: float
    abl_multi_scaled: float
    abl_single_scaled: float
    pair_count: int
    # max(mt) <= k * min(mt) and x >= k, under which mbl_multi <= mbl_single follows
    mbl_condition: bool

    def to_dict(self) -> dict:
        return asdict(self)


class _RootedTree:
    """Parent pointers and BFS levels of a spanning tree rooted at vertex 0."""

    def __init__(self, t: SpanningTree):
        size = 1 << t.n
        adj: list[list[int]] = [[] for _ in range(size)]
        for u, v in t.edges:
            adj[u].append(v)
            adj[v].append(u)
        parent = [-1] * size
        depth = [-1] * size
        depth[0] = 0
        levels: list[list[int]] = [[0]]
        while True:
            nxt = []
            for u in levels[-1]:
                for w in adj[u]:
                    if depth[w] < 0:
                        depth[w] = depth[u] + 1
                        parent[w] = u
                        nxt.append(w)
            if not nxt:
                break
            levels.append(nxt)
        if min(depth) < 0 or len(t.edges) != size - 1:
            raise ValueError(f"edge set is not a spanning tree of LTQ_{t.n}")
        self.size = size
        self.parent = np.asarray(parent, dtype=np.int64)
        self.depth = np.asarray(depth, dtype=np.int32)
        self.levels = [np.asarray(lv, dtype=np.int64) for lv in levels]

    def distances_from(self, sources: np.ndarray) -> np.ndarray:
        """Rows of the tree distance matrix for ``sources``."""
        c = len(sources)
        cols = np.arange(c)
        # vertex-major layout: level gathers touch contiguous rows
        # on_root_path[v, r]: v lies on the path from sources[r] up to the root
        on_root_path = np.zeros((self.size, c), dtype=bool)
        cur = sources.astype(np.int64).copy()
        live = cols
        while live.size:
            on_root_path[cur[live], live] = True
            cur[live] = self.parent[cur[live]]
            live = live[cur[live] >= 0]
        dist = np.empty((self.size, c), dtype=np.int32)
        dist[0] = self.depth[sources]
        for level in self.levels[1:]:
            step = np.where(on_root_path[level], np.int32(-1), np.int32(1))
            dist[level] = dist[self.parent[level]] + step
        return dist.T


def _adjacency(t: SpanningTree) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(1 << t.n)]
    for u, v in t.edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _bfs_far(adj: list[list[int]], src: int) -> tuple[int, int, int]:
    dist = {src: 0}
    queue = deque([src])
    far = src
    while queue:
        u = queue.popleft()
        if dist[u] > dist[far]:
            far = u
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return far, dist[far], len(dist)


def tree_diameter(t: SpanningTree) -> int:
    """Longest tree path in hops, by two sweeps."""
    adj = _adjacency(t)
    far, _, reached = _bfs_far(adj, 0)
    if reached != len(adj):
        raise ValueError(f"edge set does not connect all {len(adj)} vertices")
    _, diameter, _ = _bfs_far(adj, far)
    return diameter


def pair_count(n: int) -> int:
    return (1 << (2 * n - 1)) - (1 << (n - 1))


def pair_distances(t: SpanningTree) -> dict[Edge, int]:
    """Tree distance for every unordered vertex pair ``(u, v)``, ``u < v``."""
    rooted = _RootedTree(t)
    size = rooted.size
    out: dict[Edge, int] = {}
    for rows, block in _blocks(rooted, size):
        for r, u in enumerate(rows):
            row = block[r]
            for v in range(int(u) + 1, size):
                out[(int(u), v)] = int(row[v])
    return out


def _blocks(rooted: _RootedTree, size: int, chunk: int = 256) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    for start in range(0, size, chunk):
        sources = np.arange(start, min(start + chunk, size))
        yield sources, rooted.distances_from(sources)


@dataclass
class DistanceSummary:
    """Aggregates over all unordered vertex pairs, per tree and across trees."""

    n: int
    pair_count: int
    tree_sums: list[int]
    tree_max: list[int]
    tree_unit_pairs: list[int]
    max_over_trees_sum: int


def distance_summary(trees: Sequence[SpanningTree], chunk: int = 256) -> DistanceSummary:
    """Stream the distance matrices of ``trees`` block by block and aggregate them."""
    if not trees:
        raise ValueError("need at least one tree")
    n = trees[0].n
    if any(t.n != n for t in trees):
        raise ValueError("trees span different dimensions")
    rooted = [_RootedTree(t) for t in trees]
    size = 1 << n
    k = len(trees)
    sums = [0] * k
    maxima = [0] * k
    unit = [0] * k
    max_sum = 0
    for start in range(0, size, chunk):
        sources = np.arange(start, min(start + chunk, size))
        worst = None
        for j, rt in enumerate(rooted):
            block = rt.distances_from(sources)
            sums[j] += int(block.sum(dtype=np.int64))
            maxima[j] = max(maxima[j], int(block.max()))
            unit[j] += int(np.count_nonzero(block == 1))
            worst = block if worst is None else np.maximum(worst, block)
        max_sum += int(worst.sum(dtype=np.int64))
    # every unordered pair was counted once from each endpoint
    return DistanceSummary(
        n=n,
        pair_count=pair_count(n),
        tree_sums=[s // 2 for s in sums],
        tree_max=maxima,
        tree_unit_pairs=[u // 2 for u in unit],
        max_over_trees_sum=max_sum // 2,
    )


def round_robin_assign(x: int, k: int) -> list[int]:
    """Packets per channel when packet ``p`` (1-based) goes to channel ``(p - 1) mod k``."""
    if x < 1 or k < 1:
        raise ValueError(f"need x >= 1 and k >= 1, got x={x}, k={k}")
    return [-(-(x - j) // k) if x > j else 0 for j in range(k)]


def compute_latency(trees: Sequence[SpanningTree], cfg: BroadcastConfig = BroadcastConfig()) -> LatencyReport:
    if not trees:
        raise ValueError("need at least one tree")
    x = cfg.packet_count
    k = len(trees)
    summary = distance_summary(trees)
    s = summary.pair_count
    mt = [tree_diameter(t) for t in trees]
    loads = round_robin_assign(x, k)
    per_channel = math.ceil(x / k)

    abl_per_tree = [total / s for total in summary.tree_sums]
    abl_multi = summary.max_over_trees_sum / s
    abl_single = min(abl_per_tree)
    return LatencyReport(
        n=summary.n,
        k=k,
        x=x,
        mt=mt,
        loads=loads,
        mbl_multi=per_channel * max(mt),
        mbl_single=x * min(mt),
        abl_multi_literal=abl_multi,
        abl_single_literal=abl_single,
        abl_multi_scaled=per_channel * abl_multi,
        abl_single_scaled=x * abl_single,
        pair_count=s,
        mbl_condition=max(mt) <= k * min(mt) and x >= k,
    )
