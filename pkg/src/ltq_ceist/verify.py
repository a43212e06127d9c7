"""Independent checks on a set of spanning trees of LTQ_n."""

from __future__ import annotations

from collections import deque
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from .ceist import CeistSet, SpanningTree
from .topology import Edge, LtqTopology, build_ltq_direct, edge, is_adjacent


class StructureError(ValueError):
    """An edge set does not fit the topology it is checked against."""


@dataclass
class VerificationReport:
    n: int
    tree_count: int
    spanning_ok: list[bool]
    disjoint_ok: bool
    leftover_edges: list[Edge]
    leftover_is_path: Optional[bool]
    bound: int
    count_ok: bool
    foreign_edges: list[Edge] = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        ok = all(self.spanning_ok) and self.disjoint_ok and self.count_ok and not self.foreign_edges
        if self.leftover_is_path is not None:
            ok = ok and self.leftover_is_path
        return ok

    def to_dict(self) -> dict:
        d = asdict(self)
        d["leftover_edges"] = [list(e) for e in self.leftover_edges]
        d["foreign_edges"] = [list(e) for e in self.foreign_edges]
        d["all_ok"] = self.all_ok
        return d


def is_spanning_tree(t: SpanningTree, topo: LtqTopology) -> bool:
    """Edge count 2^n - 1, all edges in the topology, and connected from vertex 0."""
    if t.n != topo.n:
        raise ValueError(f"tree is over LTQ_{t.n}, topology is LTQ_{topo.n}")
    size = 1 << t.n
    if len(t.edges) != size - 1:
        return False
    if not t.edges <= topo.edges:
        return False
    adj: list[list[int]] = [[] for _ in range(size)]
    for u, v in t.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * size
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                reached += 1
                queue.append(w)
    return reached == size


def pairwise_disjoint(trees: Sequence[SpanningTree]) -> bool:
    seen: set[Edge] = set()
    for t in trees:
        if seen & t.edges:
            return False
        seen |= t.edges
    return True


def leftover_edges(cs: CeistSet, topo: LtqTopology) -> set[Edge]:
    """Topology edges used by no tree."""
    if cs.n != topo.n:
        raise ValueError(f"tree set is over LTQ_{cs.n}, topology is LTQ_{topo.n}")
    used: set[Edge] = set()
    for t in cs.trees:
        used |= t.edges
    foreign = used - topo.edges
    if foreign:
        raise StructureError(f"{len(foreign)} tree edges are not in LTQ_{topo.n}, e.g. {min(foreign)}")
    return set(topo.edges - used)


def max_tree_bound(n: int) -> int:
    """Edge-counting ceiling on the number of edge-disjoint spanning trees of LTQ_n."""
    if n < 2:
        raise ValueError(f"LTQ_n requires n >= 2, got n={n}")
    return (n << (n - 1)) // ((1 << n) - 1)


def _as_path(edges: set[Edge]) -> Optional[list[int]]:
    """Vertex sequence of a simple path with exactly these edges, or None."""
    if not edges:
        return None
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    ends = sorted(v for v, nb in adj.items() if len(nb) == 1)
    if len(ends) != 2 or any(len(nb) > 2 for nb in adj.values()):
        return None
    walk = [ends[0]]
    prev = None
    while len(walk) <= len(edges):
        nxt = [w for w in adj[walk[-1]] if w != prev]
        if not nxt:
            break
        prev = walk[-1]
        walk.append(nxt[0])
    if len(walk) != len(edges) + 1 or len(set(walk)) != len(walk):
        return None
    return walk


def check_leftover_path(cs: CeistSet, leftover: set[Edge]) -> bool:
    """Even n: the leftover edges form one path of n/2 edges over even vertices, matching ``cs.path``."""
    n = cs.n
    if len(leftover) != n // 2:
        return False
    walk = _as_path(leftover)
    if walk is None or any(v % 2 for v in walk):
        return False
    if 0 not in (walk[0], walk[-1]):
        return False
    if cs.path is None:
        return True
    path = list(cs.path)
    if path and path[0] != 0 and path[-1] == 0:
        path.reverse()
    if len(path) != n // 2 + 1 or path[0] != 0 or len(set(path)) != len(path):
        return False
    if not all(is_adjacent(a, b, n) for a, b in zip(path, path[1:])):
        return False
    return {edge(a, b) for a, b in zip(path, path[1:])} == leftover


def verify_ceists(cs: CeistSet, topo: Optional[LtqTopology] = None) -> VerificationReport:
    if topo is None:
        topo = build_ltq_direct(cs.n)
    used: set[Edge] = set()
    for t in cs.trees:
        used |= t.edges
    foreign = sorted(used - topo.edges)
    spanning = [t.n == cs.n and is_spanning_tree(t, topo) for t in cs.trees]
    leftover = set(topo.edges - used)
    if cs.n % 2:
        path_ok = None
    else:
        path_ok = not foreign and check_leftover_path(cs, leftover)
    bound = max_tree_bound(cs.n)
    return VerificationReport(
        n=cs.n,
        tree_count=len(cs.trees),
        spanning_ok=spanning,
        disjoint_ok=pairwise_disjoint(cs.trees),
        leftover_edges=sorted(leftover),
        leftover_is_path=path_ok,
        bound=bound,
        count_ok=len(cs.trees) == bound,
        foreign_edges=foreign,
    )
