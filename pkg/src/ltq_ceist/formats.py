"""Readers and writers for topologies, tree sets and latency tables.

Formats: JSON (lossless), a plain edge list (lossless), DOT (write only,
one graph per tree) and CSV for latency reports.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from .ceist import CeistSet, SpanningTree
from .simulate import LatencyReport
from .topology import Edge, LtqTopology, edge, to_binary


class FormatError(ValueError):
    pass


def _edge_from(pair) -> Edge:
    try:
        u, v = (int(x) for x in pair)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad edge {pair!r}") from exc
    try:
        return edge(u, v)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


# JSON


def topology_to_json(topo: LtqTopology) -> dict:
    return {"n": topo.n, "edges": [list(e) for e in topo.sorted_edges()]}


def topology_from_json(data: dict) -> LtqTopology:
    try:
        return LtqTopology(int(data["n"]), frozenset(_edge_from(e) for e in data["edges"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"not a topology document: {exc}") from exc


def ceists_to_json(cs: CeistSet) -> dict:
    return {
        "n": cs.n,
        "trees": [[list(e) for e in t.sorted_edges()] for t in cs.trees],
        "path": list(cs.path) if cs.path is not None else None,
    }


def ceists_from_json(data: dict) -> CeistSet:
    try:
        n = int(data["n"])
        trees = tuple(SpanningTree(n, frozenset(_edge_from(e) for e in t)) for t in data["trees"])
        path = data.get("path")
    except (KeyError, TypeError) as exc:
        raise FormatError(f"not a tree-set document: {exc}") from exc
    return CeistSet(n, trees, tuple(int(v) for v in path) if path is not None else None)


# edge list
#
#   # ltq n=<n> kind=topology|ceists
#   # path v1 v2 ...          (ceists, even n only)
#   lo hi                     (topology)
#   <tree index> lo hi        (ceists, 1-based index)


def topology_to_edgelist(topo: LtqTopology) -> str:
    lines = [f"# ltq n={topo.n} kind=topology"]
    lines += [f"{u} {v}" for u, v in topo.sorted_edges()]
    return "\n".join(lines) + "\n"


def ceists_to_edgelist(cs: CeistSet) -> str:
    lines = [f"# ltq n={cs.n} kind=ceists trees={len(cs.trees)}"]
    if cs.path is not None:
        lines.append("# path " + " ".join(str(v) for v in cs.path))
    for i, t in enumerate(cs.trees, 1):
        lines += [f"{i} {u} {v}" for u, v in t.sorted_edges()]
    return "\n".join(lines) + "\n"


def _parse_header(line: str) -> dict[str, str]:
    if not line.startswith("# ltq"):
        raise FormatError("missing '# ltq' header line")
    fields = {}
    for token in line[len("# ltq"):].split():
        key, _, value = token.partition("=")
        fields[key] = value
    return fields


def from_edgelist(text: str) -> Union[LtqTopology, CeistSet]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty edge list")
    header = _parse_header(lines[0])
    try:
        n = int(header["n"])
        kind = header["kind"]
    except (KeyError, ValueError) as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc

    path: Optional[tuple[int, ...]] = None
    rows: list[list[str]] = []
    for ln in lines[1:]:
        if ln.startswith("# path"):
            path = tuple(int(v) for v in ln.split()[2:])
        elif not ln.startswith("#"):
            rows.append(ln.split())

    if kind == "topology":
        if any(len(r) != 2 for r in rows):
            raise FormatError("topology rows must be 'lo hi'")
        return LtqTopology(n, frozenset(_edge_from(r) for r in rows))
    if kind != "ceists":
        raise FormatError(f"unknown kind {kind!r}")

    count = int(header.get("trees", 0))
    buckets: dict[int, set[Edge]] = {}
    for r in rows:
        if len(r) != 3:
            raise FormatError("tree rows must be 'index lo hi'")
        buckets.setdefault(int(r[0]), set()).add(_edge_from(r[1:]))
    count = max([count, *buckets])
    trees = tuple(SpanningTree(n, frozenset(buckets.get(i, ()))) for i in range(1, count + 1))
    return CeistSet(n, trees, path)


# DOT


def _dot(name: str, edges: Iterable[Edge], n: int, binary: bool) -> str:
    edges = sorted(edges)
    lines = [f"graph {name} {{"]
    if binary:
        for v in sorted({x for e in edges for x in e}):
            lines.append(f'  {v} [label="{to_binary(v, n)}"];')
    lines += [f"  {u} -- {v};" for u, v in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def topology_to_dot(topo: LtqTopology, binary: bool = False) -> str:
    return _dot(f"LTQ_{topo.n}", topo.edges, topo.n, binary)


def tree_to_dot(t: SpanningTree, index: int, binary: bool = False) -> str:
    return _dot(f"LTQ_{t.n}_T{index}", t.edges, t.n, binary)


def tree_dot_paths(out: Path, count: int) -> list[Path]:
    """``graph.dot`` -> ``graph-T1.dot``, ``graph-T2.dot``, ..."""
    suffix = out.suffix or ".dot"
    return [out.with_name(f"{out.stem}-T{i}{suffix}") for i in range(1, count + 1)]


# latency tables


def latency_csv(reports: Sequence[LatencyReport]) -> str:
    width = max((r.k for r in reports), default=0)
    header = ["n", "k", "x"] + [f"mt_{i}" for i in range(1, width + 1)]
    header += [
        "mbl_multi",
        "mbl_single",
        "abl_multi_literal",
        "abl_single_literal",
        "abl_multi_scaled",
        "abl_single_scaled",
    ]
    header += [f"load_{i}" for i in range(1, width + 1)]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for r in reports:
        pad = [""] * (width - r.k)
        writer.writerow(
            [r.n, r.k, r.x, *r.mt, *pad,
             r.mbl_multi, r.mbl_single,
             repr(r.abl_multi_literal), repr(r.abl_single_literal),
             repr(r.abl_multi_scaled), repr(r.abl_single_scaled),
             *r.loads, *pad]
        )
    return buf.getvalue()


def read_latency_csv(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


# files


def load(path: Union[str, Path]) -> Union[LtqTopology, CeistSet]:
    """Read a topology or tree set, choosing the parser from the content."""
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from exc
        if "trees" in data:
            return ceists_from_json(data)
        return topology_from_json(data)
    return from_edgelist(text)


def dumps_json(data: dict) -> str:
    return json.dumps(data, indent=None, separators=(",", ":")) + "\n"
