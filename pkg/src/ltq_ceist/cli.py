"""Command line entry point: ``ltq-ceist {build,construct,verify,simulate,export}``.

Exit status: 0 on success, 1 when verification fails, 2 on bad arguments,
3 when an input or output file cannot be read, parsed or written.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, Union

from . import formats
from .ceist import CeistSet, construct
from .simulate import (
    DEFAULT_MESSAGE_BYTES,
    DEFAULT_PACKET_BYTES,
    DEFAULT_PACKET_COUNT,
    BroadcastConfig,
    compute_latency,
)
from .topology import LtqTopology, build_ltq_direct
from .verify import verify_ceists

log = logging.getLogger("ltq_ceist")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class _IOFailure(Exception):
    pass


def _dimension(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 2:
        raise argparse.ArgumentTypeError(f"n must be >= 2, got {n}")
    return n


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ltq-ceist", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write the edge set of LTQ_n")
    p.add_argument("--n", type=_dimension, required=True)
    p.add_argument("--format", choices=["json", "dot", "edgelist"], default="json")
    p.add_argument("--out", type=Path)
    p.add_argument("--binary-labels", action="store_true", help="label DOT vertices with bit strings")

    p = sub.add_parser("construct", help="build floor(n/2) edge-disjoint spanning trees of LTQ_n")
    p.add_argument("--n", type=_dimension, required=True)
    p.add_argument("--format", choices=["json", "dot", "edgelist"], default="json")
    p.add_argument("--out", type=Path, help="output file; DOT writes one <stem>-T<i> file per tree")
    p.add_argument("--binary-labels", action="store_true")

    p = sub.add_parser("verify", help="check a tree-set file (exit 1 on any failed check)")
    p.add_argument("--in", dest="input", type=Path, required=True)
    p.add_argument("--out", type=Path, help="write the JSON report here instead of stdout")

    p = sub.add_parser("simulate", help="multi-tree vs single-tree broadcast latency")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=_dimension, nargs="+", help="one or more dimensions")
    src.add_argument("--in", dest="input", type=Path, help="simulate over an imported tree set")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", type=Path)
    p.add_argument("--message-bytes", type=_positive)
    p.add_argument("--packet-bytes", type=_positive)
    p.add_argument("--packets", type=_positive, help=f"packet count (default {DEFAULT_PACKET_COUNT})")

    p = sub.add_parser("export", help="convert a topology or tree-set file to another format")
    p.add_argument("--in", dest="input", type=Path, required=True)
    p.add_argument("--format", choices=["json", "dot", "edgelist"], required=True)
    p.add_argument("--out", type=Path)
    p.add_argument("--binary-labels", action="store_true")
    return parser


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        out.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(f"cannot write {out}: {exc}") from exc


def _load(path: Path) -> Union[LtqTopology, CeistSet]:
    try:
        return formats.load(path)
    except (OSError, ValueError) as exc:
        raise _IOFailure(f"cannot read {path}: {exc}") from exc


def _write_topology(topo: LtqTopology, fmt: str, out: Optional[Path], binary: bool) -> None:
    if fmt == "json":
        _emit(formats.dumps_json(formats.topology_to_json(topo)), out)
    elif fmt == "edgelist":
        _emit(formats.topology_to_edgelist(topo), out)
    else:
        _emit(formats.topology_to_dot(topo, binary), out)


def _write_ceists(cs: CeistSet, fmt: str, out: Optional[Path], binary: bool) -> None:
    if fmt == "json":
        _emit(formats.dumps_json(formats.ceists_to_json(cs)), out)
    elif fmt == "edgelist":
        _emit(formats.ceists_to_edgelist(cs), out)
    elif out is None:
        _emit("".join(formats.tree_to_dot(t, i, binary) for i, t in enumerate(cs.trees, 1)), None)
    else:
        for i, (t, path) in enumerate(zip(cs.trees, formats.tree_dot_paths(out, len(cs.trees))), 1):
            _emit(formats.tree_to_dot(t, i, binary), path)


def _config(args: argparse.Namespace) -> BroadcastConfig:
    if args.packets is not None:
        override: Optional[int] = args.packets
    elif args.message_bytes is not None or args.packet_bytes is not None:
        override = None
    else:
        override = DEFAULT_PACKET_COUNT
    return BroadcastConfig(
        message_bytes=args.message_bytes or DEFAULT_MESSAGE_BYTES,
        packet_payload_bytes=args.packet_bytes or DEFAULT_PACKET_BYTES,
        packet_count_override=override,
    )


def _run(args: argparse.Namespace) -> int:
    if args.command == "build":
        _write_topology(build_ltq_direct(args.n), args.format, args.out, args.binary_labels)
        return EXIT_OK

    if args.command == "construct":
        _write_ceists(construct(args.n), args.format, args.out, args.binary_labels)
        return EXIT_OK

    if args.command == "verify":
        cs = _load(args.input)
        if not isinstance(cs, CeistSet):
            raise _IOFailure(f"{args.input} holds a topology, not a tree set")
        report = verify_ceists(cs)
        _emit(json.dumps(report.to_dict(), indent=2) + "\n", args.out)
        if not report.all_ok:
            log.error("verification failed for LTQ_%d", cs.n)
        return EXIT_OK if report.all_ok else EXIT_FAIL

    if args.command == "simulate":
        cfg = _config(args)
        if args.input is not None:
            cs = _load(args.input)
            if not isinstance(cs, CeistSet):
                raise _IOFailure(f"{args.input} holds a topology, not a tree set")
            sets = [cs]
        else:
            sets = [construct(n) for n in args.n]
        reports = []
        for cs in sets:
            log.info("simulating LTQ_%d over %d trees", cs.n, len(cs.trees))
            reports.append(compute_latency(cs.trees, cfg))
        if args.format == "csv":
            _emit(formats.latency_csv(reports), args.out)
        else:
            _emit(json.dumps([r.to_dict() for r in reports], indent=2) + "\n", args.out)
        return EXIT_OK

    if args.command == "export":
        obj = _load(args.input)
        if isinstance(obj, CeistSet):
            _write_ceists(obj, args.format, args.out, args.binary_labels)
        else:
            _write_topology(obj, args.format, args.out, args.binary_labels)
        return EXIT_OK

    raise AssertionError(args.command)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return _run(args)
    except _IOFailure as exc:
        log.error("%s", exc)
        return EXIT_IO
    except ValueError as exc:
        # e.g. a simulation over an imported set that is not made of spanning trees
        log.error("%s", exc)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
