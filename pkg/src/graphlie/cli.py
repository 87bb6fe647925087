"""Command-line interface: ``graphlie {build,invariants,iso,enumerate,verify}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from graphlie.algebra import GraphLieAlgebra, build_algebra
from graphlie.enumerate import DimensionCatalog, classify_dimension
from graphlie.errors import GraphLieError
from graphlie.graphs import Graph, parse_edge_list, parse_graph6, to_graph6
from graphlie.invariants import invariant_vector
from graphlie.morphisms import IsoCertificate, algebras_isomorphic
from graphlie.verify import verification_report

EXIT_OK = 0
EXIT_NOT_ISOMORPHIC = 1
EXIT_USAGE = 2
EXIT_VERIFY_FAILED = 3


class UsageError(Exception):
    pass


def _dump(data: object) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _load_graphs(args: argparse.Namespace, expected: int) -> list[Graph]:
    graphs = []
    for text in args.graphs:
        try:
            graphs.append(parse_graph6(text))
        except GraphLieError as exc:
            raise UsageError(f"bad graph6 {text!r}: {exc}") from exc
    for name in args.edges or []:
        path = Path(name)
        if not path.is_file():
            raise UsageError(f"no such file: {name}")
        try:
            graphs.append(parse_edge_list(path.read_text(encoding="utf-8")))
        except GraphLieError as exc:
            raise UsageError(f"{name}: {exc}") from exc
    if len(graphs) != expected:
        raise UsageError(f"{args.command} needs exactly {expected} graph(s), got {len(graphs)}")
    return graphs


def _format_build(a: GraphLieAlgebra, fmt: str) -> str:
    if fmt == "json":
        return _dump(a.to_dict())
    lines = [f"graph {to_graph6(a.source_graph)}  dim {a.dim}", "basis " + " ".join(str(b) for b in a.basis)]
    for k, x in enumerate(a.basis):
        for y in a.basis[k + 1 :]:
            for c, coeff in a.bracket_basis(x, y):
                prefix = "" if coeff == 1 else "-" if coeff == -1 else f"{coeff}*"
                lines.append(f"[{x}, {y}] = {prefix}{c}")
    return "\n".join(lines) + "\n"


def _format_invariants(a: GraphLieAlgebra, fmt: str) -> str:
    iv = invariant_vector(a).to_dict()
    if fmt == "json":
        return _dump(iv)
    return "".join(f"{key}: {iv[key]}\n" for key in sorted(iv))


def _format_certificate(cert: IsoCertificate, fmt: str) -> str:
    data = cert.to_dict()
    if fmt == "json":
        return _dump(data)
    lines = [f"verdict: {cert.verdict}"]
    if cert.sigma is not None and cert.tau is not None:
        lines.append("sigma: " + " ".join(str(x) for x in cert.sigma.vertex_map))
        lines.append("tau:")
        lines.extend("  " + " ".join(f"{str(x):>3}" for x in row) for row in cert.tau.matrix)
    if cert.separator is not None:
        s = cert.separator
        lines.append(f"separator: {s.invariant}  {s.left} vs {s.right}")
    return "\n".join(lines) + "\n"


def _format_catalog(cat: DimensionCatalog, fmt: str) -> str:
    if fmt == "json":
        return _dump(cat.to_dict())
    if fmt == "graph6":
        return "".join(to_graph6(g) + "\n" for g in cat.graphs())
    header = f"{'#':>3}  {'graph6':<10} {'V':>3} {'E':>3} {'center':>6}  ad-ranks"
    rows = [header]
    for k, e in enumerate(cat.entries, 1):
        iv = e.invariants
        ranks = ",".join(str(r) for r in iv.ad_rank_multiset)
        rows.append(
            f"{k:>3}  {to_graph6(e.graph):<10} {e.graph.n_vertices:>3} {e.graph.n_edges:>3} {iv.dim_center:>6}  {ranks}"
        )
    rows.append(f"dimension {cat.dimension}: {len(cat)} classes")
    return "\n".join(rows) + "\n"


def _format_report(a: GraphLieAlgebra, report: dict[str, bool], fmt: str) -> str:
    if fmt == "json":
        return _dump({"graph": to_graph6(a.source_graph), "checks": report, "ok": all(report.values())})
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in report.items()]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphlie", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_inputs(p: argparse.ArgumentParser) -> None:
        p.add_argument("graphs", nargs="*", metavar="GRAPH6", help="graph in graph6 format")
        p.add_argument("--edges", action="append", metavar="FILE", help="edge-list file (first line n, then 'i j')")
        p.add_argument("--format", choices=["table", "json"], default="table")

    graph_inputs(sub.add_parser("build", help="print the bracket table of a graph's algebra"))
    graph_inputs(sub.add_parser("invariants", help="print the invariant vector"))
    graph_inputs(sub.add_parser("iso", help="decide isomorphism of two graph algebras (exit 1 if not)"))
    graph_inputs(sub.add_parser("verify", help="run the structural checks (exit 3 on failure)"))

    p = sub.add_parser("enumerate", help="list isomorphism classes in one dimension")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--no-abelian", action="store_true", help="leave out the abelian (edgeless) algebra")
    p.add_argument("--format", choices=["table", "json", "graph6"], default="table")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-vertices", type=int, default=None)
    return parser


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Execute one command; returns (exit status, stdout text)."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        if args.command == "enumerate":
            cat = classify_dimension(
                args.dim, not args.no_abelian, max_vertices=args.max_vertices, jobs=args.jobs
            )
            return EXIT_OK, _format_catalog(cat, args.format)
        if args.command == "iso":
            g1, g2 = _load_graphs(args, 2)
            cert = algebras_isomorphic(build_algebra(g1), build_algebra(g2))
            return (EXIT_OK if cert.isomorphic else EXIT_NOT_ISOMORPHIC), _format_certificate(cert, args.format)
        (g,) = _load_graphs(args, 1)
        a = build_algebra(g)
        if args.command == "build":
            return EXIT_OK, _format_build(a, args.format)
        if args.command == "invariants":
            return EXIT_OK, _format_invariants(a, args.format)
        report = verification_report(a)
        return (EXIT_OK if all(report.values()) else EXIT_VERIFY_FAILED), _format_report(a, report, args.format)
    except (UsageError, GraphLieError) as exc:
        print(f"graphlie: error: {exc}", file=sys.stderr)
        return EXIT_USAGE, ""


def main(argv: Sequence[str] | None = None) -> int:
    status, out = run(argv)
    sys.stdout.write(out)
    sys.stdout.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
