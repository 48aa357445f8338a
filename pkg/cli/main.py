"""symbreak: distinguishing numbers, line graphs, graphoidal covers and
theorem scans from the command line.

Usage:
    symbreak dist --vertex "C~"
    symbreak omega Bw triangle.cover
    symbreak construct spider --x 4 --p 2 --t1 1 --t2 2
    symbreak verify thm-2-3 --max-n 5 --format text

Graphs are graph6 strings given as an argument or read from stdin.
Exit codes: 0 ok/pass, 1 domain error, 2 violations found, 3 capacity
exceeded, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any

from config.settings import apply_overrides, settings
from core import graphoidal, harness
from core.distinguishing import distinguishing_edge_labeling, distinguishing_vertex_labeling
from core.errors import CapacityError, SizeLimitError, SymbreakError
from core.linegraph import (
    is_claw_free,
    is_line_graph,
    line_graph,
    root_graph_oracle,
    satisfies_odd_triangle_condition,
)
from core.models import Graph, GraphoidalInstance
from core.report import render
from data import catalog
from data.cover_format import format_cover, read_cover_file, write_cover_file
from data.graph_io import HEADER, encode_graph6, parse_graph6, to_dot

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATIONS = 2
EXIT_CAPACITY = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with EXIT_USAGE on bad arguments."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _read_graph(text: str | None) -> Graph:
    """Parse graph6 from the argument, or from the first data line on stdin."""
    if text is None or text == "-":
        for line in sys.stdin:
            line = line.strip()
            if line.startswith(HEADER):
                line = line[len(HEADER):]
            if line:
                return parse_graph6(line)
        raise SymbreakError("No graph6 input on stdin")
    return parse_graph6(text.strip())


def _emit(payload: dict[str, Any] | list[Any], fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _instance_payload(inst: GraphoidalInstance) -> dict[str, Any]:
    return {
        "name": inst.name,
        "graph6": encode_graph6(inst.graph),
        "cover": [list(p.vertices) for p in inst.cover.paths],
        "parameters": inst.parameters,
        "notes": inst.notes,
    }


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_dist(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph6)
    if args.edge:
        labeling = distinguishing_edge_labeling(g)
        kind, value, labels = "index", labeling.d, list(labeling.labels)
        positions = [list(e) for e in g.edges]
    else:
        vlab = distinguishing_vertex_labeling(g)
        kind, value, labels = "number", vlab.r, list(vlab.labels)
        positions = list(range(g.order))
    payload: dict[str, Any] = {
        "graph6": encode_graph6(g),
        "kind": kind,
        "value": value,
        "labels": labels,
        "positions": positions,
    }
    text = f"{value}\n" + " ".join(str(x) for x in labels)
    _emit(payload, args.format, text.rstrip())
    return EXIT_OK


def cmd_line(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph6)
    result = line_graph(g)
    line6 = encode_graph6(result.line)
    payload = {
        "graph6": encode_graph6(g),
        "line_graph6": line6,
        "edge_index": [[u, v, i] for (u, v), i in sorted(result.edge_index.items())],
    }
    _emit(payload, args.format, line6)
    return EXIT_OK


def cmd_recognize(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph6)
    answer = is_line_graph(g)
    payload: dict[str, Any] = {
        "graph6": encode_graph6(g),
        "is_line_graph": answer,
        "claw_free": is_claw_free(g),
        "odd_triangle_condition": satisfies_odd_triangle_condition(g),
    }
    text = "line graph" if answer else "not a line graph"
    if args.root:
        try:
            root = root_graph_oracle(g)
        except SizeLimitError as e:
            logger.warning("Root search skipped: %s", e)
            root = None
        payload["root_graph6"] = encode_graph6(root) if root is not None else None
        if root is not None:
            text += f"\nroot {encode_graph6(root)}"
    _emit(payload, args.format, text)
    return EXIT_OK


def cmd_omega(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph6)
    psi = read_cover_file(args.cover)
    om = graphoidal.omega(g, psi)
    report = graphoidal.verify_graphoidal_bounds(g, psi)
    legend = {str(i): list(p.vertices) for i, p in enumerate(psi.paths)}
    payload = {
        "graph6": encode_graph6(om),
        "legend": legend,
        "host_graph6": encode_graph6(g),
        "cover_size": psi.size,
        "d_omega": report.number_omega,
        "d_index_omega": report.index_omega,
        "d_index_g": report.index_g,
        "bounds": report.model_dump(mode="json"),
    }
    text = "\n".join(
        [
            encode_graph6(om),
            *(f"{i}: {','.join(map(str, vs))}" for i, vs in legend.items()),
            f"|psi| = {psi.size}",
            f"D(Omega) = {report.number_omega}",
            f"D'(Omega) = {report.index_omega if report.index_omega is not None else 'undefined'}",
            f"D'(G) = {report.index_g if report.index_g is not None else 'undefined'}",
        ]
    )
    _emit(payload, args.format, text)
    return EXIT_OK


def cmd_covers(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph6)
    if args.spectrum:
        spectrum = graphoidal.omega_spectrum(g)
        payload: Any = [
            {"omega_graph6": encode_graph6(rep), "covers": count} for rep, count in spectrum
        ]
        text = "\n".join(f"{encode_graph6(rep)} {count}" for rep, count in spectrum)
        _emit(payload, args.format, text)
        return EXIT_OK

    covers = graphoidal.enumerate_covers(g)
    shown = covers if args.limit is None else covers[: args.limit]
    payload = {
        "graph6": encode_graph6(g),
        "total": len(covers),
        "covers": [[list(p.vertices) for p in psi.paths] for psi in shown],
    }
    blocks = [f"# cover {i}\n{format_cover(psi)}" for i, psi in enumerate(shown)]
    _emit(payload, args.format, f"# {len(covers)} covers\n" + "".join(blocks).rstrip("\n"))
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    if args.kind == "gap":
        instances = [graphoidal.construct_gap_instance(args.n)]
    elif args.kind == "spider":
        instances = [graphoidal.construct_spider_instance(args.x, args.p, args.t1, args.t2)]
    else:
        instances = [
            *graphoidal.construct_cycle_instances(),
            graphoidal.construct_open_sharpness_example(),
        ]
    if args.cover_out is not None:
        if len(instances) != 1:
            raise SymbreakError("--cover-out needs a single instance (gap or spider)")
        write_cover_file(instances[0].cover, args.cover_out)
    payload = [_instance_payload(inst) for inst in instances]
    text = "\n".join(
        f"{encode_graph6(inst.graph)}\n{format_cover(inst.cover)}" for inst in instances
    ).rstrip("\n")
    _emit(payload if len(payload) > 1 else payload[0], args.format, text)
    return EXIT_OK


def cmd_corpus(args: argparse.Namespace) -> int:
    if args.action == "list":
        entries = catalog.list_catalog()
        payload = [e.model_dump() for e in entries]
        width = max(len(e.name) for e in entries)
        text = "\n".join(f"{e.name:<{width}}  {e.order!s:>12}  {e.description}" for e in entries)
        _emit(payload, args.format, text)
        return EXIT_OK

    if args.name is None:
        raise SymbreakError("corpus show needs a graph name")
    g = catalog.get(args.name)
    if args.dot:
        print(to_dot(g, name=args.name.split("(")[0]), end="")
        return EXIT_OK
    payload = {
        "name": args.name,
        "graph6": encode_graph6(g),
        "order": g.order,
        "edges": [list(e) for e in g.edges],
    }
    _emit(payload, args.format, encode_graph6(g))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = harness.run_suite(args.theorem_id, max_n=args.max_n, jobs=args.jobs)
    rendered = render(report, args.format, include_timing=args.timing)
    if args.output is not None:
        Path(args.output).write_text(rendered)
        logger.info("Wrote %s report to %s", args.theorem_id, args.output)
    else:
        print(rendered, end="" if rendered.endswith("\n") else "\n")
    return EXIT_OK if report.verdict == "pass" else EXIT_VIOLATIONS


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_format(p: argparse.ArgumentParser, choices: tuple[str, ...] = ("text", "json")) -> None:
    p.add_argument(
        "--format",
        choices=choices,
        default=choices[0],
        help=f"Output format (default: {choices[0]}).",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symbreak", description="Graph symmetry-breaking computations.")
    parser.add_argument("--verbose", action="store_true", help="Log progress at INFO level.")
    parser.add_argument("--debug", action="store_true", help="Log search details at DEBUG level.")
    parser.add_argument("--automorphism-cap", type=int, help="Largest group materialised.")
    parser.add_argument("--cover-edge-cap", type=int, help="Largest host edge count for covers.")
    parser.add_argument("--cover-count-cap", type=int, help="Most covers per host.")
    parser.add_argument(
        "--scheme-repair-cap", type=int, help="Attempts when repairing a tuple labeling."
    )
    parser.add_argument(
        "--family-convention",
        choices=("raw", "label", "automorphism"),
        help="How unique v-distinguishing labelings are counted for tree family membership.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="Distinguishing number or index.")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--vertex", action="store_true", help="D(G): vertex labelings.")
    kind.add_argument("--edge", action="store_true", help="D'(G): edge labelings.")
    p.add_argument("graph6", nargs="?", help="Graph in graph6 (default: stdin).")
    _add_format(p, ("json", "text"))
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("line", help="Line graph as graph6.")
    p.add_argument("graph6", nargs="?")
    _add_format(p)
    p.set_defaults(func=cmd_line)

    p = sub.add_parser("recognize", help="Line-graph recognition.")
    p.add_argument("graph6", nargs="?")
    p.add_argument("--root", action="store_true", help="Search for a root graph (small orders).")
    _add_format(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("omega", help="Intersection graph of a graphoidal cover.")
    p.add_argument("graph6")
    p.add_argument("cover", type=Path, help="Cover file, one comma-separated path per line.")
    _add_format(p, ("json", "text"))
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("covers", help="Enumerate graphoidal covers.")
    p.add_argument("graph6", nargs="?")
    p.add_argument("--limit", type=int, help="Print at most this many covers.")
    p.add_argument("--spectrum", action="store_true", help="Distinct Omega graphs with counts.")
    _add_format(p)
    p.set_defaults(func=cmd_covers)

    p = sub.add_parser("construct", help="Parametric graphoidal constructions.")
    p.add_argument("kind", choices=("gap", "spider", "sharpness"))
    p.add_argument("--n", type=int, default=3, help="Gap instance size (Omega = K_{1,n}).")
    p.add_argument("--x", type=int, default=2, help="Spider legs.")
    p.add_argument("--p", type=int, default=1, help="Vertices per spider leg.")
    p.add_argument("--t1", type=int, default=1)
    p.add_argument("--t2", type=int, default=2)
    p.add_argument("--cover-out", type=Path, help="Also write the cover to this file.")
    _add_format(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("corpus", help="Named graphs and families.")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?", help="e.g. petersen, cycle(5), spider(1,2,3)")
    p.add_argument("--dot", action="store_true", help="Print Graphviz DOT instead of graph6.")
    _add_format(p)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("verify", help="Run a theorem scan.")
    p.add_argument("theorem_id", choices=sorted(harness.SUITES))
    p.add_argument("--max-n", type=int, help="Largest order scanned (suite default otherwise).")
    p.add_argument("--jobs", type=int, help="Worker processes (default 1).")
    p.add_argument("--timing", action="store_true", help="Include elapsed time in the output.")
    p.add_argument("--output", type=Path, help="Write the report here instead of stdout.")
    _add_format(p, ("json", "text", "csv"))
    p.set_defaults(func=cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse argv, run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    level = "DEBUG" if args.debug else "INFO" if args.verbose else settings.log_level
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s [%(name)s] %(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    apply_overrides(
        automorphism_cap=args.automorphism_cap,
        cover_edge_cap=args.cover_edge_cap,
        cover_count_cap=args.cover_count_cap,
        scheme_repair_cap=args.scheme_repair_cap,
        family_t_convention=args.family_convention,
    )

    try:
        return args.func(args)
    except CapacityError as e:
        print(f"capacity exceeded: {e} (partial count {e.partial_count})", file=sys.stderr)
        return EXIT_CAPACITY
    except SymbreakError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
