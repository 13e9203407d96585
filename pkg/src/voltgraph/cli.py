"""Command-line entry point.

Exit codes: 0 success or a true verdict, 1 a false verdict or failed law,
2 usage, parse, file or size-cap errors (reported on standard error).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import constructions as cons
from . import graph as gr
from .constructions import ConstructionError, LabeledGraph, VoltageGraph
from .graph import GraphError, SizeCapError
from .groups import CapExceeded, GroupError
from .io import ParseError, export_dot, read_document, serialize
from .laws import DEFAULT_PALETTE, LawConfig, replay, run_all
from .mutations import MUTATIONS

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    """Reported on stderr with exit code 2."""


def _load(path: str) -> VoltageGraph | LabeledGraph:
    try:
        return read_document(path)
    except FileNotFoundError:
        raise CliError(f"{path}: no such file")
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}")
    except UnicodeDecodeError:
        raise CliError(f"{path}: not UTF-8 text")
    except ParseError as exc:
        raise CliError(f"{path}: {exc}")


def _load_voltage(path: str) -> VoltageGraph:
    obj = _load(path)
    if not isinstance(obj, VoltageGraph):
        raise CliError(f"{path}: expected a voltage-graph document, found labels")
    return obj


def _load_labeled(path: str) -> LabeledGraph:
    obj = _load(path)
    if not isinstance(obj, LabeledGraph):
        raise CliError(f"{path}: expected a labelled-graph document")
    return obj


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _stats_lines(g: gr.Graph) -> list[str]:
    s = gr.graph_stats(g)
    deg = s.regular_degree
    diameter = "inf" if s.diameter == float("inf") else str(int(s.diameter))
    return [
        f"vertices: {s.vertices}",
        f"darts: {s.darts}",
        f"edges: {s.edges} (semiedges {s.semiedges}, loops {s.loops}, links {s.links})",
        f"degree sequence: {' '.join(map(str, s.degree_sequence))}",
        f"regular: {deg if deg is not None else 'no'}",
        f"components: {s.components}",
        f"diameter: {diameter}",
    ]


# --------------------------------------------------------------------------
# commands


def cmd_derive(args) -> int:
    _emit(serialize(cons.derived(_load_voltage(args.input))), args.output)
    return EXIT_OK


def cmd_lift_via_pullback(args) -> int:
    vg = _load_voltage(args.input)
    j = cons.iso_j(vg)
    problem = cons.validate_volt_morphism(j)
    if problem is None and not gr.is_isomorphism(j.f):
        problem = "j is not bijective"
    _emit(serialize(j.domain), args.output)
    if problem:
        print(f"law violation: {problem}", file=sys.stderr)
        return EXIT_FALSE
    return EXIT_OK


def cmd_label_to_voltage(args) -> int:
    _emit(serialize(cons.functor_L(_load_labeled(args.input))), args.output)
    return EXIT_OK


def cmd_iso(args) -> int:
    a, b = _load(args.a).graph, _load(args.b).graph
    f = gr.find_isomorphism(a, b)
    if f is None:
        print("not isomorphic")
        return EXIT_FALSE
    print("isomorphic")
    for v in a.vertices():
        print(f"{a.vertex_name(v)} -> {b.vertex_name(f.vmap[v])}")
    return EXIT_OK


def cmd_product(args) -> int:
    a, b = _load_voltage(args.a), _load_voltage(args.b)
    _emit(serialize(cons.volt_product(a, b)), args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    obj = _load(args.input)
    kind = "voltage graph" if isinstance(obj, VoltageGraph) else "labelled graph"
    print(f"valid {kind} over {obj.group.name}")
    print(*_stats_lines(obj.graph), sep="\n")
    vg = obj if isinstance(obj, VoltageGraph) else cons.functor_L(obj)
    covering = gr.is_covering(cons.derived_projection(vg))
    print(f"derived projection is a covering: {'yes' if covering else 'no'}")
    return EXIT_OK if covering else EXIT_FALSE


def cmd_info(args) -> int:
    obj = _load(args.input)
    print(f"group: {obj.group.name} (order {obj.group.order})")
    print(*_stats_lines(obj.graph), sep="\n")
    return EXIT_OK


def cmd_export_dot(args) -> int:
    _emit(export_dot(_load(args.input), name=args.name), args.output)
    return EXIT_OK


def cmd_laws(args) -> int:
    if args.replay:
        try:
            with open(args.replay, encoding="utf-8") as fh:
                record = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise CliError(f"{args.replay}: {exc}")
        cx = record.get("counterexample", record) if isinstance(record, dict) else None
        if not isinstance(cx, dict) or "law" not in cx:
            raise CliError(f"{args.replay}: no counterexample found")
        message = replay(cx)
        if message is None:
            print(f"{cx['law']}: counterexample no longer fails")
            return EXIT_OK
        print(f"{cx['law']}: reproduced: {message}")
        return EXIT_FALSE

    groups = tuple(g.strip() for g in args.groups.split(",") if g.strip())
    if not groups:
        raise CliError("--groups is empty")
    config = LawConfig(
        seed=args.seed,
        iterations=args.iterations,
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
        groups=groups,
        mutation=args.mutation,
        sweep=args.sweep,
    )
    try:
        reports = run_all(config)
    except (GroupError, ValueError) as exc:
        raise CliError(str(exc))
    timing = not args.no_timing
    if args.json:
        text = "".join(r.to_json(timing) + "\n" for r in reports)
    else:
        if not timing:
            for r in reports:
                r.millis = 0
        text = "".join(r.to_text() + "\n" for r in reports)
        failed = sum(not r.passed for r in reports)
        text += f"{len(reports) - failed}/{len(reports)} laws passed (seed {args.seed})\n"
    _emit(text, args.output)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FALSE


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="voltgraph", description="Voltage graphs, labelled graphs and their lifts.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def with_output(sp):
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        return sp

    sp = with_output(sub.add_parser("derive", help="emit the derived (lifted) voltage graph"))
    sp.add_argument("input")
    sp.set_defaults(func=cmd_derive)

    sp = with_output(sub.add_parser("lift-via-pullback", help="emit LR(G) and validate j: LR(G) -> G^alpha"))
    sp.add_argument("input")
    sp.set_defaults(func=cmd_lift_via_pullback)

    sp = with_output(sub.add_parser("label-to-voltage", help="apply L to a labelled graph"))
    sp.add_argument("input")
    sp.set_defaults(func=cmd_label_to_voltage)

    sp = sub.add_parser("iso", help="test two documents' graphs for isomorphism")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(func=cmd_iso)

    sp = with_output(sub.add_parser("product", help="product of two voltage graphs"))
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("check", help="validate a document and its covering projection")
    sp.add_argument("input")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("info", help="print graph statistics")
    sp.add_argument("input")
    sp.set_defaults(func=cmd_info)

    sp = with_output(sub.add_parser("export-dot", help="render as Graphviz DOT"))
    sp.add_argument("input")
    sp.add_argument("--name", default="G", help="DOT graph name")
    sp.set_defaults(func=cmd_export_dot)

    defaults = LawConfig()
    sp = with_output(sub.add_parser("laws", help="run the law suite"))
    sp.add_argument("--seed", type=int, default=defaults.seed)
    sp.add_argument("--iterations", type=int, default=defaults.iterations)
    sp.add_argument("--max-vertices", type=int, default=defaults.max_vertices)
    sp.add_argument("--max-edges", type=int, default=defaults.max_edges)
    sp.add_argument("--groups", default=",".join(DEFAULT_PALETTE), help="comma-separated, e.g. Z2,Z3,Z2xZ2")
    sp.add_argument("--json", action="store_true", help="one JSON record per law")
    sp.add_argument("--no-timing", action="store_true", help="report millis as 0")
    sp.add_argument("--sweep", action="store_true", help="add the exhaustive edge-kind sweep")
    sp.add_argument("--mutation", choices=MUTATIONS, help="inject a deliberate defect")
    sp.add_argument("--replay", metavar="FILE", help="re-run a counterexample from a JSON report record")
    sp.set_defaults(func=cmd_laws)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (SizeCapError, CapExceeded, ParseError, GraphError, GroupError, ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
