"""Command line interface: ``semistrong <subcommand> ...``.

Exit codes: 0 on success (a negative verification or an infeasible answer
is still a printed answer), 2 for usage errors, 3 when a search budget runs
out, 4 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import coloring as col
from .errors import BudgetExceeded, GraphError, InvalidParameters, MalformedGraph6, PartialColoring
from .families import FAMILY_NAMES, emit_graph6, generate
from .heuristics import semistrong_delta_squared, tree_semistrong
from .io import graph_to_dict, read_graphs, to_dot
from .kinds import parse_coloring_kind, parse_matching_kind
from .matchings import max_matching_size
from .solver import SearchBudget, chromatic_index
from .survey import SURVEY_BUDGET, build_report, run_survey

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_MALFORMED = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _budget(args, default: SearchBudget) -> SearchBudget:
    nodes = args.budget_nodes if args.budget_nodes is not None else default.max_nodes
    secs = args.budget_secs if args.budget_secs is not None else default.max_seconds
    return SearchBudget(max_nodes=nodes, max_seconds=secs, deterministic=getattr(args, "deterministic", True))


def _add_budget(p) -> None:
    p.add_argument("--budget-nodes", type=int, default=None, help="node limit per search")
    p.add_argument("--budget-secs", type=float, default=None, help="wall-time limit per search")


def _add_input(p) -> None:
    p.add_argument("--in", dest="informat", choices=("g6", "json"), default="g6",
                   help="stdin format: graph6 lines or one JSON {n, edges} document")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="semistrong", description="Semistrong edge-coloring workbench.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a named graph family member")
    p.add_argument("family", choices=FAMILY_NAMES)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=("graph6", "json", "dot"), default="graph6")

    p = sub.add_parser("nu", help="maximum matching size of a kind")
    p.add_argument("kind", help="plain | induced | semistrong | degenerate:R")
    _add_input(p)
    p.add_argument("--json", action="store_true", help="print size and witness as JSON")
    p.add_argument("--budget-nodes", type=int, default=10**7)

    p = sub.add_parser("chi", help="exact chromatic index of a kind")
    p.add_argument("kind", help="proper | strong | semistrong | relaxed:S,T | degenerate:R")
    _add_input(p)
    _add_budget(p)
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="print the witness coloring document")
    out.add_argument("--dot", action="store_true", help="print the witness as DOT")

    p = sub.add_parser("verify", help="check a coloring document")
    p.add_argument("kind")
    p.add_argument("--coloring", required=True, help="path to an ss-coloring/1 JSON file")

    p = sub.add_parser("heuristic", help="constructive semistrong coloring")
    p.add_argument("algorithm", choices=("delta2", "tree"))
    _add_input(p)
    p.add_argument("--trace", action="store_true", help="include the descent trace")
    p.add_argument("--dot", action="store_true", help="print DOT instead of JSON")

    p = sub.add_parser("survey", help="evaluate a graph6 corpus")
    p.add_argument("kind", nargs="?", default="semistrong")
    p.add_argument("--stdin-g6", action="store_true", required=True, help="read graph6 lines from stdin")
    p.add_argument("--report", default=None, help="write the ss-survey/1 JSON report here")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (ignored with --deterministic)")
    p.add_argument("--deterministic", action=argparse.BooleanOptionalAction, default=True)
    _add_budget(p)
    return parser


def _write(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_gen(args) -> int:
    g = generate(args.family, *args.params, seed=args.seed)
    if args.format == "graph6":
        _write(emit_graph6(g))
    elif args.format == "json":
        _write(json.dumps(graph_to_dict(g)))
    else:
        _write(to_dot(g))
    return EXIT_OK


def _cmd_nu(args) -> int:
    kind = parse_matching_kind(args.kind)
    for g in read_graphs(sys.stdin, args.informat):
        size, witness = max_matching_size(g, kind, max_nodes=args.budget_nodes)
        if args.json:
            _write(json.dumps({"kind": str(kind), "size": size, "witness": sorted(map(list, witness))}))
        else:
            _write(str(size))
    return EXIT_OK


def _cmd_chi(args) -> int:
    kind = parse_coloring_kind(args.kind)
    budget = _budget(args, SearchBudget())
    for g in read_graphs(sys.stdin, args.informat):
        res = chromatic_index(g, kind, budget)
        if args.json:
            doc = col.to_document(g, res.witness)
            doc.update(kind=str(kind), value=res.value, lower_bound=res.lower_bound_method, nodes=res.nodes)
            _write(json.dumps(doc))
        elif args.dot:
            _write(to_dot(g, res.witness))
        else:
            _write(str(res.value))
    return EXIT_OK


def _cmd_verify(args) -> int:
    kind = parse_coloring_kind(args.kind)
    try:
        with open(args.coloring) as fh:
            g, c = col.from_document(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise _Malformed(str(exc)) from exc
    verdict = col.verify(g, c, kind)
    if verdict:
        _write("true")
    else:
        _write(f"false: {verdict.reason} (color {verdict.color}, edges {list(map(list, verdict.edges))})")
    return EXIT_OK


def _cmd_heuristic(args) -> int:
    for g in read_graphs(sys.stdin, args.informat):
        trace = None
        if args.algorithm == "delta2":
            c, trace = semistrong_delta_squared(g)
        else:
            c = tree_semistrong(g)
        if args.dot:
            _write(to_dot(g, c))
            continue
        doc = col.to_document(g, c)
        doc["colors_used"] = c.num_colors
        if args.trace and trace is not None:
            doc["trace"] = {
                "initial_iota": trace.initial_iota,
                "steps": [[list(s.edge), s.old, s.new, s.iota_before, s.iota_after] for s in trace.steps],
            }
        _write(json.dumps(doc))
    return EXIT_OK


def _cmd_survey(args) -> int:
    kind = parse_coloring_kind(args.kind)
    budget = _budget(args, SURVEY_BUDGET)
    records = []
    for rec in run_survey(sys.stdin, kind, budget, jobs=args.jobs):
        records.append(rec)
        flags = ",".join(sorted(f for f, on in rec.flags.items() if on)) or "-"
        value = rec.value if rec.value is not None else "budget_exceeded"
        _write(f"{rec.graph6}\t{value}\t{flags}")
    report = build_report(records)
    s = report["summary"]
    sys.stderr.write(f"graphs={s['graphs']} solved={s['solved']} budget_exceeded={s['budget_exceeded']} "
                     f"max_per_delta={json.dumps(s['max_value_per_delta'])}\n")
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


class _Malformed(Exception):
    pass


_COMMANDS = {
    "gen": _cmd_gen,
    "nu": _cmd_nu,
    "chi": _cmd_chi,
    "verify": _cmd_verify,
    "heuristic": _cmd_heuristic,
    "survey": _cmd_survey,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InvalidParameters as exc:
        sys.stderr.write(f"semistrong: {exc}\n")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        sys.stderr.write(f"semistrong: budget exceeded after {exc.nodes} nodes: {exc}\n")
        return EXIT_BUDGET
    except (MalformedGraph6, GraphError, PartialColoring, _Malformed, json.JSONDecodeError, KeyError) as exc:
        sys.stderr.write(f"semistrong: malformed input: {exc}\n")
        return EXIT_MALFORMED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
