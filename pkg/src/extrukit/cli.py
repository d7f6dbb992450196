"""Command-line entry point: ``extrukit <command> ...``.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 findings / failed
competency questions / inconsistency.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import kb
from .errors import ContradictoryAssertion, CycleDetected, ParseError
from .graph import Graph, merge_all
from .inference import check_consistency, materialize
from .metrics import census, format_value, graph_metrics, json_value, schema_metrics
from .pitfalls import scan
from .rcc import QCN, Rcc8, deterministic_chains, network_from_graph, path_consistency, vocabulary_graph
from .rcc.algebra import COMPOSITION, names
from .sparql import evaluate, format_results, parse_query
from .turtle import parse_file, serialize_turtle

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_FINDINGS = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 by default
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


class _InputError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(paths: Sequence[str]) -> Graph:
    graphs = []
    for path in paths:
        try:
            graphs.append(parse_file(path))
        except ParseError as exc:
            raise _InputError(EXIT_PARSE, f"{path}:{exc}") from exc
        except OSError as exc:
            raise _InputError(EXIT_USAGE, f"cannot read {path}: {exc.strerror}") from exc
    return merge_all(graphs)


# -- commands ---------------------------------------------------------------

def cmd_infer(args) -> int:
    closure = materialize(_load(args.inputs), reflexive=args.reflexive)
    text = serialize_turtle(closure)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_query(args) -> int:
    try:
        query_text = Path(args.query).read_text(encoding="utf-8")
    except OSError as exc:
        raise _InputError(EXIT_USAGE, f"cannot read {args.query}: {exc.strerror}") from exc
    try:
        query = parse_query(query_text)
    except ParseError as exc:
        raise _InputError(EXIT_PARSE, f"{args.query}:{exc}") from exc
    graph = _load(args.data)
    if not args.no_infer:
        graph = materialize(graph)
    sys.stdout.write(format_results(evaluate(query, graph), args.format))
    return EXIT_OK


def cmd_metrics(args) -> int:
    graph = _load(args.data)
    sections = []
    if args.counts or not (args.schema or args.graph):
        counts = census(graph)
        sections.append(("counts", counts.as_dict()))
    else:
        counts = None
    if args.schema or not (args.counts or args.graph):
        sections.append(("schema", schema_metrics(counts or census(graph)).as_dict()))
    if args.graph or not (args.counts or args.schema):
        try:
            sections.append(("graph", graph_metrics(graph).as_dict()))
        except CycleDetected as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FINDINGS
    if args.format == "json":
        doc = {name: {k: json_value(v) for k, v in values.items()} for name, values in sections}
        if len(doc) == 1:
            doc = next(iter(doc.values()))
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    items = [(k, format_value(v)) for _, values in sections for k, v in values.items()]
    if args.format == "tsv":
        for key, value in items:
            print(f"{key}\t{value}")
    else:
        width = max(len(k) for k, _ in items)
        for key, value in items:
            print(f"{key:<{width}}  {value}")
    return EXIT_OK


def cmd_pitfalls(args) -> int:
    findings = scan(_load(args.data), allow_external=args.allow_external)
    for finding in findings:
        print(finding.line())
    return EXIT_FINDINGS if findings else EXIT_OK


def cmd_validate(args) -> int:
    closure = materialize(_load(args.data))
    problems = [str(report) for report in check_consistency(closure)]
    try:
        network = network_from_graph(closure, vocabulary_graph())
        if len(network) and not path_consistency(network)[0]:
            problems.append("SpatialInconsistency the RCC8 network is not path-consistent")
    except ContradictoryAssertion as exc:
        problems.append(f"SpatialInconsistency {exc}")
    for line in problems:
        print(line)
    if problems:
        return EXIT_FINDINGS
    print(f"consistent ({len(closure)} triples after inference)")
    return EXIT_OK


def _relation(name: str) -> Rcc8:
    try:
        return Rcc8.parse(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_rcc(args) -> int:
    if args.rcc_command == "compose":
        bits = COMPOSITION[_relation(args.r)][_relation(args.s)]
        print(" ".join(names(bits)))
        return EXIT_OK
    if args.rcc_command == "chains":
        for r, s, t in deterministic_chains():
            print(f"{r.name}\t{s.name}\t{t.name}")
        return EXIT_OK
    try:
        with open(args.network, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise _InputError(EXIT_USAGE, f"cannot read {args.network}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise _InputError(EXIT_PARSE, f"{args.network}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    try:
        network = QCN.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise _InputError(EXIT_PARSE, f"{args.network}: malformed network: {exc}") from exc
    ok, refined = path_consistency(network)
    if not ok:
        print("inconsistent")
        return EXIT_FINDINGS
    print("consistent")
    print(json.dumps(refined.to_json(), indent=2))
    return EXIT_OK


def cmd_cq(args) -> int:
    fixtures = Path(args.fixtures) if args.fixtures else None
    cases = kb.cq_suite(fixtures)
    if args.id:
        cases = [c for c in cases if c.id == args.id]
        if not cases:
            raise UsageError(f"no competency question with id {args.id!r}")
    outcomes = kb.run_suite(cases, infer=not args.no_infer)
    for outcome in outcomes:
        mark = "PASS" if outcome.passed else "FAIL"
        print(f"{mark} {outcome.case.id}  {outcome.detail}")
    passed = sum(o.passed for o in outcomes)
    print(f"{passed}/{len(outcomes)} passed")
    return EXIT_OK if passed == len(outcomes) else EXIT_FINDINGS


# -- argument parsing -------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="extrukit", description="RDF/OWL toolkit for the ExtruOnt extruder ontology.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("infer", help="materialize the deductive closure")
    p.add_argument("inputs", nargs="+", metavar="in.ttl")
    p.add_argument("-o", "--output", metavar="out.ttl")
    p.add_argument("--reflexive", action="store_true", help="also emit x p x for reflexive properties")
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("query", help="run a SPARQL-subset query")
    p.add_argument("-q", "--query", required=True, metavar="q.rq")
    p.add_argument("data", nargs="+", metavar="data.ttl")
    p.add_argument("--no-infer", action="store_true", help="query the asserted triples only")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("metrics", help="axiom census and schema/graph metrics")
    p.add_argument("data", nargs="+", metavar="data.ttl")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--counts", action="store_true")
    which.add_argument("--schema", action="store_true")
    which.add_argument("--graph", action="store_true")
    p.add_argument("--format", choices=("tsv", "json", "text"), default="tsv",
                   help="text aligns the two columns for reading")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("pitfalls", help="scan for P02/P04 pitfalls")
    p.add_argument("data", nargs="+", metavar="data.ttl")
    p.add_argument("--allow-external", action="append", default=[], metavar="prefix",
                   help="namespace IRI or bound prefix label exempt from P04 (repeatable)")
    p.set_defaults(func=cmd_pitfalls)

    p = sub.add_parser("validate", help="materialize and report clashes")
    p.add_argument("data", nargs="+", metavar="data.ttl")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("rcc", help="RCC8 utilities")
    rcc = p.add_subparsers(dest="rcc_command", parser_class=_Parser)
    rcc.required = True
    c = rcc.add_parser("compose", help="composition table lookup")
    c.add_argument("r")
    c.add_argument("s")
    rcc.add_parser("chains", help="list the single-relation compositions")
    c = rcc.add_parser("check", help="path-consistency check of a network")
    c.add_argument("network", metavar="net.json")
    p.set_defaults(func=cmd_rcc)

    p = sub.add_parser("cq", help="competency-question suite")
    cq = p.add_subparsers(dest="cq_command", parser_class=_Parser)
    cq.required = True
    c = cq.add_parser("run", help="run the suite against the fixtures")
    c.add_argument("--id", metavar="CQid")
    c.add_argument("--fixtures", metavar="dir")
    c.add_argument("--no-infer", action="store_true")
    p.set_defaults(func=cmd_cq)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
