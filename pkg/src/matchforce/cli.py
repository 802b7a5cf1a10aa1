"""Command line interface: compute reports, verify theorem checks, generate families.

Exit codes: 0 success, 1 a theorem check failed (or an internal audit
tripped), 2 usage or malformed input, 3 the input graph has no perfect
matching, 4 a resource budget or size cap was exceeded.
"""

from __future__ import annotations

import argparse
import multiprocessing
import os
import sys
from typing import Iterable, Sequence

from .analysis import GraphAnalysis
from .errors import (
    BudgetExceededError,
    InternalConsistencyError,
    InvalidFamilyParamsError,
    InvalidGraphError,
    MalformedGraph6Error,
    NoPerfectMatchingError,
    SizeLimitError,
)
from .families import (
    enumerate_corpus,
    generate,
    parse_edge_list,
    parse_family_spec,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .graph import Graph, ResourceBudget
from .report import SCHEMA, build_report, render_json
from .theorems import ALL_CHECK_IDS, FAIL, NOT_APPLICABLE, PASS, REGISTRY, run_checks

ENV_MAX_MATCHINGS = "MATCHFORCE_MAX_MATCHINGS"
ENV_MAX_CYCLES = "MATCHFORCE_MAX_CYCLES"


def _budget_from(args) -> ResourceBudget:
    """Flags win over environment variables, which win over defaults."""
    defaults = ResourceBudget()

    def resolve(flag_value, env_name, default):
        if flag_value is not None:
            return flag_value
        env = os.environ.get(env_name)
        return int(env) if env else default

    return ResourceBudget(
        max_matchings=resolve(args.max_matchings, ENV_MAX_MATCHINGS, defaults.max_matchings),
        max_cycles=resolve(args.max_cycles, ENV_MAX_CYCLES, defaults.max_cycles),
    )


def _add_budget_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--max-matchings", type=int, default=None, metavar="N")
    parser.add_argument("--max-cycles", type=int, default=None, metavar="N")


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_single_graph(args) -> Graph:
    if args.family:
        return generate(parse_family_spec(args.family))
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.graph6_file:
        with open(args.graph6_file) as fh:
            lines = [line.strip() for line in fh if line.strip()]
        if len(lines) != 1:
            raise MalformedGraph6Error(
                f"expected exactly one graph6 line, found {len(lines)}", 0
            )
        return parse_graph6(lines[0])
    if args.edgelist:
        with open(args.edgelist) as fh:
            return parse_edge_list(fh.read())
    raise InvalidGraphError("no input graph given; use --family, --graph6, or a file")


def cmd_compute(args) -> int:
    budget = _budget_from(args)
    g = _load_single_graph(args)
    report = build_report(g, budget, include_timings=args.timings)
    _emit(render_json(report), args.output)
    return 0


def cmd_gen(args) -> int:
    g = generate(parse_family_spec(args.family_spec))
    if args.format == "graph6":
        _emit(write_graph6(g) + "\n", args.output)
    else:
        _emit(write_edge_list(g), args.output)
    return 0


def _corpus_from(args) -> tuple[dict, list[str]]:
    """Corpus descriptor plus the graph6 strings, in canonical order."""
    if args.all is not None:
        n = args.all
        if n < 1 or n > 7:
            raise InvalidGraphError("--all accepts 1..6 (labeled) or 7 (dedup)")
        stream = enumerate_corpus(min(n, 6), require_pm=True, dedup_iso=(n == 7))
        graphs = [write_graph6(g) for g in stream]
        descriptor = {"kind": "all", "n_max": n, "count": len(graphs)}
        return descriptor, graphs
    if args.family:
        graphs = [write_graph6(generate(parse_family_spec(f))) for f in args.family]
        descriptor = {"kind": "families", "families": list(args.family), "count": len(graphs)}
        return descriptor, graphs
    if args.graph6_file:
        with open(args.graph6_file) as fh:
            graphs = [
                write_graph6(parse_graph6(line.strip()))
                for line in fh
                if line.strip()
            ]
        descriptor = {
            "kind": "file",
            "path": os.path.basename(args.graph6_file),
            "count": len(graphs),
        }
        return descriptor, graphs
    raise InvalidGraphError("no corpus given; use --all, --family, or --graph6-file")


def _verify_one(payload: tuple[str, tuple[str, ...], int, int]) -> list[tuple[str, str, dict | None]]:
    """Worker: evaluate the requested checks on one graph6-encoded graph."""
    text, ids, max_matchings, max_cycles = payload
    g = parse_graph6(text)
    analysis = GraphAnalysis(g, ResourceBudget(max_matchings, max_cycles))
    outcomes = run_checks(analysis, ids)
    return [(cid, out.status, out.detail) for cid, out in outcomes.items()]


def cmd_verify(args) -> int:
    budget = _budget_from(args)
    ids = tuple(args.checks) if args.checks else ALL_CHECK_IDS
    for cid in ids:
        if cid not in REGISTRY:
            raise InvalidGraphError(f"unknown check id {cid!r}")
    descriptor, graphs = _corpus_from(args)
    payloads = [(g6, ids, budget.max_matchings, budget.max_cycles) for g6 in graphs]
    if args.jobs > 1 and len(payloads) > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            results = list(pool.imap(_verify_one, payloads, chunksize=16))
    else:
        results = [_verify_one(p) for p in payloads]

    checks_out = []
    any_failure = False
    for cid in ids:
        verdict: dict = {"status": "skipped", "reason": "no applicable graph in corpus"}
        applicable = 0
        for g6, outcome_list in zip(graphs, results):
            status, detail = next(
                (s, d) for c, s, d in outcome_list if c == cid
            )
            if status == NOT_APPLICABLE:
                continue
            applicable += 1
            if status == FAIL:
                verdict = {"status": "fail", "counterexample": g6, "detail": detail}
                any_failure = True
                break
        else:
            if applicable:
                verdict = {"status": "pass", "applicable": applicable}
        checks_out.append(
            {
                "id": cid,
                "statement": REGISTRY[cid].statement,
                "corpus": descriptor,
                "verdict": verdict,
            }
        )
    document = {"schema": SCHEMA, "command": "verify", "checks": checks_out}
    _emit(render_json(document), args.output)
    return 1 if any_failure else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchforce",
        description="Exact forcing, anti-forcing and global forcing invariants "
        "of small graphs, with a theorem verification harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="full invariant report for one graph")
    p_compute.add_argument("--family", metavar="NAME:PARAMS")
    p_compute.add_argument("--graph6", metavar="TEXT")
    p_compute.add_argument("--graph6-file", metavar="FILE")
    p_compute.add_argument("--edgelist", metavar="FILE")
    p_compute.add_argument("--output", metavar="FILE")
    p_compute.add_argument(
        "--timings",
        action="store_true",
        help="include per-field runtimes (breaks byte determinism)",
    )
    _add_budget_flags(p_compute)
    p_compute.set_defaults(handler=cmd_compute)

    p_verify = sub.add_parser("verify", help="run theorem checks over a corpus")
    p_verify.add_argument("checks", nargs="*", metavar="ID", help="default: all checks")
    p_verify.add_argument("--all", type=int, metavar="N", default=None)
    p_verify.add_argument("--family", action="append", metavar="NAME:PARAMS")
    p_verify.add_argument("--graph6-file", metavar="FILE")
    p_verify.add_argument("--jobs", type=int, default=1, metavar="N")
    p_verify.add_argument("--output", metavar="FILE")
    _add_budget_flags(p_verify)
    p_verify.set_defaults(handler=cmd_verify)

    p_gen = sub.add_parser("gen", help="emit a family graph")
    p_gen.add_argument("family_spec", metavar="NAME:PARAMS")
    p_gen.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p_gen.add_argument("--output", metavar="FILE")
    p_gen.set_defaults(handler=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.handler(args)
    except (InvalidFamilyParamsError, MalformedGraph6Error, InvalidGraphError, OSError) as exc:
        print(f"matchforce: error: {exc}", file=sys.stderr)
        return 2
    except NoPerfectMatchingError as exc:
        print(f"matchforce: error: {exc}", file=sys.stderr)
        return 3
    except BudgetExceededError as exc:
        print(f"matchforce: resource budget exceeded ({exc.budget_name}): {exc}", file=sys.stderr)
        return 4
    except SizeLimitError as exc:
        print(f"matchforce: size cap exceeded: {exc}", file=sys.stderr)
        return 4
    except InternalConsistencyError as exc:
        print(f"matchforce: internal consistency failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
