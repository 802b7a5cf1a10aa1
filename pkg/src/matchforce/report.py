"""Invariant report assembly: one JSON document per graph, self-audited.

Before a report is emitted the inequality checks T01..T05 are re-run on the
computed numbers; a violation means the implementation itself is broken, so
assembly aborts with a diagnostic instead of emitting the report.
"""

from __future__ import annotations

import json
import time
from typing import Any

from .analysis import GraphAnalysis
from .errors import InternalConsistencyError, NoPerfectMatchingError
from .families import write_graph6
from .graph import DEFAULT_BUDGET, Graph, ResourceBudget, has_perfect_matching
from .theorems import FAIL, run_checks

SCHEMA = "matchforce/1"

SELF_AUDIT_IDS = ("T01", "T02", "T03", "T04", "T05")


def _edge_list(edges) -> list[list[int]]:
    return [[a, b] for a, b in edges]


def build_report(
    g: Graph,
    budget: ResourceBudget = DEFAULT_BUDGET,
    include_timings: bool = False,
) -> dict[str, Any]:
    """Compute every report field for g; raises if g has no perfect matching."""
    if not has_perfect_matching(g):
        raise NoPerfectMatchingError("graph has no perfect matching")
    a = GraphAnalysis(g, budget)
    timings: dict[str, float] = {}

    def timed(field: str, compute):
        start = time.perf_counter()
        value = compute()
        timings[field] = round((time.perf_counter() - start) * 1000, 3)
        return value

    inv = timed("invariants", lambda: a.invariants)
    phi = timed("phi", lambda: a.phi)
    summary = timed("forcing", lambda: a.summary)
    matching_covered = timed("matching_covered", lambda: a.matching_covered)
    in_class = timed("in_class_g", lambda: a.in_class_g)
    brick = timed("brick", lambda: a.brick)
    solid = timed("solid", lambda: a.solid)
    fpm = timed("fpm_equals_pm", lambda: a.fpm_equals_pm)

    audit = run_checks(a, SELF_AUDIT_IDS)
    failures = {cid: out.detail for cid, out in audit.items() if out.status == FAIL}
    if failures:
        raise InternalConsistencyError(
            f"report self-audit failed, implementation bug: {failures}"
        )

    report: dict[str, Any] = {
        "schema": SCHEMA,
        "graph": {
            "n": g.n,
            "e": g.e,
            "graph6": write_graph6(g),
            "edges": _edge_list(g.edges),
        },
        "invariants": {
            "cyclomatic": inv.cyclomatic,
            "connected": inv.connected,
            "bipartite": inv.bipartite,
            "delta_min": inv.delta_min,
            "delta_max": inv.delta_max,
            "matching_covered": matching_covered,
            "in_class_g": in_class,
            "brick": brick,
            "solid": solid,
            "fpm_equals_pm": fpm,
        },
        "phi": phi,
        "forcing": {
            "f_min": summary.f_min,
            "f_max": summary.f_max,
            "af_min": summary.af_min,
            "af_max": summary.af_max,
            "gf": summary.gf,
            "witnesses": {
                "f_min": _edge_list(summary.f_min_witness),
                "f_max": _edge_list(summary.f_max_witness),
                "af_min": _edge_list(summary.af_min_witness),
                "af_max": _edge_list(summary.af_max_witness),
                "gf": _edge_list(summary.gf_witness),
            },
            "per_matching": [
                {
                    "matching": _edge_list(r.matching.edges),
                    "f": r.f,
                    "af": r.af,
                }
                for r in summary.per_matching
            ],
        },
    }
    if include_timings:
        report["timings_ms"] = timings
    return report


def render_json(document: dict[str, Any]) -> str:
    """Canonical JSON rendering: sorted keys, two-space indent, trailing newline."""
    return json.dumps(document, indent=2, sort_keys=True) + "\n"
