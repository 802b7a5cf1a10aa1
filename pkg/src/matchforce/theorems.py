"""Registry of verifiable statements T01..T16 about forcing invariants.

Each check evaluates one universally quantified statement on a single graph
and reports pass, fail (with the conflicting numbers), or not applicable.
A corpus driver aggregates outcomes across graphs; since every statement
here is proved in general, any failure is an implementation bug.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

from .analysis import GraphAnalysis
from .families import FamilySpec, generate, iso_canonical_key
from .graph import Graph, Matching

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class CheckOutcome:
    status: str
    detail: dict | None = None


def _ok() -> CheckOutcome:
    return CheckOutcome(PASS)


def _fail(**detail) -> CheckOutcome:
    return CheckOutcome(FAIL, {k: v for k, v in detail.items()})


def _na() -> CheckOutcome:
    return CheckOutcome(NOT_APPLICABLE)


def check_t01(a: GraphAnalysis) -> CheckOutcome:
    delta = a.invariants.delta_max
    for r in a.summary.per_matching:
        if not (r.f <= r.af <= (delta - 1) * r.f):
            return _fail(f=r.f, af=r.af, delta=delta, matching=list(r.matching.edges))
    if not (a.summary.f_max <= a.summary.af_max <= (delta - 1) * a.summary.f_max):
        return _fail(F=a.summary.f_max, Af=a.summary.af_max, delta=delta)
    return _ok()


def check_t02(a: GraphAnalysis) -> CheckOutcome:
    if not a.invariants.connected:
        return _na()
    c = a.invariants.cyclomatic
    af = a.max_anti_forcing
    if af > c:
        return _fail(Af=af, cyclomatic=c)
    if not a.invariants.bipartite and af >= c:
        return _fail(Af=af, cyclomatic=c, note="strict inequality required")
    return _ok()


def check_t03(a: GraphAnalysis) -> CheckOutcome:
    if not a.invariants.connected:
        return _na()
    c = a.invariants.cyclomatic
    if a.gf > c:
        return _fail(gf=a.gf, cyclomatic=c)
    if (a.gf == c) != a.all_cycles_nice:
        return _fail(
            gf=a.gf,
            cyclomatic=c,
            all_cycles_nice=a.all_cycles_nice,
            note="equality must hold exactly when every cycle is nice",
        )
    return _ok()


def check_t04(a: GraphAnalysis) -> CheckOutcome:
    needed = max(a.phi - 1, 0).bit_length() if a.phi else 0  # ceil(log2(phi))
    if a.gf < needed:
        return _fail(gf=a.gf, phi=a.phi, lower_bound=needed)
    return _ok()


def check_t05(a: GraphAnalysis) -> CheckOutcome:
    if a.gf < a.max_forcing:
        return _fail(gf=a.gf, F=a.max_forcing)
    return _ok()


def check_t06(a: GraphAnalysis) -> CheckOutcome:
    if not a.invariants.bipartite:
        return _na()
    if a.gf < a.max_anti_forcing:
        return _fail(gf=a.gf, Af=a.max_anti_forcing)
    return _ok()


def _is_balanced_complete_bipartite(g: Graph) -> bool:
    sides = g.bipartition()
    if sides is None:
        return False
    n = g.n // 2
    return len(sides[0]) == n and g.e == n * n


def check_t07(a: GraphAnalysis) -> CheckOutcome:
    g = a.g
    if not (a.invariants.bipartite and a.invariants.connected and g.n >= 6 and g.n % 2 == 0):
        return _na()
    n = g.n // 2
    diff = a.gf - a.max_anti_forcing
    bound = (n - 1) * (n - 2) // 2
    if not 0 <= diff <= bound:
        return _fail(gf=a.gf, Af=a.max_anti_forcing, upper=bound)
    if (diff == bound) != _is_balanced_complete_bipartite(g):
        return _fail(
            gf=a.gf,
            Af=a.max_anti_forcing,
            upper=bound,
            note="equality must characterize the balanced complete bipartite graph",
        )
    return _ok()


def check_t08(a: GraphAnalysis) -> CheckOutcome:
    if 4 * a.max_anti_forcing > 2 * a.g.e - a.g.n:
        return _fail(Af=a.max_anti_forcing, e=a.g.e, v=a.g.n)
    return _ok()


def _matching_closes_rectangles(g: Graph, m: Matching) -> bool:
    for (x, y), (u, v) in itertools.combinations(m.edges, 2):
        if g.has_edge(x, u) != g.has_edge(y, v):
            return False
        if g.has_edge(x, v) != g.has_edge(y, u):
            return False
    return True


def check_t09(a: GraphAnalysis) -> CheckOutcome:
    bound_value = 2 * a.g.e - a.g.n
    for r in a.summary.per_matching:
        attains = 4 * r.af == bound_value
        criterion = _matching_closes_rectangles(a.g, r.matching)
        if attains != criterion:
            return _fail(
                af=r.af,
                bound_times_4=bound_value,
                criterion=criterion,
                matching=list(r.matching.edges),
            )
    return _ok()


def check_t10(a: GraphAnalysis) -> CheckOutcome:
    if not (a.invariants.connected and a.has_nice_matching):
        return _na()
    n = a.g.n // 2
    if a.gf < n - 1:
        return _fail(gf=a.gf, lower_bound=n - 1)
    return _ok()


def _is_complete_bipartite_minus_edge(g: Graph) -> int | None:
    """Side size n when g is a balanced complete bipartite graph minus one edge."""
    sides = g.bipartition()
    if sides is None or g.n % 2 or not g.is_connected():
        return None
    n = g.n // 2
    if len(sides[0]) == n and g.e == n * n - 1:
        return n
    return None


def check_t11(a: GraphAnalysis) -> CheckOutcome:
    n = _is_complete_bipartite_minus_edge(a.g)
    if n is None or n < 4:
        return _na()
    want_gf = n * n - 2 * n - 1
    want_af = (n - 2) * (n + 1) // 2
    if a.gf != want_gf or a.max_anti_forcing != want_af:
        return _fail(gf=a.gf, Af=a.max_anti_forcing, want_gf=want_gf, want_af=want_af)
    return _ok()


def check_t12(a: GraphAnalysis) -> CheckOutcome:
    if not a.in_class_g:
        return _na()
    if a.gf < a.max_anti_forcing:
        return _fail(gf=a.gf, Af=a.max_anti_forcing)
    return _ok()


def check_t13(a: GraphAnalysis) -> CheckOutcome:
    if a.fpm_equals_pm and not a.in_class_g:
        return _fail(fpm_equals_pm=True, in_class_g=False)
    return _ok()


def check_t14(a: GraphAnalysis) -> CheckOutcome:
    if not a.brick:
        return _na()
    values = {"solid": a.solid, "in_class_g": a.in_class_g, "fpm_equals_pm": a.fpm_equals_pm}
    if len(set(values.values())) != 1:
        return _fail(**values)
    return _ok()


def check_t15(a: GraphAnalysis) -> CheckOutcome:
    g = a.g
    if not (a.invariants.connected and g.n >= 4 and g.n % 2 == 0):
        return _na()
    n = g.n // 2
    diff = a.gf - a.max_anti_forcing
    lower2 = -(n * n - n - 2)  # twice the lower bound, kept integral
    upper = (n - 1) * (n - 2)
    if not (lower2 <= 2 * diff and diff <= upper):
        return _fail(gf=a.gf, Af=a.max_anti_forcing, lower_twice=lower2, upper=upper)
    if (2 * diff == lower2) != (n == 2):
        return _fail(
            gf=a.gf,
            Af=a.max_anti_forcing,
            n=n,
            note="left equality must hold exactly for n = 2",
        )
    return _ok()


def _prism_chain_length(g: Graph) -> int | None:
    if g.n % 6:
        return None
    k = g.n // 6
    reference = generate(FamilySpec("prism_chain", (k,)))
    if g == reference:
        return k
    if g.n <= 7 and iso_canonical_key(g) == iso_canonical_key(reference):
        return k
    return None


def check_t16(a: GraphAnalysis) -> CheckOutcome:
    g = a.g
    if g.n >= 2 and g.n % 2 == 0 and g.e == g.n * (g.n - 1) // 2:
        n = g.n // 2
        want_gf = 2 * (n - 1) ** 2
        want_af = n * n - n
        if a.gf != want_gf or a.max_anti_forcing != want_af:
            return _fail(gf=a.gf, Af=a.max_anti_forcing, want_gf=want_gf, want_af=want_af)
        return _ok()
    k = _prism_chain_length(g)
    if k is not None:
        want_gf = 3 * k - 1
        want_af = 4 * k - 1
        if not a.matching_covered:
            return _fail(matching_covered=False)
        if a.gf != want_gf or a.max_anti_forcing != want_af:
            return _fail(gf=a.gf, Af=a.max_anti_forcing, want_gf=want_gf, want_af=want_af)
        return _ok()
    return _na()


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    statement: str
    run: Callable[[GraphAnalysis], CheckOutcome]


REGISTRY: dict[str, TheoremCheck] = {
    c.id: c
    for c in [
        TheoremCheck(
            "T01",
            "f(G,M) <= af(G,M) <= (max_degree - 1) * f(G,M) for every perfect matching",
            check_t01,
        ),
        TheoremCheck(
            "T02",
            "Af(G) <= cyclomatic(G) on connected graphs, strictly if non-bipartite",
            check_t02,
        ),
        TheoremCheck(
            "T03",
            "gf(G) <= cyclomatic(G) on connected graphs, equal iff every cycle is nice",
            check_t03,
        ),
        TheoremCheck("T04", "gf(G) >= ceil(log2 of the perfect matching count)", check_t04),
        TheoremCheck("T05", "gf(G) >= F(G)", check_t05),
        TheoremCheck("T06", "gf(G) >= Af(G) on bipartite graphs", check_t06),
        TheoremCheck(
            "T07",
            "0 <= gf - Af <= (n-1)(n-2)/2 on connected bipartite graphs with 2n >= 6 "
            "vertices; the upper bound is attained exactly by balanced complete "
            "bipartite graphs",
            check_t07,
        ),
        TheoremCheck("T08", "4 * Af(G) <= 2 e(G) - v(G)", check_t08),
        TheoremCheck(
            "T09",
            "a matching attains the anti-forcing bound (2e - v)/4 exactly when every "
            "two of its edges close adjacencies in parallel",
            check_t09,
        ),
        TheoremCheck(
            "T10",
            "gf(G) >= n - 1 on connected graphs with 2n vertices having a matching "
            "that attains the anti-forcing bound",
            check_t10,
        ),
        TheoremCheck(
            "T11",
            "balanced complete bipartite minus one edge (n >= 4): gf = n^2 - 2n - 1 "
            "and Af = (n-2)(n+1)/2",
            check_t11,
        ),
        TheoremCheck(
            "T12",
            "gf(G) >= Af(G) when no two disjoint odd cycles leave a matchable remainder",
            check_t12,
        ),
        TheoremCheck(
            "T13",
            "polytope equality with non-negative 1-regular vectors implies no two "
            "disjoint odd cycles leave a matchable remainder",
            check_t13,
        ),
        TheoremCheck(
            "T14",
            "on bricks: solid, odd-cycle class membership, and polytope equality agree",
            check_t14,
        ),
        TheoremCheck(
            "T15",
            "-(n^2-n-2)/2 <= gf - Af <= (n-1)(n-2) on connected graphs with 2n >= 4 "
            "vertices; left equality exactly for n = 2",
            check_t15,
        ),
        TheoremCheck(
            "T16",
            "complete graphs: gf = 2(n-1)^2 and Af = n^2 - n; prism chains: "
            "gf = 3k - 1 and Af = 4k - 1",
            check_t16,
        ),
    ]
}

ALL_CHECK_IDS = tuple(sorted(REGISTRY))


def run_checks(a: GraphAnalysis, ids) -> dict[str, CheckOutcome]:
    return {cid: REGISTRY[cid].run(a) for cid in ids}
