"""Forcing, anti-forcing and global forcing numbers with canonical witnesses.

All three are minimum hitting sets over cycle families: a forcing set of a
perfect matching M must contain an edge of every M-alternating cycle, an
anti-forcing set a non-matching edge of every M-alternating cycle, and a
global forcing set an edge of every nice cycle.  Ties are always broken
toward the lexicographically smallest witness so runs are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    DisconnectedGraphError,
    InternalConsistencyError,
    NoPerfectMatchingError,
    NotGlobalForcingSetError,
    NotPerfectMatchingError,
)
from .graph import (
    DEFAULT_BUDGET,
    CycleFamily,
    Edge,
    Graph,
    Matching,
    ResourceBudget,
    alternating_cycles,
    count_perfect_matchings,
    enumerate_perfect_matchings,
    has_perfect_matching,
    nice_cycles,
    normalize_edge,
)
from .hitting import HittingInstance, min_hitting_set

EdgeSet = tuple[Edge, ...]


@dataclass(frozen=True)
class MatchingForcing:
    """Forcing and anti-forcing data of one perfect matching."""

    matching: Matching
    f: int
    af: int
    f_witness: EdgeSet
    af_witness: EdgeSet


@dataclass(frozen=True)
class ForcingSummary:
    """Extremal forcing invariants of a graph over all its perfect matchings."""

    f_min: int
    f_max: int
    af_min: int
    af_max: int
    gf: int
    f_min_witness: EdgeSet
    f_max_witness: EdgeSet
    af_min_witness: EdgeSet
    af_max_witness: EdgeSet
    gf_witness: EdgeSet
    per_matching: tuple[MatchingForcing, ...]


def _forcing_from_family(m: Matching, fam: CycleFamily) -> tuple[int, EdgeSet]:
    m_set = set(m.edges)
    sets = [tuple(e for e in c.edge_set if e in m_set) for c in fam.cycles]
    return min_hitting_set(HittingInstance(m.edges, sets))


def _anti_forcing_from_family(g: Graph, m: Matching, fam: CycleFamily) -> tuple[int, EdgeSet]:
    m_set = set(m.edges)
    universe = tuple(e for e in g.edges if e not in m_set)
    sets = [tuple(e for e in c.edge_set if e not in m_set) for c in fam.cycles]
    return min_hitting_set(HittingInstance(universe, sets))


def forcing_number(
    g: Graph, m: Matching, budget: ResourceBudget = DEFAULT_BUDGET
) -> tuple[int, EdgeSet]:
    """Minimum size of a forcing set of m, with the canonical witness inside m."""
    return _forcing_from_family(m, alternating_cycles(g, m, budget))


def anti_forcing_number(
    g: Graph, m: Matching, budget: ResourceBudget = DEFAULT_BUDGET
) -> tuple[int, EdgeSet]:
    """Minimum size of an anti-forcing set of m, witness drawn from E(g) minus m."""
    return _anti_forcing_from_family(g, m, alternating_cycles(g, m, budget))


def global_forcing_number(
    g: Graph, budget: ResourceBudget = DEFAULT_BUDGET
) -> tuple[int, EdgeSet]:
    """Minimum size of a global forcing set: a hitting set of all nice cycles."""
    if not has_perfect_matching(g):
        raise NoPerfectMatchingError("graph has no perfect matching")
    fam = nice_cycles(g, budget)
    return min_hitting_set(HittingInstance(g.edges, [c.edge_set for c in fam.cycles]))


def forcing_summary(g: Graph, budget: ResourceBudget = DEFAULT_BUDGET) -> ForcingSummary:
    """Exact extrema of f and af over all perfect matchings, plus gf."""
    if not has_perfect_matching(g):
        raise NoPerfectMatchingError("graph has no perfect matching")
    per = []
    for m in enumerate_perfect_matchings(g, budget):
        fam = alternating_cycles(g, m, budget)
        f, fw = _forcing_from_family(m, fam)
        af, afw = _anti_forcing_from_family(g, m, fam)
        per.append(MatchingForcing(m, f, af, fw, afw))
    gf, gfw = global_forcing_number(g, budget)
    f_min = min(r.f for r in per)
    f_max = max(r.f for r in per)
    af_min = min(r.af for r in per)
    af_max = max(r.af for r in per)

    def first_witness(attr: str, value: int, witness_attr: str) -> EdgeSet:
        return next(getattr(r, witness_attr) for r in per if getattr(r, attr) == value)

    return ForcingSummary(
        f_min=f_min,
        f_max=f_max,
        af_min=af_min,
        af_max=af_max,
        gf=gf,
        f_min_witness=first_witness("f", f_min, "f_witness"),
        f_max_witness=first_witness("f", f_max, "f_witness"),
        af_min_witness=first_witness("af", af_min, "af_witness"),
        af_max_witness=first_witness("af", af_max, "af_witness"),
        gf_witness=gfw,
        per_matching=tuple(per),
    )


def is_global_forcing_set(g: Graph, s, budget: ResourceBudget = DEFAULT_BUDGET) -> bool:
    """True when s intersects every nice cycle of g."""
    chosen = {normalize_edge(a, b) for a, b in s}
    return all(
        any(e in chosen for e in c.edge_set) for c in nice_cycles(g, budget).cycles
    )


def global_forcing_via_subgraph(
    g: Graph, budget: ResourceBudget = DEFAULT_BUDGET
) -> tuple[int, Graph]:
    """Independent route to gf: largest spanning connected subgraph with no nice cycle.

    Returns (e(g) - e(T), T).  Deletion sets are scanned by size then
    lexicographic edge-index order, so T is canonical.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("subgraph characterization needs a connected graph")
    if not has_perfect_matching(g):
        raise NoPerfectMatchingError("graph has no perfect matching")
    index = g.edge_index
    cycle_masks = []
    for c in nice_cycles(g, budget).cycles:
        cm = 0
        for e in c.edge_set:
            cm |= 1 << index[e]
        cycle_masks.append(cm)
    em = len(g.edges)
    full = (1 << em) - 1

    def connected_with(edge_mask: int) -> bool:
        if g.n == 0:
            return True
        adj = [0] * g.n
        rest = edge_mask
        while rest:
            b = rest & -rest
            a, bb = g.edges[b.bit_length() - 1]
            adj[a] |= 1 << bb
            adj[bb] |= 1 << a
            rest ^= b
        comp = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                fb = f & -f
                nxt |= adj[fb.bit_length() - 1]
                f ^= fb
            frontier = nxt & ~comp
            comp |= frontier
        return comp == g.full_vertex_mask

    for d in range(em + 1):
        for drop in itertools.combinations(range(em), d):
            t_mask = full
            for i in drop:
                t_mask &= ~(1 << i)
            if any(cm & ~t_mask == 0 for cm in cycle_masks):
                continue
            if connected_with(t_mask):
                kept = [g.edges[i] for i in range(em) if t_mask >> i & 1]
                return d, Graph(g.n, kept)
    raise InternalConsistencyError("no nice-cycle-free spanning subgraph found")


def extend_to_unique_pm(
    g: Graph, s, budget: ResourceBudget = DEFAULT_BUDGET
) -> EdgeSet:
    """Smallest F inside the global forcing set s with (g - s) + F having a PM.

    The returned graph (g - s) + F is guaranteed to have exactly one perfect
    matching; this is asserted by enumeration, not searched for.
    """
    s_edges = tuple(sorted({normalize_edge(a, b) for a, b in s}))
    for e in s_edges:
        if e not in g.edge_index:
            raise NotGlobalForcingSetError(f"{e} is not an edge of g")
    if not has_perfect_matching(g):
        raise NoPerfectMatchingError("graph has no perfect matching")
    if not is_global_forcing_set(g, s_edges, budget):
        raise NotGlobalForcingSetError("s misses a nice cycle of g")
    base = g.without_edges(s_edges)
    for size in range(len(s_edges) + 1):
        for combo in itertools.combinations(s_edges, size):
            candidate = base.with_edges(combo)
            if has_perfect_matching(candidate):
                if count_perfect_matchings(candidate) != 1:
                    raise InternalConsistencyError(
                        "extension produced multiple perfect matchings"
                    )
                return combo
    raise InternalConsistencyError("no extension restored a perfect matching")


@dataclass(frozen=True)
class LMReduction:
    """Result of stripping pendant vertices together with their neighbors."""

    reduced: Graph
    removed_pairs: EdgeSet
    vertex_map: tuple[int, ...]  # kept original labels, index = new label


def lm_reduce(g: Graph) -> LMReduction:
    """Delete pendant vertex plus neighbor until minimum degree >= 2 or empty.

    Every removed pair is a matched pair in all perfect matchings, so the
    minimum global forcing sets of the reduction correspond to those of g.
    """
    if not has_perfect_matching(g):
        raise NoPerfectMatchingError("graph has no perfect matching")
    alive = set(range(g.n))
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    removed: list[Edge] = []
    while True:
        pendants = sorted(v for v in alive if len(adj[v]) == 1)
        if not pendants:
            break
        u = pendants[0]
        (v,) = adj[u]
        removed.append(normalize_edge(u, v))
        for w in (u, v):
            for x in adj[w]:
                adj[x].discard(w)
            adj[w] = set()
            alive.discard(w)
        if any(not adj[w] for w in alive):
            raise InternalConsistencyError("LM operation stranded a vertex")
    kept = tuple(sorted(alive))
    new_label = {old: i for i, old in enumerate(kept)}
    reduced = Graph(
        len(kept),
        [
            (new_label[a], new_label[b])
            for a, b in g.edges
            if a in alive and b in alive
        ],
    )
    return LMReduction(reduced, tuple(removed), kept)
