"""Structural predicates: unique-matching theorems, cuts, bricks, solidity.

Covers the machinery around graphs with a unique perfect matching (cut edge
in the matching, bipartite vertex labeling, odd-dumbbell substructure), the
class of graphs with no two disjoint odd cycles leaving a matchable
remainder, and the cut taxonomy (tight / separating / trivial) that defines
bricks and solid bricks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    BudgetExceededError,
    DisconnectedGraphError,
    EvenShoreError,
    InternalConsistencyError,
    InvalidGraphError,
    NoPerfectMatchingError,
    NotBipartiteError,
    NotMatchingCoveredError,
    NotUniquePerfectMatchingError,
    PendantVertexError,
    SizeLimitError,
)
from .graph import (
    DEFAULT_BUDGET,
    Cycle,
    Edge,
    Graph,
    Matching,
    ResourceBudget,
    _has_pm_on,
    _iter_bits,
    enumerate_perfect_matchings,
    has_perfect_matching,
    normalize_edge,
    simple_cycles_raw,
)

SHORE_ENUMERATION_CAP = 16


def unique_perfect_matching(g: Graph) -> Matching:
    """The unique perfect matching of g, or a typed error if there is not exactly one."""
    try:
        ms = enumerate_perfect_matchings(g, ResourceBudget(max_matchings=1))
    except BudgetExceededError:
        raise NotUniquePerfectMatchingError("graph has more than one perfect matching") from None
    if not ms:
        raise NotUniquePerfectMatchingError("graph has no perfect matching")
    return ms[0]


def bridges(g: Graph) -> tuple[Edge, ...]:
    """All cut edges, found by a depth-first lowpoint scan."""
    disc = [-1] * g.n
    low = [0] * g.n
    out: list[Edge] = []
    counter = itertools.count()

    def dfs(root: int):
        stack = [(root, -1, iter(_iter_bits(g.adj[root])))]
        disc[root] = low[root] = next(counter)
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    disc[u] = low[u] = next(counter)
                    stack.append((u, v, iter(_iter_bits(g.adj[u]))))
                    advanced = True
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        out.append(normalize_edge(p, v))

    for r in range(g.n):
        if disc[r] == -1:
            dfs(r)
    return tuple(sorted(out))


def kotzig_cut_edge(g: Graph) -> Edge:
    """A bridge inside the unique perfect matching (smallest if several)."""
    if not g.is_connected():
        raise DisconnectedGraphError("cut-edge theorem needs a connected graph")
    if g.n == 0:
        raise InvalidGraphError("the empty graph has no cut edge")
    m = unique_perfect_matching(g)
    matched_bridges = sorted(set(bridges(g)) & set(m.edges))
    if not matched_bridges:
        raise InternalConsistencyError("no matched bridge in a unique-matching graph")
    return matched_bridges[0]


def bipartite_unique_pm_labeling(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Vertex orders (u_1..u_n, v_1..v_n) with matching u_i v_i and edges u_i v_j only for i <= j.

    Built by repeatedly stripping the smallest pendant vertex on the v side;
    uniqueness of the matching guarantees one always exists.
    """
    sides = g.bipartition()
    if sides is None:
        raise NotBipartiteError("graph is not bipartite")
    m = unique_perfect_matching(g)
    side_v = set(sides[1])
    partner = {}
    for a, b in m.edges:
        partner[a] = b
        partner[b] = a
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    alive = set(range(g.n))
    u_order: list[int] = []
    v_order: list[int] = []
    while alive:
        pendant = min(
            (v for v in alive if v in side_v and len(adj[v]) == 1), default=None
        )
        if pendant is None:
            raise InternalConsistencyError("no pendant v-side vertex during stripping")
        u = partner[pendant]
        v_order.append(pendant)
        u_order.append(u)
        for w in (pendant, u):
            for x in adj[w]:
                adj[x].discard(w)
            adj[w] = set()
            alive.discard(w)
    u_idx = {u: i for i, u in enumerate(u_order)}
    v_idx = {v: j for j, v in enumerate(v_order)}
    for a, b in g.edges:
        i = u_idx[a] if a in u_idx else u_idx[b]
        j = v_idx[b] if b in v_idx else v_idx[a]
        if i > j:
            raise InternalConsistencyError(f"edge ({a},{b}) breaks the triangular labeling")
    n = len(u_order)
    if g.e > n * (n + 1) // 2:
        raise InternalConsistencyError("edge count exceeds the unique-matching bound")
    return tuple(u_order), tuple(v_order)


@dataclass(frozen=True)
class OddDumbbell:
    """Two disjoint odd cycles joined by an odd path, carrying a unique matching.

    ``path`` runs from a vertex of cycle_a to a vertex of cycle_b and is
    internally disjoint from both cycles; ``pm`` is the unique perfect
    matching of the dumbbell subgraph.
    """

    cycle_a: Cycle
    cycle_b: Cycle
    path: tuple[int, ...]
    pm: tuple[Edge, ...]

    def __init__(self, cycle_a: Cycle, cycle_b: Cycle, path, pm):
        path = tuple(path)
        pm = tuple(sorted(normalize_edge(a, b) for a, b in pm))
        host = cycle_a.host
        if cycle_b.host != host:
            raise InvalidGraphError("dumbbell cycles live on different hosts")
        if len(cycle_a) % 2 == 0 or len(cycle_b) % 2 == 0:
            raise InvalidGraphError("dumbbell cycles must both be odd")
        if cycle_a.vertex_mask & cycle_b.vertex_mask:
            raise InvalidGraphError("dumbbell cycles must be vertex-disjoint")
        if len(path) < 2 or len(path) % 2:
            raise InvalidGraphError("connecting path must have odd edge count >= 1")
        if path[0] not in cycle_a.vertices or path[-1] not in cycle_b.vertices:
            raise InvalidGraphError("path endpoints must lie on the cycles")
        interior = set(path[1:-1])
        if len(interior) != len(path) - 2:
            raise InvalidGraphError("path vertices must be distinct")
        if interior & (set(cycle_a.vertices) | set(cycle_b.vertices)):
            raise InvalidGraphError("path interior must avoid both cycles")
        for x, y in zip(path, path[1:]):
            if not host.has_edge(x, y):
                raise InvalidGraphError(f"path edge ({x},{y}) missing from host")
        allowed = set(cycle_a.edge_set) | set(cycle_b.edge_set)
        allowed |= {normalize_edge(x, y) for x, y in zip(path, path[1:])}
        vertices = set(cycle_a.vertices) | set(cycle_b.vertices) | set(path)
        covered: set[int] = set()
        for a, b in pm:
            if (a, b) not in allowed:
                raise InvalidGraphError(f"matching edge ({a},{b}) not on the dumbbell")
            if a in covered or b in covered:
                raise InvalidGraphError("matching edges overlap")
            covered.update((a, b))
        if covered != vertices:
            raise InvalidGraphError("matching does not cover the dumbbell exactly")
        object.__setattr__(self, "cycle_a", cycle_a)
        object.__setattr__(self, "cycle_b", cycle_b)
        object.__setattr__(self, "path", path)
        object.__setattr__(self, "pm", pm)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.cycle_a.vertices) | set(self.cycle_b.vertices) | set(self.path)))


def _alternating_reach(g: Graph, root: int, comp_mask: int, partner: dict[int, int]) -> list[int]:
    """Greedy maximal alternating path from root inside its bridge component.

    Leaves root along a non-matching edge, then alternates; at free steps the
    smallest unvisited neighbor is taken.  Ends on a matching edge.
    """
    path = [root]
    visited = 1 << root
    current = root
    while True:
        # non-matching step: smallest unvisited neighbor in the component
        nxt = None
        for u in _iter_bits(g.adj[current] & comp_mask & ~visited):
            if u != partner.get(current):
                nxt = u
                break
        if nxt is None:
            return path
        path.append(nxt)
        visited |= 1 << nxt
        mate = partner[nxt]
        if visited & (1 << mate):
            raise InternalConsistencyError("alternating path folded onto itself")
        path.append(mate)
        visited |= 1 << mate
        current = mate


def _close_odd_cycle(g: Graph, path: list[int]) -> int:
    """Index j of the earliest path vertex adjacent to the terminal, giving an odd cycle."""
    z = path[-1]
    for j in range(len(path) - 2):
        if g.has_edge(z, path[j]):
            if (len(path) - 1 - j) % 2:
                raise InternalConsistencyError(
                    "even alternating cycle in a unique-matching graph"
                )
            return j
    raise InternalConsistencyError("terminal vertex has no back edge")


def _dumbbell_from_proof(g: Graph, m: Matching) -> OddDumbbell:
    partner = {}
    for a, b in m.edges:
        partner[a] = b
        partner[b] = a
    comp0 = g.component_masks()[0]
    sub_bridges = [e for e in bridges(g) if (1 << e[0]) & comp0]
    matched = sorted(set(sub_bridges) & set(m.edges))
    if not matched:
        raise InternalConsistencyError("no matched bridge found")
    u, v = matched[0]
    # split the component at the bridge
    comp_u = _component_without_edge(g, u, (u, v))
    comp_v = _component_without_edge(g, v, (u, v))
    path_u = _alternating_reach(g, u, comp_u, partner)
    path_v = _alternating_reach(g, v, comp_v, partner)
    ju = _close_odd_cycle(g, path_u)
    jv = _close_odd_cycle(g, path_v)
    cycle_a = Cycle(g, path_u[ju:])
    cycle_b = Cycle(g, path_v[jv:])
    connector = list(reversed(path_u[: ju + 1])) + path_v[: jv + 1]
    dumbbell_vertices = set(cycle_a.vertices) | set(cycle_b.vertices) | set(connector)
    pm = [e for e in m.edges if e[0] in dumbbell_vertices and e[1] in dumbbell_vertices]
    return OddDumbbell(cycle_a, cycle_b, tuple(connector), pm)


def _component_without_edge(g: Graph, start: int, gone: Edge) -> int:
    gone = normalize_edge(*gone)
    comp = 1 << start
    frontier = 1 << start
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            reach = g.adj[v]
            if v == gone[0]:
                reach &= ~(1 << gone[1])
            elif v == gone[1]:
                reach &= ~(1 << gone[0])
            nxt |= reach
        frontier = nxt & ~comp
        comp |= frontier
    return comp


def _dumbbell_exhaustive(g: Graph, m: Matching, budget: ResourceBudget) -> OddDumbbell:
    """Fallback: scan odd cycle pairs and alternating connectors directly."""
    m_set = set(m.edges)
    partner = {}
    for a, b in m.edges:
        partner[a] = b
        partner[b] = a
    candidates = []
    for verts in simple_cycles_raw(g, budget, parity=1):
        cyc = Cycle(g, verts)
        covered: set[int] = set()
        for e in cyc.edge_set:
            if e in m_set:
                covered.update(e)
        free = set(verts) - covered
        if len(free) == 1:
            candidates.append((cyc, free.pop()))
    for (ca, xa), (cb, xb) in itertools.combinations(candidates, 2):
        if ca.vertex_mask & cb.vertex_mask:
            continue
        blocked = (ca.vertex_mask | cb.vertex_mask) & ~(1 << xa) & ~(1 << xb)
        connector = _alternating_connector(g, xa, xb, partner, blocked)
        if connector is not None:
            dumbbell_vertices = set(ca.vertices) | set(cb.vertices) | set(connector)
            pm = [e for e in m.edges if e[0] in dumbbell_vertices and e[1] in dumbbell_vertices]
            return OddDumbbell(ca, cb, tuple(connector), pm)
    raise InternalConsistencyError("no odd dumbbell found by exhaustive search")


def _alternating_connector(
    g: Graph, xa: int, xb: int, partner: dict[int, int], blocked: int
) -> list[int] | None:
    """Matching-alternating path xa..xb starting and ending with matched edges."""

    def dfs(v: int, visited: int, need_matched: bool, path: list[int]):
        if need_matched:
            u = partner[v]
            if visited & (1 << u) or blocked & (1 << u) or not g.has_edge(v, u):
                return None
            path.append(u)
            if u == xb:
                return path
            found = dfs(u, visited | (1 << u), False, path)
            if found:
                return found
            path.pop()
            return None
        for u in _iter_bits(g.adj[v] & ~visited & ~blocked):
            if u == partner[v]:
                continue
            path.append(u)
            found = dfs(u, visited | (1 << u), True, path)
            if found:
                return found
            path.pop()
        return None

    return dfs(xa, 1 << xa, True, [xa])


def find_odd_dumbbell(g: Graph, budget: ResourceBudget = DEFAULT_BUDGET) -> OddDumbbell:
    """An odd dumbbell inside a pendant-free graph with a unique perfect matching.

    Constructed from the matched bridge and two maximal alternating paths;
    if that ever failed validation an exhaustive search would take over.
    """
    if g.n == 0:
        raise InvalidGraphError("the empty graph contains no odd dumbbell")
    m = unique_perfect_matching(g)
    if any(g.degree(v) < 2 for v in range(g.n)):
        raise PendantVertexError("graph must have minimum degree >= 2")
    try:
        return _dumbbell_from_proof(g, m)
    except (InternalConsistencyError, InvalidGraphError):
        return _dumbbell_exhaustive(g, m, budget)


def in_class_g(
    g: Graph, budget: ResourceBudget = DEFAULT_BUDGET
) -> tuple[bool, tuple[Cycle, Cycle] | None]:
    """No two disjoint odd cycles whose joint removal leaves a matchable graph.

    On failure the witness pair is the first in (total length, canonical
    form) order; an empty remainder counts as matchable.
    """
    if not has_perfect_matching(g):
        raise NoPerfectMatchingError("graph has no perfect matching")
    odd = simple_cycles_raw(g, budget, parity=1)
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for verts in odd:
        by_len.setdefault(len(verts), []).append(verts)
    lengths = sorted(by_len)
    full = g.full_vertex_mask

    def mask_of(verts):
        m = 0
        for v in verts:
            m |= 1 << v
        return m

    for total in range(6, g.n + 1, 2):
        for la in lengths:
            lb = total - la
            if lb < la or lb not in by_len:
                continue
            pool_a = by_len[la]
            pool_b = by_len[lb]
            pairs = (
                itertools.combinations(pool_a, 2)
                if la == lb
                else itertools.product(pool_a, pool_b)
            )
            for ta, tb in pairs:
                ma, mb = mask_of(ta), mask_of(tb)
                if ma & mb:
                    continue
                if _has_pm_on(g, full & ~ma & ~mb):
                    return False, (Cycle(g, ta), Cycle(g, tb))
    return True, None


def is_matching_covered(g: Graph) -> bool:
    """Connected and every edge lies in some perfect matching."""
    if not g.is_connected():
        return False
    if not has_perfect_matching(g):
        return False
    full = g.full_vertex_mask
    return all(
        _has_pm_on(g, full & ~(1 << a) & ~(1 << b)) for a, b in g.edges
    )


@dataclass(frozen=True)
class CutReport:
    shore: tuple[int, ...]
    cut_edges: tuple[Edge, ...]
    is_tight: bool
    is_separating: bool
    is_trivial: bool


def _shore_mask(g: Graph, shore) -> int:
    mask = 0
    for v in shore:
        if v < 0 or v >= g.n:
            raise InvalidGraphError(f"shore vertex {v} out of range")
        mask |= 1 << v
    return mask


def _cut_edges(g: Graph, mask: int) -> tuple[Edge, ...]:
    return tuple(
        e for e in g.edges if bool(mask >> e[0] & 1) != bool(mask >> e[1] & 1)
    )


def _contract_shore(g: Graph, keep_mask: int) -> Graph:
    """Shrink everything outside keep_mask to one new vertex."""
    kept = sorted(_iter_bits(keep_mask))
    label = {old: i for i, old in enumerate(kept)}
    hub = len(kept)
    edges = set()
    for a, b in g.edges:
        ina, inb = a in label, b in label
        if ina and inb:
            edges.add((label[a], label[b]))
        elif ina:
            edges.add((label[a], hub))
        elif inb:
            edges.add((label[b], hub))
    return Graph(hub + 1, edges)


def _is_tight(mask: int, pms: list[Matching]) -> bool:
    for m in pms:
        crossings = sum(
            1 for a, b in m.edges if bool(mask >> a & 1) != bool(mask >> b & 1)
        )
        if crossings != 1:
            return False
    return True


def classify_cut(g: Graph, shore, budget: ResourceBudget = DEFAULT_BUDGET) -> CutReport:
    """Tight / separating / trivial classification of the cut at an odd shore."""
    if not is_matching_covered(g):
        raise NotMatchingCoveredError("cut classification needs a matching covered graph")
    mask = _shore_mask(g, shore)
    size = mask.bit_count()
    if size % 2 == 0:
        raise EvenShoreError("shore must have odd cardinality")
    if size == 0 or size == g.n:
        raise InvalidGraphError("shore must be a proper non-empty subset")
    pms = enumerate_perfect_matchings(g, budget)
    tight = _is_tight(mask, pms)
    separating = is_matching_covered(_contract_shore(g, mask)) and is_matching_covered(
        _contract_shore(g, g.full_vertex_mask & ~mask)
    )
    if tight and not separating:
        raise InternalConsistencyError("tight cut failed to be separating")
    return CutReport(
        shore=tuple(sorted(_iter_bits(mask))),
        cut_edges=_cut_edges(g, mask),
        is_tight=tight,
        is_separating=separating,
        is_trivial=size == 1 or size == g.n - 1,
    )


def _odd_shores_with_zero(n: int):
    """Odd shores containing vertex 0, by (size, lexicographic) order."""
    for size in range(1, n, 2):
        for rest in itertools.combinations(range(1, n), size - 1):
            mask = 1
            for v in rest:
                mask |= 1 << v
            yield mask


def is_brick(g: Graph, budget: ResourceBudget = DEFAULT_BUDGET) -> bool:
    """Non-bipartite, matching covered, and every tight cut is trivial.

    The equivalent 3-connected-plus-bicritical test runs alongside; any
    disagreement raises, since the two must coincide.
    """
    if g.n > SHORE_ENUMERATION_CAP:
        raise SizeLimitError(
            f"odd-shore enumeration capped at n <= {SHORE_ENUMERATION_CAP}",
            SHORE_ENUMERATION_CAP,
        )
    primary = not g.is_bipartite() and is_matching_covered(g)
    if primary:
        pms = enumerate_perfect_matchings(g, budget)
        for mask in _odd_shores_with_zero(g.n):
            size = mask.bit_count()
            if size in (1, g.n - 1):
                continue
            if _is_tight(mask, pms):
                primary = False
                break
    oracle = _three_connected(g) and _bicritical(g)
    if primary != oracle:
        raise InternalConsistencyError(
            "tight-cut definition and 3-connected-bicritical test disagree"
        )
    return primary


def _three_connected(g: Graph) -> bool:
    if g.n < 4:
        return False
    full = g.full_vertex_mask
    for cut in itertools.chain(
        itertools.combinations(range(g.n), 1), itertools.combinations(range(g.n), 2)
    ):
        mask = full
        for v in cut:
            mask &= ~(1 << v)
        if not _connected_on(g, mask):
            return False
    return g.is_connected()


def _connected_on(g: Graph, mask: int) -> bool:
    if mask == 0:
        return True
    start = mask & -mask
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp == mask


def _bicritical(g: Graph) -> bool:
    full = g.full_vertex_mask
    return all(
        _has_pm_on(g, full & ~(1 << u) & ~(1 << v))
        for u, v in itertools.combinations(range(g.n), 2)
    )


def is_solid(g: Graph, budget: ResourceBudget = DEFAULT_BUDGET) -> bool:
    """Every separating cut is tight (scanned over all odd shores)."""
    if g.n > SHORE_ENUMERATION_CAP:
        raise SizeLimitError(
            f"odd-shore enumeration capped at n <= {SHORE_ENUMERATION_CAP}",
            SHORE_ENUMERATION_CAP,
        )
    if not is_matching_covered(g):
        raise NotMatchingCoveredError("solidity is defined for matching covered graphs")
    pms = enumerate_perfect_matchings(g, budget)
    full = g.full_vertex_mask
    for mask in _odd_shores_with_zero(g.n):
        if _is_tight(mask, pms):
            continue
        if is_matching_covered(_contract_shore(g, mask)) and is_matching_covered(
            _contract_shore(g, full & ~mask)
        ):
            return False
    return True
