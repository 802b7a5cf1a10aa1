"""Graph substrate: canonical small graphs, perfect matchings, cycle enumeration.

Vertices are dense integers 0..n-1 and edges are sorted pairs; everything is
immutable and hashable, so values can be shared freely between workers.
Enumeration order is deterministic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    BudgetExceededError,
    InvalidGraphError,
    InvalidMatchingError,
    NotPerfectMatchingError,
)

Edge = tuple[int, int]


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def normalize_edge(a: int, b: int) -> Edge:
    """Return the edge as a sorted pair; self-loops are rejected."""
    if a == b:
        raise InvalidGraphError(f"self-loop at vertex {a}")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with a canonical edge tuple.

    The constructor sorts and deduplicates the edge list, so two graphs
    compare equal iff they are the same labeled graph.
    """

    n: int
    edges: tuple[Edge, ...]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InvalidGraphError("vertex count must be non-negative")
        canon = sorted({normalize_edge(a, b) for a, b in edges})
        for a, b in canon:
            if a < 0 or b >= n:
                raise InvalidGraphError(f"edge ({a},{b}) out of range for n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canon))

    def __reduce__(self):
        # keep pickles small: drop cached adjacency/memo state
        return (Graph, (self.n, self.edges))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Adjacency as one bitmask per vertex."""
        masks = [0] * self.n
        for a, b in self.edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return tuple(masks)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def full_vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _pm_memo(self) -> dict[int, bool]:
        return {}

    @property
    def e(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_iter_bits(self.adj[v]))

    def has_edge(self, a: int, b: int) -> bool:
        return normalize_edge(a, b) in self.edge_index

    def component_masks(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by smallest member."""
        seen = 0
        out = []
        for s in range(self.n):
            if seen & (1 << s):
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        """True when there is at most one component (vacuously true for n=0)."""
        return len(self.component_masks()) <= 1

    def bipartition(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        """A 2-coloring as (side_u, side_v), or None if an odd cycle exists.

        Per component the side containing its smallest vertex is side_u,
        which makes the partition deterministic.
        """
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for u in _iter_bits(self.adj[v]):
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        stack.append(u)
                    elif color[u] == color[v]:
                        return None
        side_u = tuple(v for v in range(self.n) if color[v] == 0)
        side_v = tuple(v for v in range(self.n) if color[v] == 1)
        return side_u, side_v

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def without_edges(self, drop: Iterable[Sequence[int]]) -> "Graph":
        gone = {normalize_edge(a, b) for a, b in drop}
        return Graph(self.n, (e for e in self.edges if e not in gone))

    def with_edges(self, add: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.n, list(self.edges) + [tuple(e) for e in add])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Apply the permutation v -> perm[v] to all vertices."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidGraphError("relabeling must be a permutation of 0..n-1")
        return Graph(self.n, ((perm[a], perm[b]) for a, b in self.edges))


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of a host graph."""

    host: Graph
    edges: tuple[Edge, ...]

    def __init__(self, host: Graph, edges: Iterable[Sequence[int]]):
        canon = sorted({normalize_edge(a, b) for a, b in edges})
        seen = 0
        for a, b in canon:
            if (a, b) not in host.edge_index:
                raise InvalidMatchingError(f"({a},{b}) is not an edge of the host graph")
            bit = (1 << a) | (1 << b)
            if seen & bit:
                raise InvalidMatchingError(f"edges share a vertex at ({a},{b})")
            seen |= bit
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "edges", tuple(canon))

    @cached_property
    def covered_mask(self) -> int:
        m = 0
        for a, b in self.edges:
            m |= (1 << a) | (1 << b)
        return m

    @property
    def is_perfect(self) -> bool:
        return self.covered_mask == self.host.full_vertex_mask

    def partner(self, v: int) -> int:
        for a, b in self.edges:
            if a == v:
                return b
            if b == v:
                return a
        raise InvalidMatchingError(f"vertex {v} is not covered")


def _canonical_cycle(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect so the smallest vertex comes first, then its smaller neighbor."""
    verts = list(vertices)
    k = verts.index(min(verts))
    verts = verts[k:] + verts[:k]
    if verts[-1] < verts[1]:
        verts = [verts[0]] + verts[:0:-1]
    return tuple(verts)


@dataclass(frozen=True)
class Cycle:
    """A simple cycle of a host graph in canonical rotation/reflection."""

    host: Graph
    vertices: tuple[int, ...]

    def __init__(self, host: Graph, vertices: Sequence[int]):
        verts = list(vertices)
        if len(verts) < 3:
            raise InvalidGraphError("a cycle needs at least 3 vertices")
        if len(set(verts)) != len(verts):
            raise InvalidGraphError("cycle vertices must be distinct")
        for i, v in enumerate(verts):
            u = verts[(i + 1) % len(verts)]
            if not host.has_edge(v, u):
                raise InvalidGraphError(f"({v},{u}) is not an edge of the host graph")
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "vertices", _canonical_cycle(verts))

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def edge_set(self) -> tuple[Edge, ...]:
        verts = self.vertices
        pairs = {
            normalize_edge(verts[i], verts[(i + 1) % len(verts)])
            for i in range(len(verts))
        }
        return tuple(sorted(pairs))

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m


@dataclass(frozen=True)
class CycleFamily:
    """A duplicate-free collection of cycles over a fixed edge universe."""

    cycles: tuple[Cycle, ...]
    universe: tuple[Edge, ...]

    def __init__(self, cycles: Iterable[Cycle], universe: Iterable[Sequence[int]]):
        cyc = tuple(cycles)
        if len({c.vertices for c in cyc}) != len(cyc):
            raise InvalidGraphError("duplicate cycles in family")
        object.__setattr__(self, "cycles", cyc)
        object.__setattr__(
            self, "universe", tuple(sorted(normalize_edge(a, b) for a, b in universe))
        )

    def __len__(self) -> int:
        return len(self.cycles)


@dataclass(frozen=True)
class ResourceBudget:
    """Hard caps on enumeration sizes; exceeding one raises, never truncates."""

    max_matchings: int = 100_000
    max_cycles: int = 1_000_000

    def __post_init__(self):
        if self.max_matchings <= 0 or self.max_cycles <= 0:
            raise InvalidGraphError("resource budgets must be positive")


DEFAULT_BUDGET = ResourceBudget()


@dataclass(frozen=True)
class GraphInvariants:
    n: int
    e: int
    cyclomatic: int
    connected: bool
    bipartite: bool
    delta_min: int
    delta_max: int


def basic_invariants(g: Graph) -> GraphInvariants:
    """Order, size, cyclomatic number, connectivity, bipartiteness and degree extremes.

    The cyclomatic number is e - n + (number of components), so it is the
    usual e - n + 1 on connected graphs.
    """
    comps = g.component_masks()
    degs = [g.degree(v) for v in range(g.n)]
    return GraphInvariants(
        n=g.n,
        e=g.e,
        cyclomatic=g.e - g.n + len(comps),
        connected=len(comps) <= 1,
        bipartite=g.is_bipartite(),
        delta_min=min(degs) if degs else 0,
        delta_max=max(degs) if degs else 0,
    )


def _has_pm_on(g: Graph, mask: int) -> bool:
    """Whether the induced subgraph on the vertex bitmask has a perfect matching."""
    if mask == 0:
        return True
    if mask.bit_count() % 2:
        return False
    memo = g._pm_memo
    hit = memo.get(mask)
    if hit is not None:
        return hit
    v = (mask & -mask).bit_length() - 1
    rest = mask & ~(1 << v)
    result = False
    for u in _iter_bits(g.adj[v] & rest):
        if _has_pm_on(g, rest & ~(1 << u)):
            result = True
            break
    memo[mask] = result
    return result


def has_perfect_matching(g: Graph) -> bool:
    return _has_pm_on(g, g.full_vertex_mask)


def enumerate_perfect_matchings(
    g: Graph, budget: ResourceBudget = DEFAULT_BUDGET
) -> list[Matching]:
    """All perfect matchings, in lexicographic order of their sorted edge tuples.

    The empty graph has exactly one (empty) perfect matching.  Raises
    BudgetExceededError as soon as the count would pass max_matchings.
    """
    if g.n % 2:
        return []
    adj = g.adj
    out: list[tuple[Edge, ...]] = []
    acc: list[Edge] = []

    def rec(mask: int):
        if mask == 0:
            if len(out) >= budget.max_matchings:
                raise BudgetExceededError("max_matchings", budget.max_matchings, len(out))
            out.append(tuple(acc))
            return
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        for u in _iter_bits(adj[v] & rest):
            acc.append((v, u))
            rec(rest & ~(1 << u))
            acc.pop()

    rec(g.full_vertex_mask)
    return [Matching(g, edges) for edges in out]


def count_perfect_matchings(g: Graph, budget: ResourceBudget | None = None) -> int:
    """Number of perfect matchings (the paper-style count usually written as Phi)."""
    if g.n % 2:
        return 0
    adj = g.adj
    limit = budget.max_matchings if budget is not None else None
    count = 0

    def rec(mask: int):
        nonlocal count
        if mask == 0:
            count += 1
            if limit is not None and count > limit:
                raise BudgetExceededError("max_matchings", limit, limit)
            return
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        for u in _iter_bits(adj[v] & rest):
            rec(rest & ~(1 << u))

    rec(g.full_vertex_mask)
    return count


def simple_cycles_raw(
    g: Graph,
    budget: ResourceBudget = DEFAULT_BUDGET,
    parity: int | None = None,
) -> list[tuple[int, ...]]:
    """All simple cycles as canonical vertex tuples, sorted by (length, vertices).

    parity=0 keeps even cycles only, parity=1 odd ones.  Each recorded cycle
    counts against max_cycles.
    """
    adj = g.adj
    out: list[tuple[int, ...]] = []
    path: list[int] = []

    def record():
        if parity is not None and len(path) % 2 != parity:
            return
        if len(out) >= budget.max_cycles:
            raise BudgetExceededError("max_cycles", budget.max_cycles, len(out))
        out.append(tuple(path))

    def dfs(v: int, visited: int, s: int):
        for u in _iter_bits(adj[v]):
            if u == s and len(path) >= 3 and path[1] < path[-1]:
                record()
            elif u > s and not visited & (1 << u):
                path.append(u)
                dfs(u, visited | (1 << u), s)
                path.pop()

    for s in range(g.n):
        path[:] = [s]
        dfs(s, 1 << s, s)
    out.sort(key=lambda t: (len(t), t))
    return out


def alternating_cycles(
    g: Graph, m: Matching, budget: ResourceBudget = DEFAULT_BUDGET
) -> CycleFamily:
    """All even cycles whose edges alternate inside and outside the matching m.

    m must be a perfect matching of g.
    """
    if m.host != g or not m.is_perfect:
        raise NotPerfectMatchingError("m is not a perfect matching of g")
    partner = [-1] * g.n
    for a, b in m.edges:
        partner[a] = b
        partner[b] = a
    adj = g.adj
    found: list[tuple[int, ...]] = []
    path: list[int] = []

    def dfs_non_matching(v: int, visited: int, s: int):
        # v was just entered along its matching edge; leave along a non-matching one
        for u in _iter_bits(adj[v]):
            if u == partner[v]:
                continue
            if u == s:
                if len(found) >= budget.max_cycles:
                    raise BudgetExceededError("max_cycles", budget.max_cycles, len(found))
                found.append(_canonical_cycle(path))
            elif u > s and not visited & (1 << u):
                w = partner[u]
                if w != s and w > s and not visited & (1 << w):
                    path.append(u)
                    path.append(w)
                    dfs_non_matching(w, visited | (1 << u) | (1 << w), s)
                    path.pop()
                    path.pop()

    for s in range(g.n):
        p = partner[s]
        if p < s:
            continue
        path[:] = [s, p]
        dfs_non_matching(p, (1 << s) | (1 << p), s)
    found.sort(key=lambda t: (len(t), t))
    return CycleFamily((Cycle(g, t) for t in found), g.edges)


def nice_cycles(g: Graph, budget: ResourceBudget = DEFAULT_BUDGET) -> CycleFamily:
    """All even cycles whose vertex deletion leaves a graph with a perfect matching.

    An empty remainder counts as having one, so spanning even cycles of a
    graph with two matchings are nice.
    """
    full = g.full_vertex_mask
    keep = []
    for verts in simple_cycles_raw(g, budget, parity=0):
        cmask = 0
        for v in verts:
            cmask |= 1 << v
        if _has_pm_on(g, full & ~cmask):
            keep.append(verts)
    return CycleFamily((Cycle(g, t) for t in keep), g.edges)
