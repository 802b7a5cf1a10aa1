"""Perfect matching polytope tools in exact rational arithmetic.

Membership follows the linear description: non-negativity, unit degree sums,
and a cut sum of at least one across every odd vertex set.  Whether the
polytope coincides with the set of non-negative 1-regular vectors is decided
combinatorially: the only way a non-negative 1-regular vector can escape the
polytope is along a spanning structure of disjoint odd cycles plus a perfect
matching on the rest, so the test searches for such a structure and returns
the half-on-cycles vector as a witness when one exists.  No floating point
is used anywhere in this module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    InvalidGraphError,
    NoPerfectMatchingError,
    SizeLimitError,
)
from .graph import (
    DEFAULT_BUDGET,
    Edge,
    Graph,
    Matching,
    ResourceBudget,
    _has_pm_on,
    _iter_bits,
    has_perfect_matching,
    normalize_edge,
    simple_cycles_raw,
)

ODD_SET_CAP = 16


def format_rational(x: Fraction) -> str:
    """Render as "p/q", or a plain integer string when the denominator is 1."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidGraphError(f"cannot parse rational value {text!r}") from None


@dataclass(frozen=True)
class RationalEdgeVector:
    """One exact rational value per edge of a host graph."""

    host: Graph
    values: tuple[Fraction, ...]

    def __init__(self, host: Graph, values: Sequence[Fraction | int | str]):
        vals = tuple(Fraction(v) for v in values)
        if len(vals) != host.e:
            raise InvalidGraphError(
                f"expected {host.e} values, got {len(vals)}"
            )
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_mapping(
        cls,
        host: Graph,
        mapping: Mapping[Edge, Fraction | int | str],
        default: Fraction | int = 0,
    ) -> "RationalEdgeVector":
        table = {normalize_edge(a, b): Fraction(v) for (a, b), v in mapping.items()}
        for e in table:
            if e not in host.edge_index:
                raise InvalidGraphError(f"{e} is not an edge of the host graph")
        return cls(host, [table.get(e, Fraction(default)) for e in host.edges])

    @classmethod
    def incidence(cls, m: Matching) -> "RationalEdgeVector":
        chosen = set(m.edges)
        return cls(m.host, [Fraction(1 if e in chosen else 0) for e in m.host.edges])

    def value(self, a: int, b: int) -> Fraction:
        return self.values[self.host.edge_index[normalize_edge(a, b)]]

    def edge_sum(self, edges: Iterable[Edge]) -> Fraction:
        idx = self.host.edge_index
        return sum((self.values[idx[e]] for e in edges), Fraction(0))

    def as_strings(self) -> tuple[str, ...]:
        return tuple(format_rational(v) for v in self.values)


def convex_combination(
    matchings: Sequence[Matching], weights: Sequence[Fraction | int | str]
) -> RationalEdgeVector:
    """Weighted average of matching incidence vectors; weights must sum to 1."""
    if not matchings:
        raise InvalidGraphError("need at least one matching")
    host = matchings[0].host
    ws = [Fraction(w) for w in weights]
    if len(ws) != len(matchings) or sum(ws) != 1:
        raise InvalidGraphError("weights must match matchings and sum to 1")
    totals = [Fraction(0)] * host.e
    for m, w in zip(matchings, ws):
        if m.host != host:
            raise InvalidGraphError("matchings live on different hosts")
        for e in m.edges:
            totals[host.edge_index[e]] += w
    return RationalEdgeVector(host, totals)


@dataclass(frozen=True)
class Violation:
    """Which linear constraint failed: an edge, a vertex, or an odd vertex set."""

    kind: str  # "nonnegativity" | "degree" | "odd_set"
    edge: Edge | None = None
    vertex: int | None = None
    odd_set: tuple[int, ...] | None = None
    value: Fraction | None = None


@dataclass(frozen=True)
class MembershipVerdict:
    in_polytope: bool
    violated: Violation | None

    def __post_init__(self):
        if self.in_polytope == (self.violated is not None):
            raise InvalidGraphError("verdict must carry a violation iff it is negative")


def _degree_sums(g: Graph, x: RationalEdgeVector) -> list[Fraction]:
    sums = [Fraction(0)] * g.n
    for e, v in zip(g.edges, x.values):
        sums[e[0]] += v
        sums[e[1]] += v
    return sums


def is_one_regular(g: Graph, x: RationalEdgeVector) -> bool:
    """Every vertex sees edge values summing to exactly one."""
    if x.host != g:
        raise InvalidGraphError("vector belongs to a different graph")
    return all(s == 1 for s in _degree_sums(g, x))


def pm_polytope_membership(g: Graph, x: RationalEdgeVector) -> MembershipVerdict:
    """Exhaustive exact check of the matching polytope constraints.

    Violations are reported in canonical order: non-negativity by edge,
    degree by vertex, odd sets by (size, lexicographic) order.
    """
    if g.n > ODD_SET_CAP:
        raise SizeLimitError(f"odd-set scan capped at n <= {ODD_SET_CAP}", ODD_SET_CAP)
    if x.host != g:
        raise InvalidGraphError("vector belongs to a different graph")
    for e, v in zip(g.edges, x.values):
        if v < 0:
            return MembershipVerdict(False, Violation("nonnegativity", edge=e, value=v))
    for vertex, s in enumerate(_degree_sums(g, x)):
        if s != 1:
            return MembershipVerdict(False, Violation("degree", vertex=vertex, value=s))
    for size in range(1, g.n, 2):
        for subset in itertools.combinations(range(g.n), size):
            inside = 0
            for v in subset:
                inside |= 1 << v
            cut = Fraction(0)
            for e, v in zip(g.edges, x.values):
                if bool(inside >> e[0] & 1) != bool(inside >> e[1] & 1):
                    cut += v
            if cut < 1:
                return MembershipVerdict(
                    False, Violation("odd_set", odd_set=subset, value=cut)
                )
    return MembershipVerdict(True, None)


def _first_pm_on(g: Graph, mask: int) -> list[Edge] | None:
    """Lexicographically first perfect matching of the induced vertex subset."""
    if mask == 0:
        return []
    v = (mask & -mask).bit_length() - 1
    rest = mask & ~(1 << v)
    for u in _iter_bits(g.adj[v] & rest):
        tail = _first_pm_on(g, rest & ~(1 << u))
        if tail is not None:
            return [(v, u)] + tail
    return None


def fpm_equals_pm(
    g: Graph, budget: ResourceBudget = DEFAULT_BUDGET
) -> tuple[bool, RationalEdgeVector | None]:
    """Does the matching polytope contain every non-negative 1-regular vector?

    Searches for vertex-disjoint odd cycles (two or more) whose removal
    leaves a perfectly matchable remainder.  If found, the vector with 1 on
    the remainder matching, 1/2 on the cycles and 0 elsewhere is 1-regular
    and non-negative but violates the odd-set constraint of one cycle, so it
    is returned as the witness; structures are scanned by total cycle length,
    then lexicographically.
    """
    if g.n > ODD_SET_CAP:
        raise SizeLimitError(f"structure search capped at n <= {ODD_SET_CAP}", ODD_SET_CAP)
    if not has_perfect_matching(g):
        raise NoPerfectMatchingError("graph has no perfect matching")
    odd = simple_cycles_raw(g, budget, parity=1)
    masks = []
    for verts in odd:
        m = 0
        for v in verts:
            m |= 1 << v
        masks.append(m)
    full = g.full_vertex_mask

    def search(start: int, remaining: int, used: int) -> list[int] | None:
        for i in range(start, len(odd)):
            length = len(odd[i])
            if length > remaining:
                return None  # cycles are sorted by length
            if masks[i] & used:
                continue
            if length == remaining:
                if _has_pm_on(g, full & ~(used | masks[i])):
                    return [i]
            else:
                tail = search(i + 1, remaining - length, used | masks[i])
                if tail is not None:
                    return [i] + tail
        return None

    for total in range(6, g.n + 1, 2):
        chosen = search(0, total, 0)
        if chosen is None:
            continue
        used = 0
        for i in chosen:
            used |= masks[i]
        pm_edges = _first_pm_on(g, full & ~used)
        half = {}
        for i in chosen:
            verts = odd[i]
            for k in range(len(verts)):
                half[normalize_edge(verts[k], verts[(k + 1) % len(verts)])] = Fraction(1, 2)
        for a, b in pm_edges:
            half[normalize_edge(a, b)] = Fraction(1)
        return False, RationalEdgeVector.from_mapping(g, half)
    return True, None
