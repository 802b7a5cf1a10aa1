"""Graph family generators, graph6 and edge-list I/O, small-graph corpus streams.

Family labelings (all deterministic):

* ``complete_bipartite`` n: sides u_1..u_n -> 0..n-1 and v_1..v_n -> n..2n-1.
* ``complete_bipartite_minus_edge`` n: as above with the edge (u_1, v_1)
  deleted; every single-edge deletion gives an isomorphic graph.
* ``complete`` m (even): all pairs on 0..m-1.
* ``prism_chain`` k: prism i (1-based) occupies 6(i-1)..6(i-1)+5 with
  triangles on offsets {0,1,2} and {3,4,5} plus the three rungs; consecutive
  prisms are joined at offsets 0 and 3.
* ``odd_dumbbell`` p,q,l: cycle 0..p-1, cycle p..p+q-1, and a connecting
  path of l edges from vertex 0 to vertex p through p+q..p+q+l-2.
* ``cycle`` n / ``path`` n: the obvious labelings.
* ``half_graph`` n: sides as in complete_bipartite, edges u_i v_j for i <= j;
  the extremal bipartite graph with a unique perfect matching.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    InvalidFamilyParamsError,
    MalformedGraph6Error,
    SizeLimitError,
)
from .graph import Graph, has_perfect_matching

FAMILY_NAMES = (
    "complete_bipartite",
    "complete_bipartite_minus_edge",
    "complete",
    "prism_chain",
    "odd_dumbbell",
    "cycle",
    "path",
    "half_graph",
)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...]


def parse_family_spec(text: str) -> FamilySpec:
    """Parse "name:p1,p2,..." into a FamilySpec."""
    name, sep, rest = text.partition(":")
    if name not in FAMILY_NAMES:
        raise InvalidFamilyParamsError(f"unknown family {name!r}")
    if not sep or not rest:
        raise InvalidFamilyParamsError(f"family {name!r} needs parameters, e.g. {name}:3")
    try:
        params = tuple(int(p) for p in rest.split(","))
    except ValueError:
        raise InvalidFamilyParamsError(f"non-integer parameter in {text!r}") from None
    return FamilySpec(name, params)


def _need(condition: bool, message: str):
    if not condition:
        raise InvalidFamilyParamsError(message)


def generate(spec: FamilySpec) -> Graph:
    """Build the labeled graph for a family spec; identical spec, identical graph."""
    name, params = spec.name, tuple(spec.params)
    if name == "complete_bipartite":
        _need(len(params) == 1 and params[0] >= 1, "complete_bipartite needs n >= 1")
        n = params[0]
        return Graph(2 * n, ((i, n + j) for i in range(n) for j in range(n)))
    if name == "complete_bipartite_minus_edge":
        _need(len(params) == 1 and params[0] >= 2, "complete_bipartite_minus_edge needs n >= 2")
        n = params[0]
        edges = [(i, n + j) for i in range(n) for j in range(n) if (i, j) != (0, 0)]
        return Graph(2 * n, edges)
    if name == "complete":
        _need(
            len(params) == 1 and params[0] >= 2 and params[0] % 2 == 0,
            "complete needs an even order >= 2",
        )
        m = params[0]
        return Graph(m, itertools.combinations(range(m), 2))
    if name == "prism_chain":
        _need(len(params) == 1 and params[0] >= 1, "prism_chain needs k >= 1")
        k = params[0]
        edges = []
        for i in range(k):
            base = 6 * i
            edges += [
                (base, base + 1), (base, base + 2), (base + 1, base + 2),
                (base + 3, base + 4), (base + 3, base + 5), (base + 4, base + 5),
                (base, base + 3), (base + 1, base + 4), (base + 2, base + 5),
            ]
            if i + 1 < k:
                edges += [(base, base + 6), (base + 3, base + 9)]
        return Graph(6 * k, edges)
    if name == "odd_dumbbell":
        _need(len(params) == 3, "odd_dumbbell needs p,q,l")
        p, q, length = params
        _need(p >= 3 and p % 2 == 1, "cycle length p must be odd and >= 3")
        _need(q >= 3 and q % 2 == 1, "cycle length q must be odd and >= 3")
        _need(length >= 1 and length % 2 == 1, "path length l must be odd and >= 1")
        edges = [(i, (i + 1) % p) for i in range(p)]
        edges += [(p + i, p + (i + 1) % q) for i in range(q)]
        chain = [0] + list(range(p + q, p + q + length - 1)) + [p]
        edges += list(zip(chain, chain[1:]))
        return Graph(p + q + length - 1, edges)
    if name == "cycle":
        _need(len(params) == 1 and params[0] >= 3, "cycle needs n >= 3")
        n = params[0]
        return Graph(n, ((i, (i + 1) % n) for i in range(n)))
    if name == "path":
        _need(len(params) == 1 and params[0] >= 1, "path needs n >= 1")
        n = params[0]
        return Graph(n, ((i, i + 1) for i in range(n - 1)))
    if name == "half_graph":
        _need(len(params) == 1 and params[0] >= 1, "half_graph needs n >= 1")
        n = params[0]
        return Graph(2 * n, ((i, n + j) for i in range(n) for j in range(i, n)))
    raise InvalidFamilyParamsError(f"unknown family {name!r}")


# ------------------------------------------------------------------ graph6

_HEADER = ">>graph6<<"


def write_graph6(g: Graph) -> str:
    """Encode in the standard graph6 format (no header, no newline)."""
    n = g.n
    if n <= 62:
        prefix = [n + 63]
    elif n <= 258047:
        prefix = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        prefix = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        body.append(value + 63)
    return "".join(chr(c) for c in prefix + body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; ">>graph6<<" headers are accepted."""
    s = text.strip()
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
        base = len(_HEADER)

    def fail(msg: str, pos: int):
        raise MalformedGraph6Error(msg, base + pos)

    if not s:
        fail("empty graph6 string", 0)
    codes = []
    for i, ch in enumerate(s):
        c = ord(ch)
        if c < 63 or c > 126:
            fail(f"byte {c} outside graph6 range", i)
        codes.append(c - 63)
    pos = 0
    if codes[0] < 63:
        n = codes[0]
        pos = 1
    else:
        if len(codes) >= 2 and codes[1] == 63:
            if len(codes) < 8:
                fail("truncated 8-byte vertex count", len(codes))
            n = 0
            for c in codes[2:8]:
                n = n << 6 | c
            pos = 8
        else:
            if len(codes) < 4:
                fail("truncated 4-byte vertex count", len(codes))
            n = 0
            for c in codes[1:4]:
                n = n << 6 | c
            pos = 4
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(codes) - pos != nbytes:
        fail(
            f"expected {nbytes} adjacency bytes for n={n}, found {len(codes) - pos}",
            min(pos + nbytes, len(codes)),
        )
    bits = []
    for c in codes[pos:]:
        for s6 in (5, 4, 3, 2, 1, 0):
            bits.append(c >> s6 & 1)
    for k in range(nbits, len(bits)):
        if bits[k]:
            fail("nonzero padding bits", pos + k // 6)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


# --------------------------------------------------------------- edge list


def write_edge_list(g: Graph) -> str:
    """Plain text: first line "n m", then one "a b" line per edge (0-based)."""
    lines = [f"{g.n} {g.e}"]
    lines += [f"{a} {b}" for a, b in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise MalformedGraph6Error("edge list must start with 'n m'", 0)
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError:
        raise MalformedGraph6Error("non-integer token in edge list", 0) from None
    if len(edges) != m:
        raise MalformedGraph6Error(f"edge list promises {m} edges, has {len(edges)}", 0)
    return Graph(n, edges)


# ------------------------------------------------------------- corpus work

ISO_DEDUP_CAP = 7
LABELED_CAP = 8


@functools.lru_cache(maxsize=8)
def _pair_permutation_tables(n: int) -> tuple[tuple[int, ...], ...]:
    """For each vertex permutation, how pair indices map to pair indices."""
    pairs = list(itertools.combinations(range(n), 2))
    pidx = {p: i for i, p in enumerate(pairs)}
    tables = []
    for perm in itertools.permutations(range(n)):
        table = []
        for a, b in pairs:
            x, y = perm[a], perm[b]
            table.append(pidx[(x, y) if x < y else (y, x)])
        tables.append(tuple(table))
    return tuple(tables)


def iso_canonical_key(g: Graph) -> tuple[int, int]:
    """Smallest edge bitmask over all vertex permutations (brute force, n <= 7)."""
    if g.n > ISO_DEDUP_CAP:
        raise SizeLimitError(
            f"isomorphism dedup capped at n <= {ISO_DEDUP_CAP}", ISO_DEDUP_CAP
        )
    pairs = list(itertools.combinations(range(g.n), 2))
    pidx = {p: i for i, p in enumerate(pairs)}
    bit_indices = [pidx[e] for e in g.edges]
    best = None
    for table in _pair_permutation_tables(g.n):
        mask = 0
        for i in bit_indices:
            mask |= 1 << table[i]
        if best is not None and mask >= best:
            continue
        best = mask
    return (g.n, best if best is not None else 0)


def enumerate_corpus(
    n_max: int,
    require_pm: bool = False,
    require_connected: bool = False,
    dedup_iso: bool = False,
) -> Iterator[Graph]:
    """Stream all labeled graphs on 1..n_max vertices passing the filters.

    Order: vertex count ascending, then edge subsets as binary counters over
    the sorted pair list.  With dedup_iso, the first representative of each
    isomorphism class is yielded.  Caps: n_max <= 7 with dedup, <= 8 without.
    """
    cap = ISO_DEDUP_CAP if dedup_iso else LABELED_CAP
    if n_max > cap:
        raise SizeLimitError(f"corpus enumeration capped at n_max <= {cap}", cap)
    seen: set[tuple[int, int]] = set()
    for n in range(1, n_max + 1):
        if require_pm and n % 2:
            continue
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            g = Graph(n, (pairs[i] for i in range(len(pairs)) if bits >> i & 1))
            if require_connected and not g.is_connected():
                continue
            if require_pm and not has_perfect_matching(g):
                continue
            if dedup_iso:
                key = iso_canonical_key(g)
                if key in seen:
                    continue
                seen.add(key)
            yield g


# ------------------------------------------------------------ random draws


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi draw G(n, p) using the supplied generator."""
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_connected_pm_graph(
    n: int,
    rng: random.Random,
    p_low: float = 0.25,
    p_high: float = 0.65,
) -> Graph:
    """Rejection-sample a connected graph on n vertices with a perfect matching."""
    while True:
        g = random_graph(n, rng.uniform(p_low, p_high), rng)
        if g.is_connected() and has_perfect_matching(g):
            return g


def random_bipartite_unique_pm_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Random bipartite graph on n+n vertices with exactly one perfect matching.

    Drawn as a random subgraph of the half graph that keeps the diagonal
    matching (which forces uniqueness), then relabeled at random.
    """
    edges = [(i, n + i) for i in range(n)]
    edges += [
        (i, n + j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    perm = list(range(2 * n))
    rng.shuffle(perm)
    return Graph(2 * n, edges).relabel(perm)
