"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s`.  The corpus sweeps are the
slow part; the whole module finishes in roughly ten minutes on one core and
uses eight workers where parallelism helps.
"""

from __future__ import annotations

import contextlib
import itertools
import multiprocessing
import random

from matchforce.analysis import GraphAnalysis
from matchforce.cli import _verify_one, main
from matchforce.families import (
    FamilySpec,
    enumerate_corpus,
    generate,
    random_bipartite_unique_pm_graph,
    random_connected_pm_graph,
    random_graph,
    write_graph6,
)
from matchforce.forcing import (
    forcing_summary,
    global_forcing_number,
    global_forcing_via_subgraph,
)
from matchforce.graph import (
    Graph,
    Matching,
    count_perfect_matchings,
    has_perfect_matching,
)
from matchforce.polytope import fpm_equals_pm, is_one_regular, pm_polytope_membership
from matchforce.structure import (
    bipartite_unique_pm_labeling,
    find_odd_dumbbell,
    in_class_g,
    is_brick,
    is_matching_covered,
    is_solid,
    unique_perfect_matching,
)
from matchforce.theorems import FAIL


@contextlib.contextmanager
def criterion(label: str):
    try:
        yield
    except BaseException:
        print(f"\nACCEPTANCE {label}: FAIL", flush=True)
        raise
    print(f"\nACCEPTANCE {label}: PASS", flush=True)


def fam(name: str, *params: int) -> Graph:
    return generate(FamilySpec(name, tuple(params)))


# ------------------------------------------------------------- criterion 1


def test_c1_family_exact_values():
    with criterion("C1 family exact values"):
        cases = [
            (fam("complete", 4), 2, None),
            (fam("complete", 6), 8, 6),
            (fam("complete_bipartite", 3), 4, None),
            (fam("complete_bipartite", 4), 9, None),
            (fam("complete_bipartite_minus_edge", 4), 7, 5),
            (fam("prism_chain", 1), 2, 3),
            (fam("prism_chain", 2), 5, 7),
        ]
        for g, want_gf, want_af in cases:
            s = forcing_summary(g)
            assert s.gf == want_gf, (g.n, g.e, s.gf, want_gf)
            if want_af is not None:
                assert s.af_max == want_af, (g.n, g.e, s.af_max, want_af)


# ------------------------------------------------------------- criterion 2


def _c2_worker(g6: str) -> tuple[str, int, int]:
    from matchforce.families import parse_graph6

    g = parse_graph6(g6)
    return g6, global_forcing_number(g)[0], global_forcing_via_subgraph(g)[0]


def test_c2_subgraph_oracle_equivalence():
    with criterion("C2 hitting-set route equals subgraph route on connected corpus n<=6"):
        payloads = [
            write_graph6(g)
            for g in enumerate_corpus(6, require_pm=True, require_connected=True)
        ]
        with multiprocessing.Pool(8) as pool:
            for g6, via_hitting, via_subgraph in pool.imap_unordered(
                _c2_worker, payloads, chunksize=256
            ):
                assert via_hitting == via_subgraph, (g6, via_hitting, via_subgraph)
        print(f"  agreed on {len(payloads)} connected graphs", flush=True)


# ------------------------------------------------------------- criterion 3

CORPUS_IDS = ("T01", "T02", "T03", "T04", "T05", "T06", "T07", "T08", "T12", "T13", "T15")
RANDOM_IDS = ("T01", "T02", "T03", "T04", "T05", "T08", "T15")


def test_c3_inequality_suite():
    with criterion("C3 inequality suite on corpus n<=6 plus 500 random 8-vertex graphs"):
        budget = (100_000, 1_000_000)
        payloads = [
            (write_graph6(g), CORPUS_IDS, *budget)
            for g in enumerate_corpus(6, require_pm=True)
        ]
        rng = random.Random(20240811)
        randoms = [random_connected_pm_graph(8, rng) for _ in range(500)]
        payloads += [(write_graph6(g), RANDOM_IDS, *budget) for g in randoms]
        failures = []
        applicable = {cid: 0 for cid in CORPUS_IDS}
        with multiprocessing.Pool(8) as pool:
            for payload, outcomes in zip(
                payloads, pool.imap(_verify_one, payloads, chunksize=64)
            ):
                for cid, status, detail in outcomes:
                    if status == FAIL:
                        failures.append((payload[0], cid, detail))
                    if status != "not_applicable":
                        applicable[cid] += 1
        assert not failures, failures[:5]
        for cid in CORPUS_IDS:
            assert applicable[cid] > 0, f"{cid} never applied"
        print(f"  zero counterexamples over {len(payloads)} graphs", flush=True)
        print(f"  applicable counts: {applicable}", flush=True)


# ------------------------------------------------------------- criterion 4


def test_c4_structural_witnesses():
    with criterion("C4 structural witnesses and three-way brick agreement"):
        prism = fam("prism_chain", 1)
        assert is_matching_covered(prism)
        assert is_brick(prism)
        assert not is_solid(prism)
        ok, pair = in_class_g(prism)
        assert not ok and pair is not None
        equal, witness = fpm_equals_pm(prism)
        assert not equal
        assert is_one_regular(prism, witness)
        assert all(v >= 0 for v in witness.values)
        triangle_cut = [e for e in prism.edges if (e[0] < 3) != (e[1] < 3)]
        assert witness.edge_sum(triangle_cut) == 0
        verdict = pm_polytope_membership(prism, witness)
        assert not verdict.in_polytope

        k4 = fam("complete", 4)
        assert is_brick(k4)
        assert is_solid(k4) and in_class_g(k4)[0] and fpm_equals_pm(k4)[0]

        # three-way agreement over sampled bricks on up to 10 vertices
        rng = random.Random(20240812)
        bricks = []
        for rim in (5, 7, 9):  # odd wheels: solid bricks of each size
            hub = rim
            bricks.append(
                Graph(
                    rim + 1,
                    [(i, (i + 1) % rim) for i in range(rim)]
                    + [(i, hub) for i in range(rim)],
                )
            )
        while len(bricks) < 203:
            n = rng.choice([4, 6, 6, 8, 8, 10, 10])
            g = random_graph(n, rng.uniform(0.35, 0.75), rng)
            if is_brick(g):
                bricks.append(g)
        agree = {"solid": 0, "not_solid": 0}
        for g in bricks:
            s = is_solid(g)
            c = in_class_g(g)[0]
            f = fpm_equals_pm(g)[0]
            assert s == c == f, (write_graph6(g), s, c, f)
            agree["solid" if s else "not_solid"] += 1
        print(f"  three-way agreement on {len(bricks)} bricks: {agree}", flush=True)

        # a matching covered graph outside the class with gf >= Af exists
        k6 = fam("complete", 6)
        assert not in_class_g(k6)[0]
        s6 = forcing_summary(k6)
        assert s6.gf >= s6.af_max
        print(
            f"  info: {write_graph6(k6)} lies outside the class with "
            f"gf={s6.gf} >= Af={s6.af_max}",
            flush=True,
        )


# ------------------------------------------------------------- criterion 5


def _single_dumbbell(rng: random.Random) -> Graph:
    while True:
        p = rng.choice([3, 5, 7])
        q = rng.choice([3, 5, 7])
        length = rng.choice([1, 3, 5])
        if p + q + length - 1 <= 14:
            return fam("odd_dumbbell", p, q, length)


def _joined_dumbbells(rng: random.Random) -> Graph:
    a = fam("odd_dumbbell", 3, 3, 1)
    edges = list(a.edges)
    edges += [(u + 6, v + 6) for u, v in a.edges]
    edges.append((rng.randrange(6), 6 + rng.randrange(6)))
    return Graph(12, edges)


def _chorded_dumbbell(rng: random.Random) -> Graph:
    base = _single_dumbbell(rng)
    non_edges = [
        e for e in itertools.combinations(range(base.n), 2) if e not in base.edge_index
    ]
    rng.shuffle(non_edges)
    for e in non_edges:
        candidate = base.with_edges([e])
        if count_perfect_matchings(candidate) == 1:
            return candidate
    return base


def test_c5_unique_matching_structure():
    with criterion("C5 unique-matching structure: dumbbells, labeling, size bounds"):
        rng = random.Random(20240813)
        builders = [_single_dumbbell, _joined_dumbbells, _chorded_dumbbell]
        instances = [builders[i % 3](rng) for i in range(100)]
        for g in instances:
            assert g.n <= 14
            assert min(g.degree(v) for v in range(g.n)) >= 2
            m = unique_perfect_matching(g)
            d = find_odd_dumbbell(g)  # validation runs inside the constructor
            assert set(d.pm) <= set(m.edges)
        print(f"  {len(instances)} dumbbell compositions validated", flush=True)

        bipartite_corpus = []
        for n in (1, 2, 3, 4, 5, 6):
            for _ in range(25):
                bipartite_corpus.append(random_bipartite_unique_pm_graph(n, rng))
        for g in bipartite_corpus:
            n = g.n // 2
            assert g.e <= n * (n + 1) // 2
            u_order, v_order = bipartite_unique_pm_labeling(g)
            u_idx = {u: i for i, u in enumerate(u_order)}
            v_idx = {v: j for j, v in enumerate(v_order)}
            for a, b in g.edges:
                i = u_idx.get(a, u_idx.get(b))
                j = v_idx.get(b, v_idx.get(a))
                assert i is not None and j is not None and i <= j
        print(f"  {len(bipartite_corpus)} bipartite unique-matching graphs labeled", flush=True)

        # e <= n^2 for any unique-matching graph on 2n <= 10 vertices
        general = [g for g in instances if g.n <= 10]
        general += [g for g in bipartite_corpus if g.n <= 10]
        while len(general) < 300:
            n = rng.choice([2, 4, 6, 8, 10])
            g = random_graph(n, rng.uniform(0.15, 0.45), rng)
            if has_perfect_matching(g) and count_perfect_matchings(g) == 1:
                general.append(g)
        for g in general:
            assert g.e <= (g.n // 2) ** 2, (write_graph6(g), g.e)
        print(f"  size bound held on {len(general)} unique-matching graphs", flush=True)


# ------------------------------------------------------------- criterion 6


def test_c6_verify_determinism(tmp_path):
    with criterion("C6 byte-identical verify output across worker counts"):
        out1 = tmp_path / "jobs1.json"
        out8 = tmp_path / "jobs8.json"
        rc1 = main(["verify", "--all", "6", "--jobs", "1", "--output", str(out1)])
        rc8 = main(["verify", "--all", "6", "--jobs", "8", "--output", str(out8)])
        assert rc1 == 0 and rc8 == 0
        b1 = out1.read_bytes()
        b8 = out8.read_bytes()
        assert b1 == b8
        print(f"  {len(b1)} identical bytes from both runs", flush=True)
