"""Forcing/anti-forcing/global forcing against definition-level brute force."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_graphs, complete, complete_bipartite, cycle, path, prism
from matchforce.errors import (
    DisconnectedGraphError,
    NoPerfectMatchingError,
    NotGlobalForcingSetError,
)
from matchforce.forcing import (
    anti_forcing_number,
    extend_to_unique_pm,
    forcing_number,
    forcing_summary,
    global_forcing_number,
    global_forcing_via_subgraph,
    is_global_forcing_set,
    lm_reduce,
)
from matchforce.graph import (
    Graph,
    Matching,
    count_perfect_matchings,
    enumerate_perfect_matchings,
    has_perfect_matching,
)


# ---------------------------------------------------------------- oracles
# These work straight from the definitions (no cycles, no hitting sets), so
# they are independent of the production code paths they check.


def oracle_forcing(g: Graph, m: Matching) -> int:
    """Smallest S inside m contained in no other perfect matching."""
    others = [set(x.edges) for x in enumerate_perfect_matchings(g) if x.edges != m.edges]
    for size in range(len(m.edges) + 1):
        for combo in itertools.combinations(m.edges, size):
            if all(not set(combo) <= other for other in others):
                return size
    raise AssertionError("unreachable")


def oracle_anti_forcing(g: Graph, m: Matching) -> int:
    """Smallest S outside m whose removal leaves m as the unique matching."""
    rest = [e for e in g.edges if e not in set(m.edges)]
    for size in range(len(rest) + 1):
        for combo in itertools.combinations(rest, size):
            if count_perfect_matchings(g.without_edges(combo)) == 1:
                return size
    raise AssertionError("unreachable")


def oracle_global_forcing(g: Graph) -> int:
    """Smallest S on which no two distinct perfect matchings agree."""
    pms = [set(m.edges) for m in enumerate_perfect_matchings(g)]
    for size in range(len(g.edges) + 1):
        for combo in itertools.combinations(g.edges, size):
            picked = set(combo)
            traces = [frozenset(p & picked) for p in pms]
            if len(set(traces)) == len(traces):
                return size
    raise AssertionError("unreachable")


small_pm_graphs = st.integers(min_value=2, max_value=6).flatmap(
    lambda n: st.builds(
        Graph,
        st.just(n),
        st.lists(
            st.sampled_from(list(itertools.combinations(range(n), 2))),
            max_size=n * (n - 1) // 2,
        ),
    )
).filter(has_perfect_matching)


class TestForcingNumber:
    def test_k4(self):
        g = complete(4)
        m = Matching(g, [(0, 1), (2, 3)])
        assert forcing_number(g, m) == (1, ((0, 1),))

    def test_c6(self):
        g = cycle(6)
        m = enumerate_perfect_matchings(g)[0]
        size, witness = forcing_number(g, m)
        assert size == 1 and len(witness) == 1

    def test_p4_zero(self):
        g = path(4)
        (m,) = enumerate_perfect_matchings(g)
        assert forcing_number(g, m) == (0, ())

    @given(small_pm_graphs)
    @settings(max_examples=40, deadline=None)
    def test_matches_definition(self, g):
        for m in enumerate_perfect_matchings(g)[:4]:
            assert forcing_number(g, m)[0] == oracle_forcing(g, m)


class TestAntiForcingNumber:
    def test_k4(self):
        g = complete(4)
        m = Matching(g, [(0, 1), (2, 3)])
        size, witness = anti_forcing_number(g, m)
        assert size == 2
        assert witness == ((0, 2), (0, 3))

    def test_c6(self):
        g = cycle(6)
        m = enumerate_perfect_matchings(g)[0]
        assert anti_forcing_number(g, m)[0] == 1

    def test_prism_rung_matching(self):
        g = prism()
        m = Matching(g, [(0, 3), (1, 4), (2, 5)])
        assert anti_forcing_number(g, m)[0] == 3

    @given(small_pm_graphs)
    @settings(max_examples=30, deadline=None)
    def test_matches_definition(self, g):
        for m in enumerate_perfect_matchings(g)[:3]:
            assert anti_forcing_number(g, m)[0] == oracle_anti_forcing(g, m)

    @given(small_pm_graphs)
    @settings(max_examples=30, deadline=None)
    def test_witness_leaves_unique_matching(self, g):
        for m in enumerate_perfect_matchings(g)[:3]:
            _, witness = anti_forcing_number(g, m)
            assert count_perfect_matchings(g.without_edges(witness)) == 1


class TestForcingSummary:
    def test_k4(self):
        s = forcing_summary(complete(4))
        assert (s.f_min, s.f_max, s.af_min, s.af_max, s.gf) == (1, 1, 2, 2, 2)

    def test_k33_maximum_anti_forcing(self):
        g = complete_bipartite(3, 3)
        s = forcing_summary(g)
        assert s.af_max == 3
        assert s.af_max == (2 * g.e - g.n) // 4

    def test_tree_all_zero(self):
        s = forcing_summary(path(6))
        assert (s.f_min, s.f_max, s.af_min, s.af_max, s.gf) == (0, 0, 0, 0, 0)

    def test_requires_perfect_matching(self):
        with pytest.raises(NoPerfectMatchingError):
            forcing_summary(complete(3))

    def test_f_at_most_af(self):
        for g in [complete(4), prism(), complete_bipartite(2, 2)]:
            for r in forcing_summary(g).per_matching:
                assert r.f <= r.af


class TestGlobalForcing:
    def test_k4(self):
        assert global_forcing_number(complete(4))[0] == 2

    def test_k33(self):
        assert global_forcing_number(complete_bipartite(3, 3))[0] == 4

    def test_unique_pm_graph(self):
        assert global_forcing_number(path(6)) == (0, ())

    def test_no_pm_rejected(self):
        with pytest.raises(NoPerfectMatchingError):
            global_forcing_number(complete(3))

    @given(small_pm_graphs)
    @settings(max_examples=25, deadline=None)
    def test_matches_definition(self, g):
        assert global_forcing_number(g)[0] == oracle_global_forcing(g)

    @given(small_pm_graphs, st.randoms(use_true_random=False))
    @settings(max_examples=25, deadline=None)
    def test_label_independent(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert global_forcing_number(g.relabel(perm))[0] == global_forcing_number(g)[0]

    @given(small_pm_graphs)
    @settings(max_examples=25, deadline=None)
    def test_witness_is_global_forcing_set(self, g):
        _, witness = global_forcing_number(g)
        assert is_global_forcing_set(g, witness)


class TestSubgraphRoute:
    def test_k4(self):
        size, t = global_forcing_via_subgraph(complete(4))
        assert size == 2 and t.e == 4

    def test_c6(self):
        size, t = global_forcing_via_subgraph(cycle(6))
        assert size == 1 and t.e == 5

    def test_disconnected_rejected(self):
        g = Graph(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedGraphError):
            global_forcing_via_subgraph(g)

    @given(small_pm_graphs.filter(lambda g: g.is_connected()))
    @settings(max_examples=25, deadline=None)
    def test_agrees_with_hitting_route(self, g):
        assert global_forcing_via_subgraph(g)[0] == global_forcing_number(g)[0]


class TestExtendToUniquePM:
    def test_c4_single_edge(self):
        g = cycle(4)
        assert extend_to_unique_pm(g, [(0, 1)]) == ()

    def test_k33_double_star(self):
        g = complete_bipartite(3, 3)
        s = [(1, 4), (1, 5), (2, 4), (2, 5)]
        f = extend_to_unique_pm(g, s)
        assert f == ((1, 4),)
        result = g.without_edges(s).with_edges(f)
        ms = enumerate_perfect_matchings(result)
        assert len(ms) == 1
        assert ms[0].edges == ((0, 5), (1, 4), (2, 3))

    def test_k4(self):
        g = complete(4)
        f = extend_to_unique_pm(g, [(0, 1), (0, 2)])
        assert f == ()
        ms = enumerate_perfect_matchings(g.without_edges([(0, 1), (0, 2)]))
        assert [m.edges for m in ms] == [((0, 3), (1, 2))]

    def test_rejects_non_global_forcing_set(self):
        with pytest.raises(NotGlobalForcingSetError):
            extend_to_unique_pm(complete(4), [(0, 1)])

    @given(small_pm_graphs)
    @settings(max_examples=20, deadline=None)
    def test_extension_of_canonical_witness(self, g):
        _, witness = global_forcing_number(g)
        f = extend_to_unique_pm(g, witness)
        result = g.without_edges(witness).with_edges(f)
        assert count_perfect_matchings(result) == 1


class TestLMReduce:
    def test_p4_collapses(self):
        red = lm_reduce(path(4))
        assert red.reduced.n == 0
        assert red.removed_pairs == ((0, 1), (2, 3))

    def test_min_degree_two_untouched(self):
        from matchforce.families import FamilySpec, generate

        g = generate(FamilySpec("odd_dumbbell", (3, 3, 1)))
        red = lm_reduce(g)
        assert red.reduced == g

    def test_c6_with_pendant_tail(self):
        g = Graph(8, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6), (6, 7)])
        red = lm_reduce(g)
        assert red.reduced == cycle(6)
        assert red.removed_pairs == ((6, 7),)
        assert global_forcing_number(red.reduced)[0] == global_forcing_number(g)[0] == 1

    def test_no_pm_rejected(self):
        with pytest.raises(NoPerfectMatchingError):
            lm_reduce(Graph(3, [(0, 1), (1, 2)]))

    @given(small_pm_graphs)
    @settings(max_examples=30, deadline=None)
    def test_preserves_global_forcing_number(self, g):
        red = lm_reduce(g)
        assert global_forcing_number(red.reduced)[0] == global_forcing_number(g)[0]
