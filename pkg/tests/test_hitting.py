"""Exact hitting-set engine against brute-force subset search."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete
from matchforce.errors import InvalidGraphError
from matchforce.graph import simple_cycles_raw, Cycle
from matchforce.hitting import HittingInstance, min_hitting_set


def brute_force_min_hitting(universe, sets):
    """Oracle: scan subsets by size then lexicographic index order."""
    index = {x: i for i, x in enumerate(universe)}
    targets = [set(s) for s in sets]
    for size in range(len(universe) + 1):
        for combo in itertools.combinations(universe, size):
            picked = set(combo)
            if all(picked & t for t in targets):
                return size, combo
    raise AssertionError("unreachable: universe hits everything")


def test_common_element():
    inst = HittingInstance("abc", [{"a", "b"}, {"b", "c"}])
    assert min_hitting_set(inst) == (1, ("b",))


def test_disjoint_singletons():
    inst = HittingInstance("ab", [{"a"}, {"b"}])
    assert min_hitting_set(inst) == (2, ("a", "b"))


def test_k4_four_cycles_need_two_edges():
    g = complete(4)
    quads = [Cycle(g, t).edge_set for t in simple_cycles_raw(g, parity=0)]
    assert len(quads) == 3
    inst = HittingInstance(g.edges, quads)
    size, witness = min_hitting_set(inst)
    # each edge lies in exactly two of the three 4-cycles, so one never suffices
    assert size == 2
    assert brute_force_min_hitting(g.edges, quads)[0] == 2
    assert witness == brute_force_min_hitting(g.edges, quads)[1]


def test_empty_sets_list():
    assert min_hitting_set(HittingInstance("abc", [])) == (0, ())


def test_rejects_empty_set():
    with pytest.raises(InvalidGraphError):
        HittingInstance("ab", [set()])


def test_rejects_foreign_element():
    with pytest.raises(InvalidGraphError):
        HittingInstance("ab", [{"c"}])


@st.composite
def random_instances(draw):
    n = draw(st.integers(min_value=1, max_value=9))
    universe = tuple(range(n))
    k = draw(st.integers(min_value=0, max_value=8))
    sets = [
        frozenset(draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n)))
        for _ in range(k)
    ]
    return HittingInstance(universe, sets)


@given(random_instances())
@settings(max_examples=200, deadline=None)
def test_matches_brute_force(inst):
    size, witness = min_hitting_set(inst)
    expect_size, expect_witness = brute_force_min_hitting(inst.universe, inst.sets)
    assert size == expect_size
    assert witness == expect_witness
    assert all(set(witness) & set(s) for s in inst.sets)
