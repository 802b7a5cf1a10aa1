"""Exact minimum hitting set by branch and bound.

One engine serves forcing, anti-forcing and global forcing numbers, which
are all hitting-set problems over cycle families.  The search is exact:
a greedy solution seeds the upper bound, branching picks the element that
covers the most uncovered sets, and optimality follows from exhausting the
branch tree.  Among minimum witnesses the lexicographically smallest one
(in universe order) is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import InvalidGraphError


@dataclass(frozen=True)
class HittingInstance:
    """A universe of elements plus non-empty subsets that must all be hit."""

    universe: tuple[Hashable, ...]
    sets: tuple[frozenset, ...]

    def __init__(self, universe: Iterable[Hashable], sets: Iterable[Iterable[Hashable]]):
        uni = tuple(universe)
        if len(set(uni)) != len(uni):
            raise InvalidGraphError("universe elements must be distinct")
        known = set(uni)
        frozen = tuple(frozenset(s) for s in sets)
        for s in frozen:
            if not s:
                raise InvalidGraphError("hitting sets must be non-empty")
            if not s <= known:
                raise InvalidGraphError("set element outside the universe")
        object.__setattr__(self, "universe", uni)
        object.__setattr__(self, "sets", frozen)


def _minimal_set_masks(masks: Sequence[int]) -> list[int]:
    """Deduplicate and drop supersets; hitting the minimal sets hits them all."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    keep: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in keep):
            keep.append(m)
    return keep


def _greedy_cover(masks: list[int], n_elem: int) -> list[int]:
    chosen = []
    left = list(masks)
    while left:
        counts = [0] * n_elem
        for m in left:
            mm = m
            while mm:
                b = mm & -mm
                counts[b.bit_length() - 1] += 1
                mm ^= b
        best = max(range(n_elem), key=lambda i: (counts[i], -i))
        chosen.append(best)
        bit = 1 << best
        left = [m for m in left if not m & bit]
    return sorted(chosen)


def _packing_bound(masks: list[int]) -> int:
    """Greedy count of pairwise disjoint sets: a lower bound on any hitting set."""
    used = 0
    count = 0
    for m in sorted(masks, key=lambda m: m.bit_count()):
        if not m & used:
            used |= m
            count += 1
    return count


def _max_coverage_element(masks: list[int], allowed: int) -> int:
    counts: dict[int, int] = {}
    for m in masks:
        mm = m & allowed
        while mm:
            b = mm & -mm
            i = b.bit_length() - 1
            counts[i] = counts.get(i, 0) + 1
            mm ^= b
    return max(counts, key=lambda i: (counts[i], -i))


def _exists_cover(masks: list[int], allowed: int, budget: int) -> bool:
    """Decision search: can the sets be hit with at most `budget` allowed elements?"""
    # unit propagation: a set with one allowed element forces that element
    forced = 0
    while True:
        masks = [m for m in masks if not m & forced]
        if not masks:
            return True
        unit = 0
        for m in masks:
            eff = m & allowed
            if eff == 0:
                return False
            if eff.bit_count() == 1:
                unit |= eff
        if not unit:
            break
        take = unit.bit_count()
        if take > budget:
            return False
        budget -= take
        forced = unit
    if budget <= 0:
        return False
    effective = [m & allowed for m in masks]
    if _packing_bound(effective) > budget:
        return False
    e = _max_coverage_element(masks, allowed)
    bit = 1 << e
    if _exists_cover([m for m in masks if not m & bit], allowed, budget - 1):
        return True
    return _exists_cover(masks, allowed & ~bit, budget)


def _optimal_size(masks: list[int], allowed: int, upper: int) -> int:
    lo = _packing_bound(masks)
    if lo == upper:
        return upper
    for k in range(upper - 1, lo - 1, -1):
        if not _exists_cover(masks, allowed, k):
            return k + 1
    return lo


def min_hitting_set(inst: HittingInstance) -> tuple[int, tuple[Hashable, ...]]:
    """Exact minimum hitting set with the lexicographically smallest witness.

    Returns (size, witness) where the witness is sorted in universe order.
    An empty set list yields (0, ()).
    """
    if not inst.sets:
        return 0, ()
    index = {x: i for i, x in enumerate(inst.universe)}
    n_elem = len(inst.universe)
    raw = [sum(1 << index[x] for x in s) for s in inst.sets]
    masks = _minimal_set_masks(raw)
    all_allowed = (1 << n_elem) - 1

    upper = len(_greedy_cover(masks, n_elem))
    opt = _optimal_size(masks, all_allowed, upper)

    # build the lex-smallest witness of size opt, one element at a time
    witness: list[int] = []
    uncovered = masks
    start = 0
    while uncovered:
        remaining = opt - len(witness) - 1
        placed = False
        for e in range(start, n_elem):
            bit = 1 << e
            if not any(m & bit for m in uncovered):
                continue
            rest = [m for m in uncovered if not m & bit]
            tail_allowed = all_allowed & ~((bit << 1) - 1)  # elements > e only
            if not rest or _exists_cover(rest, tail_allowed, remaining):
                witness.append(e)
                uncovered = rest
                start = e + 1
                placed = True
                break
        if not placed:  # pragma: no cover - optimality guarantees progress
            raise AssertionError("witness construction failed")
    return opt, tuple(inst.universe[i] for i in witness)
