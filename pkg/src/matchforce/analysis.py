"""Lazily computed per-graph invariants shared by the theorem checks and reports.

Every quantity is computed at most once per graph, which matters when a
corpus run evaluates many checks against the same instance.
"""

from __future__ import annotations

from typing import Any, Callable

from .forcing import ForcingSummary, forcing_summary
from .graph import (
    DEFAULT_BUDGET,
    CycleFamily,
    Graph,
    GraphInvariants,
    Matching,
    ResourceBudget,
    basic_invariants,
    count_perfect_matchings,
    enumerate_perfect_matchings,
    nice_cycles,
    simple_cycles_raw,
)
from .polytope import RationalEdgeVector, fpm_equals_pm
from .structure import in_class_g, is_brick, is_matching_covered, is_solid


class GraphAnalysis:
    """Memoized view of one graph's invariants."""

    def __init__(self, g: Graph, budget: ResourceBudget = DEFAULT_BUDGET):
        self.g = g
        self.budget = budget
        self._cache: dict[str, Any] = {}

    def _memo(self, key: str, compute: Callable[[], Any]) -> Any:
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    @property
    def invariants(self) -> GraphInvariants:
        return self._memo("invariants", lambda: basic_invariants(self.g))

    @property
    def matchings(self) -> list[Matching]:
        return self._memo(
            "matchings", lambda: enumerate_perfect_matchings(self.g, self.budget)
        )

    @property
    def phi(self) -> int:
        return len(self.matchings)

    @property
    def summary(self) -> ForcingSummary:
        return self._memo("summary", lambda: forcing_summary(self.g, self.budget))

    @property
    def nice(self) -> CycleFamily:
        return self._memo("nice", lambda: nice_cycles(self.g, self.budget))

    @property
    def cycle_count(self) -> int:
        return self._memo(
            "cycle_count", lambda: len(simple_cycles_raw(self.g, self.budget))
        )

    @property
    def all_cycles_nice(self) -> bool:
        return len(self.nice) == self.cycle_count

    @property
    def matching_covered(self) -> bool:
        return self._memo("matching_covered", lambda: is_matching_covered(self.g))

    @property
    def in_class_g(self) -> bool:
        return self._memo("in_class_g", lambda: in_class_g(self.g, self.budget))[0]

    @property
    def fpm_equals_pm(self) -> bool:
        return self._memo("fpm", lambda: fpm_equals_pm(self.g, self.budget))[0]

    @property
    def fpm_witness(self) -> RationalEdgeVector | None:
        return self._memo("fpm", lambda: fpm_equals_pm(self.g, self.budget))[1]

    @property
    def brick(self) -> bool:
        return self._memo("brick", lambda: is_brick(self.g, self.budget))

    @property
    def solid(self) -> bool | None:
        """Solidity, or None when the graph is not matching covered."""

        def compute():
            return is_solid(self.g, self.budget) if self.matching_covered else None

        return self._memo("solid", compute)

    @property
    def gf(self) -> int:
        return self.summary.gf

    @property
    def max_forcing(self) -> int:
        return self.summary.f_max

    @property
    def max_anti_forcing(self) -> int:
        return self.summary.af_max

    @property
    def has_nice_matching(self) -> bool:
        """Some matching attains the anti-forcing bound (2e - v) / 4."""
        return 4 * self.summary.af_max == 2 * self.g.e - self.g.n
