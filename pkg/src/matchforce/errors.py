"""Typed errors shared across the package."""

from __future__ import annotations


class MatchforceError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraphError(MatchforceError):
    """Graph construction invariant violated, or input graph unsuitable for an operation."""


class InvalidMatchingError(MatchforceError):
    """Matching edges are not vertex-disjoint or not edges of the host graph."""


class NotPerfectMatchingError(MatchforceError):
    """A perfect matching of the host graph was required."""


class NoPerfectMatchingError(MatchforceError):
    """The input graph has no perfect matching."""


class NotUniquePerfectMatchingError(MatchforceError):
    """The input graph does not have exactly one perfect matching."""


class NotBipartiteError(MatchforceError):
    """The input graph is not bipartite."""


class DisconnectedGraphError(MatchforceError):
    """The input graph is not connected."""


class PendantVertexError(MatchforceError):
    """The input graph has a pendant (degree-1) vertex where none is allowed."""


class NotMatchingCoveredError(MatchforceError):
    """The input graph is not matching covered."""


class EvenShoreError(MatchforceError):
    """A cut shore of odd cardinality was required."""


class NotGlobalForcingSetError(MatchforceError):
    """The given edge set misses some nice cycle, so it is not a global forcing set."""


class InvalidFamilyParamsError(MatchforceError):
    """Family generator parameters out of range."""


class SizeLimitError(MatchforceError):
    """Input exceeds a hard size cap of an exhaustive enumeration.

    Attributes:
        limit: the cap that was exceeded.
    """

    def __init__(self, message: str, limit: int):
        super().__init__(message)
        self.limit = limit


class BudgetExceededError(MatchforceError):
    """A resource budget would be exceeded; enumeration is aborted, never truncated.

    Attributes:
        budget_name: which budget ("max_matchings" or "max_cycles").
        limit: the configured limit.
        partial_count: how many items had been produced when the limit was hit.
    """

    def __init__(self, budget_name: str, limit: int, partial_count: int):
        super().__init__(
            f"{budget_name} budget exceeded: limit {limit}, {partial_count} enumerated"
        )
        self.budget_name = budget_name
        self.limit = limit
        self.partial_count = partial_count


class MalformedGraph6Error(MatchforceError):
    """graph6 text cannot be decoded.

    Attributes:
        offset: byte offset of the first offending byte.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class InternalConsistencyError(MatchforceError):
    """Two routes that must agree disagreed; this signals an implementation bug."""
