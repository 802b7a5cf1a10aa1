"""Exact matching-forcing invariants of small graphs.

The package computes forcing, anti-forcing and global forcing numbers with
canonical witnesses, decides the structural predicates around unique perfect
matchings, bricks and solid cuts, tests perfect matching polytope membership
in exact rational arithmetic, generates the relevant graph families, and
replays the governing theorems over exhaustive small-graph corpora.
"""

from .errors import (
    BudgetExceededError,
    DisconnectedGraphError,
    EvenShoreError,
    InternalConsistencyError,
    InvalidFamilyParamsError,
    InvalidGraphError,
    InvalidMatchingError,
    MalformedGraph6Error,
    MatchforceError,
    NoPerfectMatchingError,
    NotBipartiteError,
    NotGlobalForcingSetError,
    NotMatchingCoveredError,
    NotPerfectMatchingError,
    NotUniquePerfectMatchingError,
    PendantVertexError,
    SizeLimitError,
)
from .forcing import (
    ForcingSummary,
    LMReduction,
    MatchingForcing,
    anti_forcing_number,
    extend_to_unique_pm,
    forcing_number,
    forcing_summary,
    global_forcing_number,
    global_forcing_via_subgraph,
    is_global_forcing_set,
    lm_reduce,
)
from .families import (
    FamilySpec,
    enumerate_corpus,
    generate,
    parse_edge_list,
    parse_family_spec,
    parse_graph6,
    random_bipartite_unique_pm_graph,
    random_connected_pm_graph,
    random_graph,
    write_edge_list,
    write_graph6,
)
from .graph import (
    Cycle,
    CycleFamily,
    Graph,
    GraphInvariants,
    Matching,
    ResourceBudget,
    alternating_cycles,
    basic_invariants,
    count_perfect_matchings,
    enumerate_perfect_matchings,
    has_perfect_matching,
    nice_cycles,
)
from .hitting import HittingInstance, min_hitting_set
from .polytope import (
    MembershipVerdict,
    RationalEdgeVector,
    Violation,
    convex_combination,
    format_rational,
    fpm_equals_pm,
    is_one_regular,
    parse_rational,
    pm_polytope_membership,
)
from .structure import (
    CutReport,
    OddDumbbell,
    bipartite_unique_pm_labeling,
    bridges,
    classify_cut,
    find_odd_dumbbell,
    in_class_g,
    is_brick,
    is_matching_covered,
    is_solid,
    kotzig_cut_edge,
    unique_perfect_matching,
)

__version__ = "0.1.0"
