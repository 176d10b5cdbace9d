"""Semistrong edge-colorings: matchings, verifiers, exact solvers and heuristics."""

from .coloring import (
    EdgeColoring,
    available_colors,
    colors_at_vertex,
    count_distance2_conflicts,
    verify,
)
from .graph import (
    Graph,
    components,
    directed_neighborhoods,
    edge_neighborhood,
    edge_profile,
    girth,
    square_partners,
    two_edge_neighborhood,
    underlying_simple_graph,
)
from .heuristics import semistrong_delta_squared, tree_semistrong
from .kinds import (
    INDUCED,
    PLAIN,
    PROPER,
    SEMISTRONG,
    SEMISTRONG_MATCHING,
    STRONG,
    ColoringKind,
    MatchingKind,
    degenerate_classes,
    degenerate_matching,
    relaxed,
)
from .matchings import classify, max_matching_size
from .solver import (
    SearchBudget,
    SolveResult,
    chromatic_index,
    complete_by_distinct_representatives,
    feasible,
)

__version__ = "0.1.0"

__all__ = [
    "EdgeColoring",
    "available_colors",
    "colors_at_vertex",
    "count_distance2_conflicts",
    "verify",
    "Graph",
    "components",
    "directed_neighborhoods",
    "edge_neighborhood",
    "edge_profile",
    "girth",
    "square_partners",
    "two_edge_neighborhood",
    "underlying_simple_graph",
    "semistrong_delta_squared",
    "tree_semistrong",
    "INDUCED",
    "PLAIN",
    "PROPER",
    "SEMISTRONG",
    "SEMISTRONG_MATCHING",
    "STRONG",
    "ColoringKind",
    "MatchingKind",
    "degenerate_classes",
    "degenerate_matching",
    "relaxed",
    "classify",
    "max_matching_size",
    "SearchBudget",
    "SolveResult",
    "chromatic_index",
    "complete_by_distinct_representatives",
    "feasible",
]
