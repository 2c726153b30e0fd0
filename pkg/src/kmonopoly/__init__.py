"""Open k-monopolies, alliances and signed total domination on small graphs."""

from .graph import (
    Graph,
    GraphError,
    KRangeError,
    MonopolyUndefinedError,
    VertexSet,
    boundary,
    cut_size,
    degree_in,
    induced_edge_count,
    valid_k_range,
)
from .bounds import applicable_bounds, degree_lower_bound, exact_formula, general_bounds
from .predicates import SignedAssignment, is_k_monopoly
from .solver import SolveReport, brute_force, min_k_monopoly, solve

__all__ = [
    "Graph", "GraphError", "KRangeError", "MonopolyUndefinedError", "VertexSet",
    "SignedAssignment", "SolveReport", "applicable_bounds", "boundary", "brute_force", "cut_size", "degree_in",
    "degree_lower_bound", "exact_formula", "general_bounds",
    "induced_edge_count", "is_k_monopoly", "min_k_monopoly", "solve", "valid_k_range",
]
