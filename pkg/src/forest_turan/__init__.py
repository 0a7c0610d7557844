"""Star counts in linear-forest-free graphs: constructions, closed forms and exhaustive checks."""

from .constructions import FamilyParams, build_extremal, build_family, family_star_count, theorem_value
from .forest import ForestSpec, contains_forest, find_forest, is_forest_free, parse_forest
from .graph import (
    CanonicalForm,
    Graph,
    binomial,
    canonical_form,
    count_copies,
    count_stars,
    from_graph6,
    is_isomorphic,
    is_subgraph_of,
    to_graph6,
)
from .patterns import PatternGraph, parse_pattern
from .search import (
    EnumerationBudget,
    brute_force_ex,
    enumerate_free_graphs,
    explore_problem1,
    find_threshold,
    verify_classification,
)
from .shifting import ShiftDelta, shift, shift_closure, shift_delta

__all__ = [
    "CanonicalForm",
    "EnumerationBudget",
    "FamilyParams",
    "ForestSpec",
    "Graph",
    "PatternGraph",
    "ShiftDelta",
    "binomial",
    "brute_force_ex",
    "build_extremal",
    "build_family",
    "canonical_form",
    "contains_forest",
    "count_copies",
    "count_stars",
    "enumerate_free_graphs",
    "explore_problem1",
    "family_star_count",
    "find_forest",
    "find_threshold",
    "from_graph6",
    "is_forest_free",
    "is_isomorphic",
    "is_subgraph_of",
    "parse_forest",
    "parse_pattern",
    "shift",
    "shift_closure",
    "shift_delta",
    "theorem_value",
    "to_graph6",
    "verify_classification",
]
