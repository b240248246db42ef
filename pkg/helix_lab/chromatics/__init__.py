"""Exact chromatic parameters: chromatic, circular, fractional and local."""

from .circular import candidate_ratios, circular_chromatic
from .coloring import (
    chromatic_number,
    dsatur_coloring,
    find_coloring,
    greedy_clique,
    is_proper_coloring,
    search_coloring,
)
from .criticality import vertex_critical
from .fractional import (
    fractional_chromatic,
    independence_number,
    maximal_independent_sets,
)
from .local import local_chromatic, local_load

__all__ = [
    "candidate_ratios",
    "chromatic_number",
    "circular_chromatic",
    "dsatur_coloring",
    "find_coloring",
    "fractional_chromatic",
    "greedy_clique",
    "independence_number",
    "is_proper_coloring",
    "local_chromatic",
    "local_load",
    "maximal_independent_sets",
    "search_coloring",
    "vertex_critical",
]
