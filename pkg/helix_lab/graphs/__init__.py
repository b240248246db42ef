"""Graph operators, family constructors and the dominated-vertex reduction."""

from .descriptors import looks_like_descriptor, parse_descriptor
from .families import (
    basic_family,
    build_family,
    circular_complete,
    complete,
    complete_bipartite,
    count_helical_vertices,
    coxeter,
    cycle,
    helical,
    helical_parameters,
    hypercube,
    iter_helical_tuples,
    kneser,
    label_masks,
    petersen,
    schrijver,
    schrijver_helical,
    stable_helical,
)
from .isomorphism import find_isomorphism, is_isomorphic
from .operators import (
    cycle_order,
    cycle_stats,
    odd_girth,
    power,
    subdivide,
    subdivision_index,
    walk_mask,
    walk_masks,
    walk_neighborhood,
)
from .reduction import dominated_vertices, dominators, while_reduce
from .stable_sets import is_stable_union, is_two_stable, stable_subsets

__all__ = [
    # Operators
    "cycle_order",
    "cycle_stats",
    "odd_girth",
    "power",
    "subdivide",
    "subdivision_index",
    "walk_mask",
    "walk_masks",
    "walk_neighborhood",
    # Isomorphism
    "find_isomorphism",
    "is_isomorphic",
    # Descriptors
    "looks_like_descriptor",
    "parse_descriptor",
    # Families
    "basic_family",
    "build_family",
    "circular_complete",
    "complete",
    "complete_bipartite",
    "count_helical_vertices",
    "coxeter",
    "cycle",
    "helical",
    "helical_parameters",
    "hypercube",
    "iter_helical_tuples",
    "kneser",
    "label_masks",
    "petersen",
    "schrijver",
    "schrijver_helical",
    "stable_helical",
    # Stable sets
    "is_stable_union",
    "is_two_stable",
    "stable_subsets",
    # Reduction
    "dominated_vertices",
    "dominators",
    "while_reduce",
]
