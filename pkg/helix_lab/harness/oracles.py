"""Brute-force reference computations for cross-checking the search engines."""

from itertools import product
from typing import Iterator, Tuple

from ..core.models.graph_models import Graph


def _all_maps(g: Graph, h: Graph) -> Iterator[Tuple[int, ...]]:
    return product(range(h.order), repeat=g.order)


def brute_force_hom_count(g: Graph, h: Graph) -> int:
    """Number of homomorphisms ``g -> h`` by enumerating every map."""
    edges = g.edges()
    return sum(
        1
        for assignment in _all_maps(g, h)
        if all(h.adjacent(assignment[u], assignment[v]) for u, v in edges)
    )


def brute_force_chromatic(g: Graph) -> int:
    """Chromatic number of a loop-free graph by enumerating colourings."""
    if g.order == 0:
        return 0
    edges = g.edges()
    for t in range(1, g.order + 1):
        # vertex 0 can always take colour 0
        for rest in product(range(t), repeat=g.order - 1):
            colors = (0,) + rest
            if all(colors[u] != colors[v] for u, v in edges):
                return t
    raise ValueError(f"{g.describe()} has a loop")
