"""Independent reference answers, computed with networkx or from edge lists."""

import random
from itertools import combinations
from typing import Dict, List, Optional, Set

import networkx as nx

from helix_lab.core.models.graph_models import Graph


def to_networkx(g: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.order))
    nx_graph.add_edges_from(g.edges())
    return nx_graph


def nx_isomorphic(g: Graph, h: Graph) -> bool:
    return nx.is_isomorphic(to_networkx(g), to_networkx(h))


def nx_girth(g: Graph) -> Optional[int]:
    """Girth of a loop-free graph, ``None`` for forests."""
    value = nx.girth(to_networkx(g))
    return None if value == float("inf") else int(value)


def nx_is_bipartite(g: Graph) -> bool:
    return nx.is_bipartite(to_networkx(g))


def nx_max_independent_set_size(g: Graph) -> int:
    complement = nx.complement(to_networkx(g))
    return max((len(c) for c in nx.find_cliques(complement)), default=0)


def random_graphs(seed: int, count: int, max_order: int, p: float = 0.3) -> List[Graph]:
    """Seeded G(n, p) graphs with ``1 <= n <= max_order``."""
    rng = random.Random(seed)
    graphs = []
    for index in range(count):
        n = rng.randint(1, max_order)
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
        graphs.append(Graph.from_edges(n, edges, name=f"gnp-{seed}-{index}"))
    return graphs


def walk_ends(g: Graph, v: int, length: int) -> Set[int]:
    """Ends of walks of exactly ``length`` edges from ``v``, from the edge list."""
    adjacency: Dict[int, Set[int]] = {u: set() for u in range(g.order)}
    for a, b in g.edges():
        adjacency[a].add(b)
        adjacency[b].add(a)
    ends = {v}
    for _ in range(length):
        ends = {w for u in ends for w in adjacency[u]}
    return ends


def shortest_odd_closed_walk(g: Graph) -> Optional[int]:
    """Least odd ``L <= order`` with a closed walk of length ``L``."""
    for length in range(1, g.order + 1, 2):
        if any(v in walk_ends(g, v, length) for v in range(g.order)):
            return length
    return None
