# catalog.py - Named graph families and seeded random graphs
#
# Families are built in file ids so that they read the way people draw them;
# PartitionedGraph.from_edges moves the senders to the front.
from itertools import combinations
from typing import List

import numpy as np

from .model import Edge, PartitionedGraph, is_viable


def single_edge() -> PartitionedGraph:
    """Two vertices, one edge: the Bell pair"""
    return PartitionedGraph.from_edges(1, [1], [(1, 2)])


def linear_cluster(n: int) -> PartitionedGraph:
    """Path 1-2-...-2n with the odd vertices as senders (the 2n-qubit cluster)"""
    edges = [(v, v + 1) for v in range(1, 2 * n)]
    return PartitionedGraph.from_edges(n, list(range(1, 2 * n, 2)), edges)


def ghz_star(n: int) -> PartitionedGraph:
    """Star centered on vertex 1 with senders 1..n (the 2n-qubit GHZ state)"""
    edges = [(1, v) for v in range(2, 2 * n + 1)]
    return PartitionedGraph.from_edges(n, list(range(1, n + 1)), edges)


def perfect_matching(n: int) -> PartitionedGraph:
    """Edges i-(n+i): n independent Bell pairs"""
    return PartitionedGraph.from_edges(n, list(range(1, n + 1)), [(i, n + i) for i in range(1, n + 1)])


def random_graph(n: int, rng: np.random.Generator, p: float = 0.5) -> PartitionedGraph:
    """Each of the C(2n, 2) pairs is an edge with probability ``p``; senders drawn uniformly"""
    size = 2 * n
    edges: List[Edge] = [pair for pair in combinations(range(1, size + 1), 2) if rng.random() < p]
    senders = sorted(int(s) for s in rng.choice(np.arange(1, size + 1), size=n, replace=False))
    return PartitionedGraph.from_edges(n, senders, edges)


def random_viable_graph(n: int, rng: np.random.Generator, p: float = 0.5, max_tries: int = 1000) -> PartitionedGraph:
    for _ in range(max_tries):
        g = random_graph(n, rng, p)
        if is_viable(g):
            return g
    raise RuntimeError(f"no viable graph found for n={n}, p={p} in {max_tries} draws")

