# model.py - Partitioned graphs and their sender/receiver matrices
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import GraphError, InvalidVertexError
from linalg import BitMatrix, lower_triangle, rank, upper_triangle

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

PRIME = "′"


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class PartitionedGraph:
    """Simple undirected graph on 2n vertices split into senders and receivers.

    Vertices use internal labels: senders are 1..n and receivers n+1..2n.
    ``labels[v - 1]`` is the id vertex ``v`` carried in the source file.
    """

    n: int
    edges: FrozenSet[Edge]
    labels: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"need at least one sender, got n={self.n}")
        if len(self.labels) != 2 * self.n or len(set(self.labels)) != 2 * self.n:
            raise GraphError("labels must name 2n distinct vertices")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (1 <= u < v <= 2 * self.n):
                raise GraphError(f"edge {u}-{v} is not canonical or out of range")

    @classmethod
    def from_edges(cls, n: int, senders: Sequence[int], edges: Iterable[Edge]) -> "PartitionedGraph":
        """Validate a graph given in file ids and relabel it.

        Senders sorted ascending become 1..n, the remaining ids sorted
        ascending become n+1..2n.
        """
        size = 2 * n
        sender_set = set(senders)
        if len(senders) != n or len(sender_set) != n:
            raise GraphError(f"expected {n} distinct senders, got {list(senders)}")
        for s in sender_set:
            if not 1 <= s <= size:
                raise InvalidVertexError(f"sender {s} outside 1..{size}")
        receivers = [v for v in range(1, size + 1) if v not in sender_set]
        labels = tuple(sorted(sender_set)) + tuple(receivers)
        internal = {label: index + 1 for index, label in enumerate(labels)}

        mapped = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u not in internal or v not in internal:
                raise InvalidVertexError(f"edge {u}-{v} outside 1..{size}")
            edge = canonical_edge(internal[u], internal[v])
            if edge in mapped:
                raise GraphError(f"duplicate edge {u}-{v}")
            mapped.add(edge)
        return cls(n, frozenset(mapped), labels)

    @property
    def size(self) -> int:
        return 2 * self.n

    @property
    def vertices(self) -> range:
        return range(1, self.size + 1)

    @property
    def senders(self) -> range:
        return range(1, self.n + 1)

    @property
    def receivers(self) -> range:
        return range(self.n + 1, self.size + 1)

    def is_sender(self, v: int) -> bool:
        self._check_vertex(v)
        return v <= self.n

    def _check_vertex(self, v: int):
        if not 1 <= v <= self.size:
            raise InvalidVertexError(f"vertex {v} outside 1..{self.size}")

    def neighbors(self, v: int) -> FrozenSet[int]:
        """N(v)"""
        self._check_vertex(v)
        return frozenset(b if a == v else a for a, b in self.edges if v in (a, b))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def original_label(self, v: int) -> int:
        self._check_vertex(v)
        return self.labels[v - 1]

    def internal_label(self, label: int) -> int:
        try:
            return self.labels.index(label) + 1
        except ValueError:
            raise InvalidVertexError(f"vertex {label} outside 1..{self.size}") from None

    def sender_labels(self) -> List[int]:
        return list(self.labels[: self.n])

    def receiver_labels(self) -> List[int]:
        return list(self.labels[self.n:])

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def original_edges(self) -> List[Edge]:
        """Edges in file ids, canonical order"""
        return sorted(canonical_edge(self.labels[u - 1], self.labels[v - 1]) for u, v in self.edges)

    def with_edges(self, edges: Iterable[Edge]) -> "PartitionedGraph":
        return PartitionedGraph(self.n, frozenset(canonical_edge(u, v) for u, v in edges), self.labels)

    def adjacency(self) -> np.ndarray:
        adj = np.zeros((self.size, self.size), dtype=np.uint8)
        for u, v in self.edges:
            adj[u - 1, v - 1] = adj[v - 1, u - 1] = 1
        return adj

    def is_connected(self) -> bool:
        seen = {1}
        frontier = [1]
        while frontier:
            v = frontier.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == self.size

    def swap_roles(self) -> "PartitionedGraph":
        """Same graph with the sender and receiver sets exchanged"""
        n = self.n

        def flip(v: int) -> int:
            return v + n if v <= n else v - n

        labels = self.labels[n:] + self.labels[:n]
        return PartitionedGraph(n, frozenset(canonical_edge(flip(u), flip(v)) for u, v in self.edges), labels)


@dataclass(frozen=True)
class EdgePartition:
    e_sr: FrozenSet[Edge]
    e_s: FrozenSet[Edge]
    e_r: FrozenSet[Edge]

    def counts(self) -> Dict[str, int]:
        return {"e_sr": len(self.e_sr), "e_s": len(self.e_s), "e_r": len(self.e_r)}

    def is_tanner_type(self) -> bool:
        return not self.e_s and not self.e_r


@dataclass(frozen=True)
class SubgraphMatrices:
    gamma_t: BitMatrix
    gamma_s: BitMatrix
    gamma_r: BitMatrix
    gamma_s_lower: BitMatrix
    gamma_s_upper: BitMatrix
    gamma_r_lower: BitMatrix
    gamma_r_upper: BitMatrix

    def as_strings(self) -> Dict[str, List[str]]:
        return {
            "gamma_t": self.gamma_t.to_strings(),
            "gamma_s": self.gamma_s.to_strings(),
            "gamma_r": self.gamma_r.to_strings(),
        }


@dataclass(frozen=True)
class MirrorPair:
    """Copy of a graph whose senders i are renamed i′ over the same receivers"""

    original: PartitionedGraph
    graph: PartitionedGraph

    @property
    def receivers(self) -> range:
        return self.graph.receivers

    def vertex_name(self, v: int) -> str:
        label = self.graph.original_label(v)
        return f"{label}{PRIME}" if self.graph.is_sender(v) else str(label)

    def named_edges(self) -> List[str]:
        return [f"{self.vertex_name(u)}-{self.vertex_name(v)}" for u, v in self.graph.sorted_edges()]


def classify_edges(g: PartitionedGraph) -> EdgePartition:
    e_sr, e_s, e_r = set(), set(), set()
    for u, v in g.edges:
        if u <= g.n and v <= g.n:
            e_s.add((u, v))
        elif u > g.n and v > g.n:
            e_r.add((u, v))
        else:
            e_sr.add((u, v))
    return EdgePartition(frozenset(e_sr), frozenset(e_s), frozenset(e_r))


def sub_matrices(g: PartitionedGraph) -> SubgraphMatrices:
    """Γ_T (senders × receivers), Γ_S, Γ_R and their strict triangular parts"""
    n = g.n
    gamma_t = np.zeros((n, n), dtype=np.uint8)
    gamma_s = np.zeros((n, n), dtype=np.uint8)
    gamma_r = np.zeros((n, n), dtype=np.uint8)
    for u, v in g.edges:
        if v <= n:
            gamma_s[u - 1, v - 1] = gamma_s[v - 1, u - 1] = 1
        elif u > n:
            gamma_r[u - n - 1, v - n - 1] = gamma_r[v - n - 1, u - n - 1] = 1
        else:
            # u < v, so u is the sender
            gamma_t[u - 1, v - n - 1] = 1
    gs, gr = BitMatrix(gamma_s), BitMatrix(gamma_r)
    return SubgraphMatrices(
        gamma_t=BitMatrix(gamma_t),
        gamma_s=gs,
        gamma_r=gr,
        gamma_s_lower=lower_triangle(gs),
        gamma_s_upper=upper_triangle(gs),
        gamma_r_lower=lower_triangle(gr),
        gamma_r_upper=upper_triangle(gr),
    )


def gamma_t_rank(g: PartitionedGraph) -> int:
    return rank(sub_matrices(g).gamma_t)


def is_viable(g: PartitionedGraph) -> bool:
    """True iff Γ_T has full rank over GF(2)"""
    viable = gamma_t_rank(g) == g.n
    logger.debug("viability of %d-pair graph: %s", g.n, viable)
    return viable


def local_complement(g: PartitionedGraph, v: int) -> PartitionedGraph:
    """Toggle every edge between two neighbors of ``v``"""
    toggled = set(g.edges)
    for a, b in combinations(sorted(g.neighbors(v)), 2):
        toggled ^= {(a, b)}
    return g.with_edges(toggled)


def mirror_pair(g: PartitionedGraph) -> MirrorPair:
    # Renaming keeps internal coordinates, so Γ_T′ = Γ_T and Γ_S′ = Γ_S
    return MirrorPair(original=g, graph=PartitionedGraph(g.n, g.edges, g.labels))


def connectivity_warning(g: PartitionedGraph) -> Optional[str]:
    if g.is_connected():
        return None
    logger.warning("graph with %d vertices is disconnected; viability is still decided by rank", g.size)
    return "graph is disconnected"
