"""Partitioned graphs: model, file format and named families"""
from .model import (
    Edge,
    PartitionedGraph,
    EdgePartition,
    SubgraphMatrices,
    MirrorPair,
    classify_edges,
    sub_matrices,
    gamma_t_rank,
    is_viable,
    local_complement,
    mirror_pair,
    connectivity_warning
)
from .parser import parse_graph, load_graph, format_graph
from .catalog import (
    single_edge,
    linear_cluster,
    ghz_star,
    perfect_matching,
    random_graph,
    random_viable_graph
)

__all__ = [
    'Edge',
    'PartitionedGraph',
    'EdgePartition',
    'SubgraphMatrices',
    'MirrorPair',
    'classify_edges',
    'sub_matrices',
    'gamma_t_rank',
    'is_viable',
    'local_complement',
    'mirror_pair',
    'connectivity_warning',
    'parse_graph',
    'load_graph',
    'format_graph',
    'single_edge',
    'linear_cluster',
    'ghz_star',
    'perfect_matching',
    'random_graph',
    'random_viable_graph'
]
