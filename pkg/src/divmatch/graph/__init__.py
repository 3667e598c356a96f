"""
Graph module for the divmatch package.

This module provides the graph and matching value types, the edge-list
format and the instance generators.
"""

from divmatch.graph.core import (
    Bipartition,
    Graph,
    Matching,
    Side,
    detect_bipartition,
    is_matching,
    matching_vertices,
    symmetric_difference_size,
)
from divmatch.graph.io import parse_edge_list, read_graph, serialize_edge_list, write_graph

__all__ = [
    'Bipartition',
    'Graph',
    'Matching',
    'Side',
    'detect_bipartition',
    'is_matching',
    'matching_vertices',
    'symmetric_difference_size',
    'parse_edge_list',
    'read_graph',
    'serialize_edge_list',
    'write_graph',
]
