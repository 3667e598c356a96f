"""
Graph and matching representations.

This module provides the immutable ``Graph`` value type, the ``Matching``
and ``Bipartition`` types bound to a graph, and the symmetric-difference
arithmetic and certificate checks shared by every solver.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from divmatch.errors import UsageError


Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    A finite simple undirected graph on vertices ``0..vertex_count-1``.

    Edge identifiers are the positions in ``edges``; every edge is stored
    with its smaller endpoint first.

    Attributes:
        vertex_count: Number of vertices n.
        edges: Edge tuples ``(u, v)`` with ``u < v``, indexed by edge identifier.
        names: Display name of every vertex, used by parsers and reports.
    """

    vertex_count: int
    edges: Tuple[Edge, ...] = ()
    names: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise UsageError(f"vertex_count must be non-negative, got {self.vertex_count}")

        normalized = []
        seen = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise UsageError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise UsageError(f"edge ({u}, {v}) has an endpoint outside [0, {self.vertex_count})")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise UsageError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            normalized.append((u, v))
        object.__setattr__(self, "edges", tuple(normalized))

        if not self.names:
            object.__setattr__(self, "names", tuple(str(i) for i in range(self.vertex_count)))
        elif len(self.names) != self.vertex_count:
            raise UsageError(f"expected {self.vertex_count} vertex names, got {len(self.names)}")
        else:
            object.__setattr__(self, "names", tuple(str(name) for name in self.names))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge],
                   names: Optional[Sequence[str]] = None) -> "Graph":
        """
        Build a graph from an iterable of vertex pairs.

        Args:
            vertex_count: Number of vertices.
            edges: Vertex pairs; identifiers follow iteration order.
            names: Optional vertex names.

        Returns:
            The new graph.
        """
        return cls(vertex_count, tuple(edges), tuple(names) if names else ())

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _edge_index(self) -> Dict[Edge, int]:
        return {edge: edge_id for edge_id, edge in enumerate(self.edges)}

    @cached_property
    def _adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        adjacency: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        return tuple(tuple(sorted(neighbors)) for neighbors in adjacency)

    def neighbors(self, vertex: int) -> Tuple[int, ...]:
        """Neighbours of ``vertex`` in ascending order."""
        return self._adjacency[vertex]

    def degree(self, vertex: int) -> int:
        return len(self._adjacency[vertex])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def edge_id(self, u: int, v: int) -> int:
        """
        Look up the identifier of edge ``uv``.

        Raises:
            UsageError: If ``uv`` is not an edge of the graph.
        """
        try:
            return self._edge_index[(min(u, v), max(u, v))]
        except KeyError:
            raise UsageError(f"({u}, {v}) is not an edge")

    def check_edge_id(self, edge_id: int) -> None:
        if not 0 <= edge_id < len(self.edges):
            raise UsageError(f"unknown edge identifier {edge_id} (graph has {len(self.edges)} edges)")

    def to_networkx(self) -> nx.Graph:
        """
        Convert to a networkx graph whose edges carry an ``id`` attribute.

        Returns:
            A fresh ``nx.Graph`` with nodes inserted in index order.
        """
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.vertex_count))
        for edge_id, (u, v) in enumerate(self.edges):
            nx_graph.add_edge(u, v, id=edge_id)
        return nx_graph

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", Dict[int, int]]:
        """
        Build G[X] for a vertex set X.

        Vertices of X are renumbered in ascending order; edges keep the
        relative order of their identifiers in the parent graph.

        Args:
            vertices: The vertex set X.

        Returns:
            Tuple of the induced graph and the relabelling map old -> new.
        """
        kept = sorted(set(vertices))
        for vertex in kept:
            if not 0 <= vertex < self.vertex_count:
                raise UsageError(f"vertex {vertex} outside [0, {self.vertex_count})")
        relabel = {old: new for new, old in enumerate(kept)}
        edges = [(relabel[u], relabel[v]) for u, v in self.edges if u in relabel and v in relabel]
        names = [self.names[old] for old in kept]
        return Graph.from_edges(len(kept), edges, names), relabel


@dataclass(frozen=True)
class Matching:
    """
    A set of edge identifiers of a specific graph.

    Construction validates the identifiers and the matching property.

    Attributes:
        graph: The graph the identifiers refer to.
        edge_ids: The selected edge identifiers.
    """

    graph: Graph = field(repr=False, compare=False)
    edge_ids: FrozenSet[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "edge_ids", frozenset(self.edge_ids))
        if not is_matching(self.graph, self.edge_ids):
            raise UsageError(f"edges {sorted(self.edge_ids)} are not pairwise vertex-disjoint")

    def __len__(self) -> int:
        return len(self.edge_ids)

    def __iter__(self):
        return iter(sorted(self.edge_ids))

    def __contains__(self, edge_id: object) -> bool:
        return edge_id in self.edge_ids

    def sorted_ids(self) -> List[int]:
        return sorted(self.edge_ids)

    def edge_pairs(self) -> List[Edge]:
        """Endpoint pairs of the matched edges, in identifier order."""
        return [self.graph.edges[edge_id] for edge_id in self.sorted_ids()]

    def named_pairs(self) -> List[List[str]]:
        """Matched edges as ``[u, v]`` pairs of vertex names."""
        names = self.graph.names
        return [[names[u], names[v]] for u, v in self.edge_pairs()]


class Side(str, Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class Bipartition:
    """
    A two-colouring of the vertices of a graph.

    Attributes:
        side: Side of every vertex, indexed by vertex.
    """

    side: Tuple[Side, ...]

    def part(self, which: Side) -> List[int]:
        """Vertices on side ``which`` in ascending order."""
        return [vertex for vertex, s in enumerate(self.side) if s is which]

    def is_valid_for(self, graph: Graph) -> bool:
        if len(self.side) != graph.vertex_count:
            return False
        return all(self.side[u] is not self.side[v] for u, v in graph.edges)


def is_matching(graph: Graph, edge_ids: Iterable[int]) -> bool:
    """
    Check whether a set of edges is pairwise vertex-disjoint.

    Args:
        graph: The graph the identifiers refer to.
        edge_ids: Edge identifiers to check.

    Returns:
        True iff no two of the edges share an endpoint.

    Raises:
        UsageError: If an identifier is not an edge of ``graph``.
    """
    covered = set()
    for edge_id in set(edge_ids):
        graph.check_edge_id(edge_id)
        u, v = graph.edges[edge_id]
        if u in covered or v in covered:
            return False
        covered.add(u)
        covered.add(v)
    return True


def symmetric_difference_size(first: Matching, second: Matching) -> int:
    """
    Size of the symmetric difference of two matchings of the same graph.

    Args:
        first: A matching.
        second: A matching of the same graph.

    Returns:
        ``|first| + |second| - 2 |first ∩ second|``.

    Raises:
        UsageError: If the matchings belong to different graphs.
    """
    if first.graph is not second.graph and first.graph != second.graph:
        raise UsageError("matchings refer to different graphs")
    return len(first.edge_ids ^ second.edge_ids)


def matching_vertices(matching: Matching) -> List[int]:
    """Endpoints V(M) of a matching, in ascending order."""
    return sorted(vertex for edge in matching.edge_pairs() for vertex in edge)


def detect_bipartition(graph: Graph) -> Optional[Bipartition]:
    """
    Two-colour the vertices of a graph if it has no odd cycle.

    The first vertex of every component with edges (by index) goes to side A;
    isolated vertices go to side B.

    Args:
        graph: The graph to colour.

    Returns:
        A valid bipartition, or None if the graph is not bipartite.
    """
    try:
        colors = nx.bipartite.color(graph.to_networkx())
    except nx.NetworkXError:
        return None
    return Bipartition(tuple(Side.A if colors[v] == 1 else Side.B for v in range(graph.vertex_count)))
