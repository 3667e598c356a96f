"""
Exact matching subroutines.

This module provides maximum-cardinality matching and minimum-cost maximum
matching on general graphs (both through the networkx weighted blossom
algorithm) and maximum-weight 2-factors of bipartite multigraphs (through
a network-simplex transportation problem).

Ties between optimal solutions are broken towards the lexicographically
smallest sorted edge-identifier sequence. The rule is enforced exactly by
adding a bonus of ``2^(m-1-id)`` below a scale of ``2^m`` to every edge
weight, which is done for instances with at most ``tie_break_edge_limit``
edges; larger instances keep the deterministic order of the underlying
solvers.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import networkx as nx

from divmatch.errors import UsageError
from divmatch.graph.core import Graph, Matching, Side
from divmatch.logging import get_logger


logger = get_logger(__name__)

TIE_BREAK_EDGE_LIMIT = 64

WeightedEdge = Tuple[int, int, int]


@dataclass(frozen=True)
class CostFunction:
    """
    A 0/1 cost on every edge of a graph.

    Attributes:
        graph: The graph whose edges are priced.
        costs: Cost of every edge, indexed by edge identifier.
    """

    graph: Graph
    costs: Tuple[int, ...]

    def __post_init__(self):
        costs = tuple(int(c) for c in self.costs)
        if len(costs) != self.graph.edge_count:
            raise UsageError(f"cost function covers {len(costs)} edges, graph has {self.graph.edge_count}")
        if any(c not in (0, 1) for c in costs):
            raise UsageError("costs must be 0 or 1")
        object.__setattr__(self, "costs", costs)

    @classmethod
    def zero(cls, graph: Graph) -> "CostFunction":
        return cls(graph, (0,) * graph.edge_count)

    @classmethod
    def indicator(cls, graph: Graph, expensive: Iterable[int]) -> "CostFunction":
        """Cost 1 on the given edge identifiers and 0 elsewhere."""
        expensive = set(expensive)
        for edge_id in expensive:
            graph.check_edge_id(edge_id)
        return cls(graph, tuple(1 if edge_id in expensive else 0 for edge_id in range(graph.edge_count)))

    def cost_of(self, edge_ids: Iterable[int]) -> int:
        return sum(self.costs[edge_id] for edge_id in edge_ids)


@dataclass(frozen=True)
class WeightedMultigraph:
    """
    A bipartite multigraph with signed integer edge weights.

    Attributes:
        vertex_count: Number of vertices.
        side: Side of every vertex.
        edges: ``(u, v, weight)`` triples indexed by edge identifier;
            parallel edges are allowed.
    """

    vertex_count: int
    side: Tuple[Side, ...]
    edges: Tuple[WeightedEdge, ...]

    def __post_init__(self):
        if len(self.side) != self.vertex_count:
            raise UsageError(f"side map has {len(self.side)} entries for {self.vertex_count} vertices")
        for edge_id, (u, v, _) in enumerate(self.edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise UsageError(f"edge {edge_id} has an endpoint out of range")
            if self.side[u] is self.side[v]:
                raise UsageError(f"edge {edge_id} = ({u}, {v}) does not cross the bipartition")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def weight_of(self, edge_ids: Iterable[int]) -> int:
        return sum(self.edges[edge_id][2] for edge_id in edge_ids)


@dataclass(frozen=True)
class TwoFactor:
    """
    A degree-exactly-2 edge set of a weighted multigraph.

    Attributes:
        edge_ids: Selected edge identifiers in ascending order.
        weight: Sum of the selected edge weights.
    """

    edge_ids: Tuple[int, ...]
    weight: int


def is_two_factor(h: WeightedMultigraph, edge_ids: Sequence[int]) -> bool:
    """
    Check that every vertex of ``h`` has degree exactly 2 in ``edge_ids``.

    Raises:
        UsageError: If an identifier is not an edge of ``h`` or repeats.
    """
    if len(set(edge_ids)) != len(edge_ids):
        raise UsageError("2-factor repeats an edge identifier")
    degree = [0] * h.vertex_count
    for edge_id in edge_ids:
        if not 0 <= edge_id < h.edge_count:
            raise UsageError(f"unknown multigraph edge identifier {edge_id}")
        u, v, _ = h.edges[edge_id]
        degree[u] += 1
        degree[v] += 1
    return all(d == 2 for d in degree)


def _tie_break(edge_count: int, limit: int) -> Tuple[int, Sequence[int]]:
    if edge_count > limit:
        return 1, [0] * edge_count
    return 1 << edge_count, [1 << (edge_count - 1 - edge_id) for edge_id in range(edge_count)]


def min_cost_maximum_matching(graph: Graph, cost: CostFunction,
                              tie_break_edge_limit: int = TIE_BREAK_EDGE_LIMIT) -> Matching:
    """
    Find a maximum matching of minimum total cost.

    Every edge receives weight ``W - c(e)`` with ``W = n + 1``, so a
    maximum-weight matching is first of maximum cardinality and then of
    minimum cost.

    Args:
        graph: The graph.
        cost: A 0/1 cost function on the edges of ``graph``.
        tie_break_edge_limit: Largest edge count for exact lexicographic tie-breaking.

    Returns:
        A maximum matching minimising the total cost.

    Raises:
        UsageError: If ``cost`` belongs to another graph.
    """
    if cost.graph is not graph and cost.graph != graph:
        raise UsageError("cost function belongs to a different graph")
    if graph.edge_count == 0:
        return Matching(graph, frozenset())

    big_w = graph.vertex_count + 1
    scale, bonus = _tie_break(graph.edge_count, tie_break_edge_limit)

    nx_graph = nx.Graph()
    for edge_id, (u, v) in enumerate(graph.edges):
        nx_graph.add_edge(u, v, weight=(big_w - cost.costs[edge_id]) * scale + bonus[edge_id])

    mate_pairs = nx.max_weight_matching(nx_graph, maxcardinality=True, weight="weight")
    return Matching(graph, frozenset(graph.edge_id(u, v) for u, v in mate_pairs))


def maximum_matching(graph: Graph, tie_break_edge_limit: int = TIE_BREAK_EDGE_LIMIT) -> Matching:
    """
    Find a maximum-cardinality matching.

    Args:
        graph: The graph.
        tie_break_edge_limit: Largest edge count for exact lexicographic tie-breaking.

    Returns:
        A matching of cardinality μ(graph).
    """
    return min_cost_maximum_matching(graph, CostFunction.zero(graph), tie_break_edge_limit)


def max_weight_two_factor(h: WeightedMultigraph,
                          tie_break_edge_limit: int = TIE_BREAK_EDGE_LIMIT) -> Optional[TwoFactor]:
    """
    Find a maximum-weight 2-factor of a bipartite multigraph.

    Each side-A vertex supplies two units of flow and each side-B vertex
    demands two; every edge is an arc of capacity 1 from its A endpoint to
    its B endpoint with cost equal to its negated weight. An integral
    minimum-cost flow is exactly a maximum-weight 2-factor.

    Args:
        h: The bipartite multigraph.
        tie_break_edge_limit: Largest edge count for exact lexicographic tie-breaking.

    Returns:
        The optimal 2-factor, or None if ``h`` has no 2-factor.
    """
    if h.vertex_count == 0:
        return TwoFactor((), 0)

    scale, bonus = _tie_break(h.edge_count, tie_break_edge_limit)

    network = nx.MultiDiGraph()
    for vertex in range(h.vertex_count):
        network.add_node(vertex, demand=-2 if h.side[vertex] is Side.A else 2)
    for edge_id, (u, v, weight) in enumerate(h.edges):
        tail, head = (u, v) if h.side[u] is Side.A else (v, u)
        network.add_edge(tail, head, key=edge_id, capacity=1, weight=-(weight * scale + bonus[edge_id]))

    try:
        _, flow = nx.network_simplex(network)
    except nx.NetworkXUnfeasible:
        logger.debug("Multigraph has no 2-factor")
        return None

    selected = sorted(
        key
        for tail, heads in flow.items()
        for keyed in heads.values()
        for key, amount in keyed.items()
        if amount > 0
    )
    return TwoFactor(tuple(selected), h.weight_of(selected))
