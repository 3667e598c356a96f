"""
Brute-force ground truth.

Matchings are enumerated by branch-and-bound over the edges in identifier
order (include / exclude, pruning edges whose endpoints are taken) and kept
as integer bitsets. The edge-count guard is a hard error: the oracle never
answers approximately.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from divmatch.errors import UsageError
from divmatch.graph.core import Graph, Matching
from divmatch.logging import get_logger
from divmatch.solvers.interface import DiversePairSolver
from divmatch.solvers.outcome import (
    Decision,
    MatchingPair,
    SolveMode,
    SolveOutcome,
    Variant,
    check_certificate,
    no,
    yes,
)


logger = get_logger(__name__)

MAX_EDGES = 24


@dataclass(frozen=True)
class OracleOptimum:
    """
    Exact optimum of one matching class.

    Attributes:
        value: Largest symmetric difference over pairs from the class, or
            None when the class is empty (no perfect matching).
        pair: A pair attaining ``value``.
        class_size: Number of matchings in the class.
    """

    value: Optional[int]
    pair: Optional[MatchingPair]
    class_size: int

    @property
    def infeasible(self) -> bool:
        return self.value is None


def _check_size(graph: Graph, max_edges: int) -> None:
    if graph.edge_count > max_edges:
        raise UsageError(f"oracle handles at most {max_edges} edges, graph has {graph.edge_count}")


def _matching_masks(graph: Graph) -> List[int]:
    edges = graph.edges
    masks: List[int] = []

    def branch(index: int, mask: int, covered: int) -> None:
        if index == len(edges):
            masks.append(mask)
            return
        u, v = edges[index]
        if not (covered >> u & 1 or covered >> v & 1):
            branch(index + 1, mask | 1 << index, covered | 1 << u | 1 << v)
        branch(index + 1, mask, covered)

    branch(0, 0, 0)
    return masks


def _class_masks(graph: Graph, variant: Variant, max_edges: int) -> List[int]:
    _check_size(graph, max_edges)
    masks = _matching_masks(graph)
    if variant is Variant.MAXIMUM:
        mu = max(mask.bit_count() for mask in masks)
        masks = [mask for mask in masks if mask.bit_count() == mu]
    elif variant is Variant.PERFECT:
        masks = [mask for mask in masks if 2 * mask.bit_count() == graph.vertex_count]
    return masks


def _to_matching(graph: Graph, mask: int) -> Matching:
    return Matching(graph, frozenset(e for e in range(graph.edge_count) if mask >> e & 1))


def enumerate_matchings(graph: Graph, variant: Variant = Variant.ANY_MATCHING,
                        max_edges: int = MAX_EDGES) -> List[Matching]:
    """
    List every matching of a class.

    Args:
        graph: The graph.
        variant: ANY_MATCHING, MAXIMUM (cardinality μ) or PERFECT (2|M| = n).
        max_edges: Size guard on the number of edges.

    Returns:
        The matchings, without duplicates, ordered by their sorted edge
        identifiers.

    Raises:
        UsageError: If the graph has more than ``max_edges`` edges.
    """
    masks = _class_masks(graph, variant, max_edges)
    matchings = [_to_matching(graph, mask) for mask in masks]
    return sorted(matchings, key=lambda matching: matching.sorted_ids())


def max_diversity_pair(graph: Graph, variant: Variant = Variant.ANY_MATCHING,
                       max_edges: int = MAX_EDGES) -> OracleOptimum:
    """
    Compute the largest symmetric difference over pairs from a class.

    Args:
        graph: The graph.
        variant: The matching class.
        max_edges: Size guard on the number of edges.

    Returns:
        The optimum with a witnessing pair; value 0 with ``(M, M)`` when the
        class has a single member, and value None when it is empty.

    Raises:
        UsageError: If the graph has more than ``max_edges`` edges.
    """
    masks = sorted(_class_masks(graph, variant, max_edges), key=lambda mask: -mask.bit_count())
    if not masks:
        logger.debug(f"Oracle: {variant.value} class is empty")
        return OracleOptimum(None, None, 0)

    sizes = [mask.bit_count() for mask in masks]
    best, best_pair = 0, (masks[0], masks[0])
    for i, first in enumerate(masks):
        if i + 1 < len(masks) and sizes[i] + sizes[i + 1] <= best:
            break
        for j in range(i + 1, len(masks)):
            if sizes[i] + sizes[j] <= best:
                break
            value = (first ^ masks[j]).bit_count()
            if value > best:
                best, best_pair = value, (first, masks[j])

    pair = (_to_matching(graph, best_pair[0]), _to_matching(graph, best_pair[1]))
    logger.debug(f"Oracle: {len(masks)} matchings in the {variant.value} class, optimum {best}")
    return OracleOptimum(best, pair, len(masks))


def decide(graph: Graph, k: int, variant: Variant = Variant.ANY_MATCHING,
           max_edges: int = MAX_EDGES) -> Decision:
    """YES iff two matchings of the class differ in at least ``k`` edges."""
    optimum = max_diversity_pair(graph, variant, max_edges)
    if optimum.infeasible or optimum.value < k:
        return Decision.NO
    return Decision.YES


def solve_oracle(graph: Graph, k: int, variant: Variant = Variant.MAXIMUM,
                 max_edges: int = MAX_EDGES) -> SolveOutcome:
    """
    Decide an instance by enumeration.

    Returns:
        YES with the optimal pair, or NO; the optimum is reported as
        ``diversity`` either way (None when the class is empty).
    """
    optimum = max_diversity_pair(graph, variant, max_edges)
    if optimum.infeasible:
        return no(SolveMode.ORACLE, reason="no perfect matching")
    if optimum.value < k:
        return no(SolveMode.ORACLE, diversity=optimum.value)
    check_certificate(graph, optimum.pair, k, variant, len(optimum.pair[0]))
    return yes(optimum.pair, SolveMode.ORACLE)


class OracleSolver(DiversePairSolver):
    """Exhaustive solver for desk-size instances."""

    supported_variants = (Variant.ANY_MATCHING, Variant.MAXIMUM, Variant.PERFECT)

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__(config)
        self.max_edges = self.config["oracle"]["max_edges"]

    def solve(self, graph: Graph, k: int, variant: Variant = Variant.MAXIMUM) -> SolveOutcome:
        self.logger.info(f"Enumerating n={graph.vertex_count}, m={graph.edge_count}, variant={variant.value}")
        return solve_oracle(graph, k, variant, self.max_edges)
