"""
Polynomial-time solver for bipartite graphs.

Both parts are padded to a common size n. The derived multigraph G′ is the
complete bipartite graph on the padded parts in which every edge of G
appears twice (weights 1 and 0) and every non-adjacent cross pair appears
twice with weight −n. A maximum-weight 2-factor of G′ has weight
``|M₁ ∪ M₂| − 2n(n − μ)`` for a pair of maximum matchings maximising the
union, and the best diversity over pairs of maximum matchings is
``2(|M₁ ∪ M₂| − μ)``. The pair itself is read off the 2-factor by
alternately colouring its (even) cycles.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from divmatch.errors import DivMatchError, UsageError
from divmatch.graph.core import Bipartition, Graph, Matching, Side, detect_bipartition, symmetric_difference_size
from divmatch.logging import get_logger
from divmatch.matching.engine import (
    TIE_BREAK_EDGE_LIMIT,
    TwoFactor,
    WeightedMultigraph,
    is_two_factor,
    max_weight_two_factor,
    maximum_matching,
)
from divmatch.solvers.interface import DiversePairSolver
from divmatch.solvers.outcome import MatchingPair, SolveMode, SolveOutcome, Variant, check_certificate, no, yes


logger = get_logger(__name__)


class WeightClass(str, Enum):
    ONE = "one"
    ZERO = "zero"
    MINUS_N = "minus_n"


@dataclass(frozen=True)
class GPrimeConstruction:
    """
    The derived multigraph G′ together with its provenance.

    Attributes:
        graph: The original graph G.
        multigraph: G′; vertices ``0..|V(G)|-1`` are those of G, padding follows.
        part_size: n, the common size of both padded parts.
        origin: For every multigraph edge, the original edge identifier
            (None for fillers) and its weight class.
        padding: Indices of the padding vertices.
    """

    graph: Graph
    multigraph: WeightedMultigraph
    part_size: int
    origin: Tuple[Tuple[Optional[int], WeightClass], ...]
    padding: Tuple[int, ...]


@dataclass(frozen=True)
class BipartiteAnalysis:
    """
    Exact optimum of a bipartite instance.

    Attributes:
        matching_number: μ(G).
        two_factor: The maximum-weight 2-factor of G′.
        union_size: ``|M₁* ∪ M₂*|`` derived from the 2-factor weight.
        diversity: The best diversity over pairs of maximum matchings.
        pair: A pair of maximum matchings attaining ``diversity``.
    """

    matching_number: int
    two_factor: TwoFactor
    union_size: int
    diversity: int
    pair: MatchingPair


def build_gprime(graph: Graph, parts: Bipartition) -> GPrimeConstruction:
    """
    Build the doubled complete bipartite multigraph G′.

    Args:
        graph: A bipartite graph.
        parts: A bipartition of ``graph``.

    Returns:
        The construction with 2n² edges.

    Raises:
        UsageError: If ``parts`` is not a valid bipartition of ``graph``.
    """
    if not parts.is_valid_for(graph):
        raise UsageError("graph is not bipartite under the given parts")

    side_a = parts.part(Side.A)
    side_b = parts.part(Side.B)
    n = max(len(side_a), len(side_b))

    padding = list(range(graph.vertex_count, graph.vertex_count + abs(len(side_a) - len(side_b))))
    padding_side = Side.A if len(side_a) < len(side_b) else Side.B
    if padding_side is Side.A:
        side_a = side_a + padding
    else:
        side_b = side_b + padding

    side = list(parts.side) + [padding_side] * len(padding)

    edges: List[Tuple[int, int, int]] = []
    origin: List[Tuple[Optional[int], WeightClass]] = []
    for a in side_a:
        for b in side_b:
            if a < graph.vertex_count and b < graph.vertex_count and graph.has_edge(a, b):
                edge_id = graph.edge_id(a, b)
                edges.append((a, b, 1))
                origin.append((edge_id, WeightClass.ONE))
                edges.append((a, b, 0))
                origin.append((edge_id, WeightClass.ZERO))
            else:
                edges.extend([(a, b, -n), (a, b, -n)])
                origin.extend([(None, WeightClass.MINUS_N), (None, WeightClass.MINUS_N)])

    multigraph = WeightedMultigraph(graph.vertex_count + len(padding), tuple(side), tuple(edges))
    logger.debug(f"Built G′: part size {n}, {len(padding)} padding vertices, {len(edges)} edges")
    return GPrimeConstruction(graph, multigraph, n, tuple(origin), tuple(padding))


def reconstruct_pair(construction: GPrimeConstruction, two_factor: TwoFactor) -> MatchingPair:
    """
    Split a 2-factor of G′ into two matchings of G.

    Every cycle is walked from its lowest-identifier edge, which goes to the
    first class; classes then alternate along the cycle. Filler edges are
    dropped and both classes are mapped back to original edges.

    Args:
        construction: The G′ construction.
        two_factor: A 2-factor of ``construction.multigraph``.

    Returns:
        The two matchings of the original graph.

    Raises:
        UsageError: If ``two_factor`` is not a 2-factor of the multigraph.
    """
    h = construction.multigraph
    if not is_two_factor(h, two_factor.edge_ids):
        raise UsageError("edge set is not a 2-factor of G′")

    incident: Dict[int, List[int]] = {vertex: [] for vertex in range(h.vertex_count)}
    for edge_id in two_factor.edge_ids:
        u, v, _ = h.edges[edge_id]
        incident[u].append(edge_id)
        incident[v].append(edge_id)

    classes: Tuple[List[int], List[int]] = ([], [])
    visited = set()
    for start in sorted(two_factor.edge_ids):
        if start in visited:
            continue
        current, vertex, parity = start, h.edges[start][1], 0
        while True:
            visited.add(current)
            original, _ = construction.origin[current]
            if original is not None:
                classes[parity].append(original)
            following = next(e for e in incident[vertex] if e != current)
            if following == start:
                break
            u, v, _ = h.edges[following]
            vertex = v if u == vertex else u
            current, parity = following, 1 - parity

    graph = construction.graph
    return Matching(graph, frozenset(classes[0])), Matching(graph, frozenset(classes[1]))


def analyze_bipartite(graph: Graph, parts: Optional[Bipartition] = None,
                      tie_break_edge_limit: int = TIE_BREAK_EDGE_LIMIT) -> BipartiteAnalysis:
    """
    Compute the best diversity over pairs of maximum matchings exactly.

    Args:
        graph: A bipartite graph.
        parts: Its bipartition; detected when omitted.
        tie_break_edge_limit: Largest edge count for exact tie-breaking.

    Returns:
        The optimum together with a pair attaining it.

    Raises:
        UsageError: If the graph is not bipartite.
    """
    if parts is None:
        parts = detect_bipartition(graph)
        if parts is None:
            raise UsageError("graph is not bipartite")

    mu = len(maximum_matching(graph, tie_break_edge_limit))
    construction = build_gprime(graph, parts)
    two_factor = max_weight_two_factor(construction.multigraph, tie_break_edge_limit)
    if two_factor is None:
        raise DivMatchError("G′ has no 2-factor; the construction is inconsistent")

    n = construction.part_size
    union_size = two_factor.weight + 2 * n * (n - mu)
    diversity = 2 * (union_size - mu)

    pair = reconstruct_pair(construction, two_factor)
    if len(pair[0]) != mu or len(pair[1]) != mu or symmetric_difference_size(*pair) != diversity:
        raise DivMatchError(
            f"reconstructed pair (sizes {len(pair[0])}, {len(pair[1])}, diversity "
            f"{symmetric_difference_size(*pair)}) disagrees with the 2-factor optimum {diversity}"
        )
    logger.info(f"Bipartite optimum: μ={mu}, 2-factor weight={two_factor.weight}, diversity={diversity}")
    return BipartiteAnalysis(mu, two_factor, union_size, diversity, pair)


def solve_bipartite(graph: Graph, k: int, variant: Variant = Variant.MAXIMUM,
                    parts: Optional[Bipartition] = None,
                    tie_break_edge_limit: int = TIE_BREAK_EDGE_LIMIT) -> SolveOutcome:
    """
    Decide a bipartite instance exactly.

    Args:
        graph: A bipartite graph.
        k: The diversity target.
        variant: MAXIMUM or PERFECT.
        parts: Its bipartition; detected when omitted.
        tie_break_edge_limit: Largest edge count for exact tie-breaking.

    Returns:
        YES with a certified pair, or NO with the optimum as ``diversity``.

    Raises:
        UsageError: If the graph is not bipartite or the variant is unsupported.
    """
    if variant is Variant.ANY_MATCHING:
        raise UsageError("the bipartite solver handles the maximum and perfect variants only")
    if parts is None:
        parts = detect_bipartition(graph)
        if parts is None:
            raise UsageError("graph is not bipartite")

    if graph.edge_count == 0:
        empty = Matching(graph, frozenset())
        if variant is Variant.PERFECT and graph.vertex_count > 0:
            return no(SolveMode.BIPARTITE, reason="no perfect matching")
        if k <= 0:
            return yes((empty, empty), SolveMode.BIPARTITE)
        return no(SolveMode.BIPARTITE, diversity=0)

    if variant is Variant.PERFECT:
        mu = len(maximum_matching(graph, tie_break_edge_limit))
        if 2 * mu != graph.vertex_count:
            return no(SolveMode.BIPARTITE, reason="no perfect matching")

    analysis = analyze_bipartite(graph, parts, tie_break_edge_limit)
    if analysis.diversity < k:
        return no(SolveMode.BIPARTITE, diversity=analysis.diversity)

    check_certificate(graph, analysis.pair, k, variant, analysis.matching_number)
    return yes(analysis.pair, SolveMode.BIPARTITE)


class BipartiteSolver(DiversePairSolver):
    """Exact solver for bipartite inputs via maximum-weight 2-factors."""

    def solve(self, graph: Graph, k: int, variant: Variant = Variant.MAXIMUM) -> SolveOutcome:
        self.logger.info(f"Solving bipartite instance n={graph.vertex_count}, m={graph.edge_count}, k={k}")
        return solve_bipartite(graph, k, variant, tie_break_edge_limit=self.tie_break_edge_limit)
