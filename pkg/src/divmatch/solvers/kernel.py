"""
Quadratic vertex kernel for diverse pairs of (unconstrained) matchings.

A greedy maximal matching M either already yields two matchings with
symmetric difference ``|M| >= k`` (split M in two), or it has fewer than k
edges. In the second case V(M) is a vertex cover of size below 2k, and
keeping V(M) plus at most 2k outside neighbours of each of its vertices
gives an equivalent instance on fewer than 4k² vertices.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional, Tuple

from divmatch.errors import UsageError
from divmatch.graph.core import Graph, Matching, matching_vertices
from divmatch.logging import get_logger
from divmatch.matching.engine import TIE_BREAK_EDGE_LIMIT, maximum_matching
from divmatch.solvers.interface import DiversePairSolver
from divmatch.solvers.oracle import MAX_EDGES, max_diversity_pair
from divmatch.solvers.outcome import MatchingPair, SolveMode, SolveOutcome, Variant, check_certificate, no, yes


logger = get_logger(__name__)


class KernelOutcome(str, Enum):
    IMMEDIATE_YES = "immediate_yes"
    REDUCED = "reduced"


@dataclass(frozen=True)
class KernelResult:
    """
    Result of kernelizing an instance (G, k).

    Attributes:
        outcome: IMMEDIATE_YES or REDUCED.
        k: The diversity target.
        maximal_matching: The greedy maximal matching M.
        certificate: Split of M for IMMEDIATE_YES.
        marked: The marked vertex set X in ascending order (REDUCED only).
        kernel_graph: G[X] (REDUCED only).
        relabel: Map from vertices of G to vertices of G[X].
    """

    outcome: KernelOutcome
    k: int
    maximal_matching: Matching
    certificate: Optional[MatchingPair] = None
    marked: Tuple[int, ...] = ()
    kernel_graph: Optional[Graph] = None
    relabel: Mapping[int, int] = field(default_factory=dict)

    @property
    def size_bound(self) -> int:
        return 4 * self.k * self.k

    @property
    def within_bound(self) -> bool:
        return len(self.marked) < self.size_bound

    def lift(self, matching: Matching) -> Matching:
        """Map a matching of the kernel graph back to the original graph."""
        if self.kernel_graph is None:
            raise UsageError("only reduced instances have a kernel graph")
        original = self.maximal_matching.graph
        return Matching(
            original,
            frozenset(original.edge_id(self.marked[u], self.marked[v]) for u, v in matching.edge_pairs()),
        )


def greedy_maximal_matching(graph: Graph) -> Matching:
    """
    Scan the edges in identifier order and keep every edge whose endpoints are free.

    Returns:
        A maximal matching; its endpoints form a vertex cover.
    """
    covered = set()
    selected = []
    for edge_id, (u, v) in enumerate(graph.edges):
        if u in covered or v in covered:
            continue
        covered.update((u, v))
        selected.append(edge_id)
    return Matching(graph, frozenset(selected))


def _split(matching: Matching) -> MatchingPair:
    ordered = matching.sorted_ids()
    graph = matching.graph
    return Matching(graph, frozenset(ordered[0::2])), Matching(graph, frozenset(ordered[1::2]))


def kernelize(graph: Graph, k: int) -> KernelResult:
    """
    Reduce (G, k) to an equivalent instance on fewer than 4k² vertices.

    Args:
        graph: The graph.
        k: The diversity target, at least 1.

    Returns:
        IMMEDIATE_YES with a certificate when the greedy maximal matching has
        at least k edges, otherwise REDUCED with X and G[X].

    Raises:
        UsageError: If k < 1.
    """
    if k < 1:
        raise UsageError(f"kernelize needs k >= 1, got {k}")

    maximal = greedy_maximal_matching(graph)
    if len(maximal) >= k:
        certificate = _split(maximal)
        check_certificate(graph, certificate, k, Variant.ANY_MATCHING)
        logger.info(f"Greedy maximal matching has {len(maximal)} >= k = {k} edges")
        return KernelResult(KernelOutcome.IMMEDIATE_YES, k, maximal, certificate=certificate)

    cover = matching_vertices(maximal)
    in_cover = set(cover)
    marked = set(cover)
    for vertex in cover:
        outside = [w for w in graph.neighbors(vertex) if w not in in_cover]
        marked.update(sorted(outside)[:2 * k])

    kernel_graph, relabel = graph.induced_subgraph(marked)
    result = KernelResult(
        KernelOutcome.REDUCED,
        k,
        maximal,
        marked=tuple(sorted(marked)),
        kernel_graph=kernel_graph,
        relabel=relabel,
    )
    logger.info(f"Kernel: |X| = {len(marked)} (bound {result.size_bound}), {kernel_graph.edge_count} edges")
    return result


def solve_any_matching(graph: Graph, k: int, max_edges: int = MAX_EDGES,
                       tie_break_edge_limit: int = TIE_BREAK_EDGE_LIMIT) -> SolveOutcome:
    """
    Decide the unconstrained variant through the kernel.

    Args:
        graph: The graph.
        k: The diversity target.
        max_edges: Oracle size guard applied to the kernel graph.
        tie_break_edge_limit: Largest edge count for exact tie-breaking.

    Returns:
        The outcome, with certificates on the original graph.

    Raises:
        UsageError: If the kernel graph exceeds the oracle guard.
    """
    mode = SolveMode.KERNEL_SPLIT
    empty = Matching(graph, frozenset())
    if k <= 0:
        return yes((empty, empty), mode)

    matching = maximum_matching(graph, tie_break_edge_limit)
    if len(matching) >= k:
        return yes((matching, empty), mode)

    result = kernelize(graph, k)
    if result.outcome is KernelOutcome.IMMEDIATE_YES:
        return yes(result.certificate, mode)

    optimum = max_diversity_pair(result.kernel_graph, Variant.ANY_MATCHING, max_edges)
    if optimum.value < k:
        return no(mode, reason=f"kernel optimum {optimum.value} is below k")
    pair = (result.lift(optimum.pair[0]), result.lift(optimum.pair[1]))
    check_certificate(graph, pair, k, Variant.ANY_MATCHING)
    return yes(pair, mode)


class KernelSolver(DiversePairSolver):
    """Kernel-then-enumerate solver for the unconstrained variant."""

    supported_variants = (Variant.ANY_MATCHING,)

    def solve(self, graph: Graph, k: int, variant: Variant = Variant.ANY_MATCHING) -> SolveOutcome:
        if not self.supports(variant):
            raise UsageError("the kernel applies to the any_matching variant only")
        self.logger.info(f"Solving n={graph.vertex_count}, m={graph.edge_count}, k={k} via the kernel")
        return solve_any_matching(graph, k, self.config["oracle"]["max_edges"], self.tie_break_edge_limit)
