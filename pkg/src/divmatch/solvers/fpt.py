"""
Colour-coding solvers for general graphs.

This module provides the randomized and the derandomized algorithm for
deciding whether a graph has two maximum (or perfect) matchings with
symmetric difference at least k.

Both start from a fixed maximum matching M and a base check that finds the
maximum matching farthest from M. If the base check fails, every pair of
maximum matchings is within twice the base-check optimum of each other, so
only colourings that are good on that many edges need to be tried. Each
colouring splits the edges into red and blue; one min-cost maximum matching
is pulled onto the red edges and one onto the blue edges.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Union

import numpy as np

from divmatch.errors import UsageError
from divmatch.graph.core import Graph, Matching, symmetric_difference_size
from divmatch.logging import get_logger
from divmatch.matching.engine import TIE_BREAK_EDGE_LIMIT, CostFunction, maximum_matching, min_cost_maximum_matching
from divmatch.solvers.interface import DiversePairSolver
from divmatch.solvers.outcome import SolveMode, SolveOutcome, Variant, check_certificate, no, yes
from divmatch.solvers.universal import (
    PROVEN_SIZE_LIMIT,
    UniversalFamily,
    construct_universal,
    linear_family,
    linear_family_size,
    power_set_family,
)


logger = get_logger(__name__)

MAX_DEFAULT_TRIALS = 1 << 16
EXHAUSTIVE_EDGE_LIMIT = 20
ROUNDS_PER_THREAD = 8


@dataclass(frozen=True)
class EdgeColoring:
    """
    A red/blue colouring of the edges of a graph.

    Attributes:
        graph: The coloured graph.
        red: Identifiers of the red edges; every other edge is blue.
    """

    graph: Graph
    red: FrozenSet[int]

    def __post_init__(self):
        for edge_id in self.red:
            self.graph.check_edge_id(edge_id)

    @classmethod
    def from_bitset(cls, graph: Graph, bitset: int, ground: Optional[Sequence[int]] = None) -> "EdgeColoring":
        """
        Colour ``ground[i]`` red when bit i of ``bitset`` is set.

        Edges outside ``ground`` (all edges by default) are blue.
        """
        if ground is None:
            ground = range(graph.edge_count)
        return cls(graph, frozenset(edge_id for i, edge_id in enumerate(ground) if bitset >> i & 1))

    @classmethod
    def random(cls, graph: Graph, seed: int, trial_index: int) -> "EdgeColoring":
        """Uniform colouring drawn from a generator keyed by ``(seed, trial_index)``."""
        rng = np.random.default_rng([seed, trial_index])
        red = rng.random(graph.edge_count) < 0.5
        return cls(graph, frozenset(int(e) for e in np.flatnonzero(red)))

    @property
    def blue(self) -> FrozenSet[int]:
        return frozenset(range(self.graph.edge_count)) - self.red

    def is_red(self, edge_id: int) -> bool:
        return edge_id in self.red


@dataclass(frozen=True)
class Bounded:
    """
    Result of a failed base check.

    Attributes:
        best_diversity: ``max |M △ M′|`` over maximum matchings M′; smaller
            than the target, and half an upper bound on any pair's diversity.
    """

    best_diversity: int


def _require_same_graph(graph: Graph, matching: Matching) -> None:
    if matching.graph is not graph and matching.graph != graph:
        raise UsageError("matching belongs to a different graph")


def normalize_target(k: int) -> int:
    """Round an odd target up; pairs of equal-size matchings have even diversity."""
    return k + 1 if k % 2 else k


def default_trials(k: int, max_default_trials: int = MAX_DEFAULT_TRIALS) -> int:
    """``2^(2k)`` capped at ``max_default_trials``."""
    return min(1 << (2 * k), max_default_trials)


def base_check(graph: Graph, matching: Matching, k: int, mode: SolveMode = SolveMode.DETERMINISTIC,
               tie_break_edge_limit: int = TIE_BREAK_EDGE_LIMIT) -> Union[SolveOutcome, Bounded]:
    """
    Find the maximum matching farthest from ``matching``.

    Every edge of ``matching`` costs 1 and every other edge 0, so a min-cost
    maximum matching M′ maximises ``|M △ M′|`` over maximum matchings.

    Args:
        graph: The graph.
        matching: A maximum matching M of ``graph``.
        k: The diversity target.
        mode: Mode recorded in a YES outcome.
        tie_break_edge_limit: Largest edge count for exact tie-breaking.

    Returns:
        YES with ``(M, M′)`` when ``|M △ M′| >= k``, otherwise ``Bounded``.

    Raises:
        UsageError: If ``matching`` is not a maximum matching of ``graph``.
    """
    _require_same_graph(graph, matching)
    mu = len(maximum_matching(graph, tie_break_edge_limit))
    if len(matching) != mu:
        raise UsageError(f"matching of size {len(matching)} is not maximum (μ = {mu})")

    farthest = min_cost_maximum_matching(
        graph, CostFunction.indicator(graph, matching.edge_ids), tie_break_edge_limit
    )
    best = symmetric_difference_size(matching, farthest)
    logger.info(f"Base check: farthest maximum matching at distance {best} (k={k})")
    if best >= k:
        check_certificate(graph, (matching, farthest), k, Variant.MAXIMUM, mu)
        return yes((matching, farthest), mode)
    return Bounded(best)


def coloring_round(graph: Graph, coloring: EdgeColoring, k: int, mode: SolveMode = SolveMode.RANDOMIZED,
                   tie_break_edge_limit: int = TIE_BREAK_EDGE_LIMIT) -> Optional[SolveOutcome]:
    """
    Try one colouring.

    M₁ is a min-cost maximum matching when blue edges cost 1, M₂ when red
    edges cost 1.

    Args:
        graph: The graph.
        coloring: A red/blue colouring of its edges.
        k: The diversity target.
        mode: Mode recorded in a YES outcome.
        tie_break_edge_limit: Largest edge count for exact tie-breaking.

    Returns:
        YES with ``(M₁, M₂)`` if ``|M₁ △ M₂| >= k``, else None.
    """
    if coloring.graph is not graph and coloring.graph != graph:
        raise UsageError("colouring belongs to a different graph")
    first = min_cost_maximum_matching(graph, CostFunction.indicator(graph, coloring.blue), tie_break_edge_limit)
    second = min_cost_maximum_matching(graph, CostFunction.indicator(graph, coloring.red), tie_break_edge_limit)
    if symmetric_difference_size(first, second) < k:
        return None
    check_certificate(graph, (first, second), k, Variant.MAXIMUM, len(first))
    return yes((first, second), mode)


def _first_success(graph: Graph, k: int, coloring_at: Callable[[int], EdgeColoring], rounds: int,
                   mode: SolveMode, threads: int, tie_break_edge_limit: int) -> SolveOutcome:
    """Run ``rounds`` colourings; the lowest succeeding round index wins."""

    def attempt(index: int) -> Optional[SolveOutcome]:
        return coloring_round(graph, coloring_at(index), k, mode, tie_break_edge_limit)

    if threads <= 1:
        for index in range(rounds):
            outcome = attempt(index)
            if outcome is not None:
                logger.info(f"Colouring {index} succeeded")
                return replace(outcome, trials_used=index + 1)
        return no(mode, trials_used=rounds)

    batch = threads * ROUNDS_PER_THREAD
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for start in range(0, rounds, batch):
            indices = range(start, min(start + batch, rounds))
            for index, outcome in zip(indices, pool.map(attempt, indices)):
                if outcome is not None:
                    logger.info(f"Colouring {index} succeeded")
                    return replace(outcome, trials_used=index + 1)
    return no(mode, trials_used=rounds)


def _prelude(graph: Graph, k: int, mode: SolveMode,
             tie_break_edge_limit: int) -> Union[SolveOutcome, Bounded]:
    """Shared opening of both solvers: trivial targets, parity, 2μ bound, base check."""
    matching = maximum_matching(graph, tie_break_edge_limit)
    if k <= 0:
        return yes((matching, matching), mode)

    target = normalize_target(k)
    if target > 2 * len(matching):
        return no(mode, reason=f"k exceeds 2μ = {2 * len(matching)}")

    bound = base_check(graph, matching, target, mode, tie_break_edge_limit)
    if isinstance(bound, SolveOutcome):
        return bound
    if 2 * bound.best_diversity < target:
        return no(mode, reason=f"base check bounds every pair by {2 * bound.best_diversity}")
    return bound


def solve_randomized(graph: Graph, k: int, seed: int = 0, trials: Optional[int] = None, threads: int = 1,
                     max_default_trials: int = MAX_DEFAULT_TRIALS,
                     tie_break_edge_limit: int = TIE_BREAK_EDGE_LIMIT) -> SolveOutcome:
    """
    Decide the maximum-matching variant by random colour coding.

    YES answers are always certified; a NO may be a false negative with
    probability at most ``(1 - 2^(-2k))^trials``.

    Args:
        graph: The graph.
        k: The diversity target; values below 1 are answered YES with ``(M, M)``.
        seed: Seed of the colouring generator.
        trials: Number of colourings; defaults to ``2^(2k)`` capped at
            ``max_default_trials``.
        threads: Worker threads for the colouring rounds.
        max_default_trials: Cap on the default trial count.
        tie_break_edge_limit: Largest edge count for exact tie-breaking.

    Returns:
        The outcome.
    """
    mode = SolveMode.RANDOMIZED
    opening = _prelude(graph, k, mode, tie_break_edge_limit)
    if isinstance(opening, SolveOutcome):
        return opening

    target = normalize_target(k)
    if trials is None:
        trials = default_trials(target, max_default_trials)
    logger.info(f"Running {trials} random colourings (seed={seed}, threads={threads})")
    return _first_success(
        graph, target, lambda index: EdgeColoring.random(graph, seed, index),
        trials, mode, threads, tie_break_edge_limit,
    )


def flexible_edges(graph: Graph) -> List[int]:
    """
    Edges lying in some but not in every maximum matching.

    Only these edges can appear in the symmetric difference of two maximum
    matchings, so colourings only need to vary on them.
    """
    mu = len(maximum_matching(graph, tie_break_edge_limit=0))
    others = range(graph.vertex_count)
    flexible = []
    for edge_id, (u, v) in enumerate(graph.edges):
        without_endpoints, _ = graph.induced_subgraph(w for w in others if w != u and w != v)
        if len(maximum_matching(without_endpoints, tie_break_edge_limit=0)) != mu - 1:
            continue
        without_edge = Graph.from_edges(graph.vertex_count, graph.edges[:edge_id] + graph.edges[edge_id + 1:])
        if len(maximum_matching(without_edge, tie_break_edge_limit=0)) == mu:
            flexible.append(edge_id)
    return flexible


def coloring_family(m: int, kappa: int, universal_config: Optional[Dict[str, Any]] = None) -> UniversalFamily:
    """
    Family of red sets swept by the deterministic solver.

    A family that could only be checked on a sample is replaced by the power
    set whenever ``m <= EXHAUSTIVE_EDGE_LIMIT``.
    """
    universal_config = universal_config or {}
    family = construct_universal(
        m,
        kappa,
        seed=universal_config.get("seed", 0),
        size_constant=universal_config.get("size_constant", 3),
        max_attempts=universal_config.get("max_attempts", 32),
        verify_budget=universal_config.get("verify_budget", 20_000_000),
        cache_dir=universal_config.get("cache_dir"),
    )
    if not family.verified and m <= EXHAUSTIVE_EDGE_LIMIT:
        logger.info(f"Sweeping all 2^{m} colourings instead of an unverified family")
        return power_set_family(m, kappa)
    return family


def _swept_members(family: UniversalFamily) -> Iterable[int]:
    # Swapping red and blue swaps M₁ and M₂, so the first ground edge may be fixed blue.
    if family.is_power_set:
        return family.members[::2]
    return family.members


def solve_deterministic(graph: Graph, k: int, universal_config: Optional[Dict[str, Any]] = None,
                        threads: int = 1, tie_break_edge_limit: int = TIE_BREAK_EDGE_LIMIT) -> SolveOutcome:
    """
    Decide the maximum-matching variant exactly.

    The colourings are the members of an (F, κ)-universal family over the
    flexible edges F with ``κ = min(2·d₀, |F|)``, where d₀ is the
    base-check optimum. The symmetric difference of any solution lies in F
    and has at most 2·d₀ edges, so some member colours it correctly.
    A NO from a family that was only verified on a sample is re-checked
    against the linear family of ``linear_family``; if that family exceeds
    ``proven_size_limit`` the NO is returned with ``exact=False``.

    Args:
        graph: The graph.
        k: The diversity target; values below 1 are answered YES with ``(M, M)``.
        universal_config: The ``universal`` configuration section.
        threads: Worker threads for the colouring rounds.
        tie_break_edge_limit: Largest edge count for exact tie-breaking.

    Returns:
        The outcome.
    """
    mode = SolveMode.DETERMINISTIC
    opening = _prelude(graph, k, mode, tie_break_edge_limit)
    if isinstance(opening, SolveOutcome):
        return opening

    target = normalize_target(k)
    ground = flexible_edges(graph)
    kappa = min(2 * opening.best_diversity, len(ground))
    family = coloring_family(len(ground), kappa, universal_config)
    members = list(_swept_members(family))
    logger.info(
        f"Sweeping {len(members)} colourings of a ({len(ground)}, {kappa})-universal family "
        f"over {len(ground)} of {graph.edge_count} edges"
    )
    outcome = _first_success(
        graph, target, lambda index: EdgeColoring.from_bitset(graph, members[index], ground),
        len(members), mode, threads, tie_break_edge_limit,
    )
    if outcome.is_yes or family.verified:
        return outcome

    # A sampled family may miss a colouring; settle the NO with a family that is universal by construction.
    swept = outcome.trials_used
    size = linear_family_size(len(ground), kappa)
    limit = (universal_config or {}).get("proven_size_limit", PROVEN_SIZE_LIMIT)
    if size is None or size > limit:
        logger.warning(
            f"NO from a ({len(ground)}, {kappa}) family verified on a sample only; "
            f"linear family size {size if size is not None else 'beyond GF(2^16)'} exceeds the limit {limit}"
        )
        return no(mode, trials_used=swept, reason="universal family verified on a sample only", exact=False)

    proven = linear_family(len(ground), kappa)
    logger.info(f"Sweeping {size // 2} colourings of the linear ({len(ground)}, {kappa}) family")
    # Members 2j and 2j+1 are complements.
    outcome = _first_success(
        graph, target, lambda index: EdgeColoring.from_bitset(graph, proven.member(2 * index), ground),
        size // 2, mode, threads, tie_break_edge_limit,
    )
    return replace(outcome, trials_used=swept + outcome.trials_used)


def solve_perfect(graph: Graph, k: int, mode: SolveMode = SolveMode.DETERMINISTIC, seed: int = 0,
                  **solver_kwargs) -> SolveOutcome:
    """
    Decide the perfect-matching variant.

    Args:
        graph: The graph.
        k: The diversity target.
        mode: RANDOMIZED or DETERMINISTIC.
        seed: Seed for the randomized solver.
        **solver_kwargs: Passed on to the chosen solver.

    Returns:
        NO with reason "no perfect matching" if the graph has none,
        otherwise the outcome of the maximum-matching solver.
    """
    limit = solver_kwargs.get("tie_break_edge_limit", TIE_BREAK_EDGE_LIMIT)
    mu = len(maximum_matching(graph, limit))
    if 2 * mu < graph.vertex_count:
        return no(mode, reason="no perfect matching")
    if mode is SolveMode.RANDOMIZED:
        return solve_randomized(graph, k, seed=seed, **solver_kwargs)
    if mode is SolveMode.DETERMINISTIC:
        return solve_deterministic(graph, k, **solver_kwargs)
    raise UsageError(f"solve_perfect supports randomized and deterministic modes, got {mode.value}")


class RandomizedSolver(DiversePairSolver):
    """Randomized colour-coding solver."""

    def __init__(self, config: Optional[Dict[str, Any]] = None, trials: Optional[int] = None):
        super().__init__(config)
        self.trials = trials

    def solve(self, graph: Graph, k: int, variant: Variant = Variant.MAXIMUM) -> SolveOutcome:
        if not self.supports(variant):
            raise UsageError(f"{type(self).__name__} does not handle the {variant.value} variant")
        solver_config = self.config["solver"]
        kwargs = dict(
            trials=self.trials,
            threads=solver_config["threads"],
            max_default_trials=solver_config["max_default_trials"],
            tie_break_edge_limit=self.tie_break_edge_limit,
        )
        self.logger.info(f"Solving n={graph.vertex_count}, m={graph.edge_count}, k={k}, variant={variant.value}")
        if variant is Variant.PERFECT:
            return solve_perfect(graph, k, SolveMode.RANDOMIZED, solver_config["seed"], **kwargs)
        return solve_randomized(graph, k, seed=solver_config["seed"], **kwargs)


class DeterministicSolver(DiversePairSolver):
    """Derandomized colour-coding solver over universal families."""

    def solve(self, graph: Graph, k: int, variant: Variant = Variant.MAXIMUM) -> SolveOutcome:
        if not self.supports(variant):
            raise UsageError(f"{type(self).__name__} does not handle the {variant.value} variant")
        kwargs = dict(
            universal_config=self.config["universal"],
            threads=self.config["solver"]["threads"],
            tie_break_edge_limit=self.tie_break_edge_limit,
        )
        self.logger.info(f"Solving n={graph.vertex_count}, m={graph.edge_count}, k={k}, variant={variant.value}")
        if variant is Variant.PERFECT:
            return solve_perfect(graph, k, SolveMode.DETERMINISTIC, **kwargs)
        return solve_deterministic(graph, k, **kwargs)
