"""
Solver selection.

This module maps a requested mode and problem variant to a concrete
``DiversePairSolver``.
"""

from typing import Any, Dict, Optional

from divmatch.errors import UsageError
from divmatch.graph.core import Graph, detect_bipartition
from divmatch.solvers.bipartite import BipartiteSolver
from divmatch.solvers.fpt import DeterministicSolver, RandomizedSolver
from divmatch.solvers.interface import DiversePairSolver
from divmatch.solvers.kernel import KernelSolver
from divmatch.solvers.oracle import OracleSolver
from divmatch.solvers.outcome import SolveMode, Variant


AUTO = "auto"

SOLVERS = {
    SolveMode.BIPARTITE: BipartiteSolver,
    SolveMode.RANDOMIZED: RandomizedSolver,
    SolveMode.DETERMINISTIC: DeterministicSolver,
    SolveMode.KERNEL_SPLIT: KernelSolver,
    SolveMode.ORACLE: OracleSolver,
}


def resolve_mode(graph: Graph, variant: Variant, requested: str = AUTO) -> SolveMode:
    """
    Pick the solver mode for an instance.

    ``auto`` sends the unconstrained variant to the kernel, bipartite inputs
    to the exact bipartite solver and everything else to the deterministic
    colour-coding solver.

    Raises:
        UsageError: If the requested mode is unknown or cannot handle ``variant``.
    """
    if requested == AUTO:
        if variant is Variant.ANY_MATCHING:
            return SolveMode.KERNEL_SPLIT
        if detect_bipartition(graph) is not None:
            return SolveMode.BIPARTITE
        return SolveMode.DETERMINISTIC

    try:
        mode = SolveMode(requested)
    except ValueError:
        raise UsageError(f"unknown solver mode '{requested}'")
    if variant not in SOLVERS[mode].supported_variants:
        raise UsageError(f"mode {mode.value} does not handle the {variant.value} variant")
    if mode is SolveMode.BIPARTITE and detect_bipartition(graph) is None:
        raise UsageError("graph is not bipartite")
    return mode


def build_solver(mode: SolveMode, config: Optional[Dict[str, Any]] = None,
                 trials: Optional[int] = None) -> DiversePairSolver:
    """
    Instantiate the solver for ``mode``.

    Args:
        mode: A resolved solver mode.
        config: Configuration dictionary.
        trials: Colouring budget for the randomized solver.

    Returns:
        The solver.
    """
    if mode is SolveMode.RANDOMIZED:
        return RandomizedSolver(config, trials=trials)
    return SOLVERS[mode](config)
