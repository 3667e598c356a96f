"""
Diverse-pair solvers.

This package contains the exact bipartite solver, the randomized and
deterministic colour-coding solvers, universal families, the quadratic
kernel for the unconstrained variant, and the brute-force oracle.
"""

from divmatch.solvers.bipartite import BipartiteSolver, analyze_bipartite, build_gprime, reconstruct_pair, solve_bipartite
from divmatch.solvers.dispatch import build_solver, resolve_mode
from divmatch.solvers.fpt import (
    DeterministicSolver,
    EdgeColoring,
    RandomizedSolver,
    base_check,
    coloring_round,
    flexible_edges,
    solve_deterministic,
    solve_perfect,
    solve_randomized,
)
from divmatch.solvers.interface import DiversePairSolver
from divmatch.solvers.kernel import KernelResult, KernelSolver, greedy_maximal_matching, kernelize, solve_any_matching
from divmatch.solvers.oracle import OracleSolver, decide, enumerate_matchings, max_diversity_pair
from divmatch.solvers.outcome import Decision, SolveMode, SolveOutcome, Variant, check_certificate
from divmatch.solvers.universal import LinearFamily, UniversalFamily, construct_universal, linear_family, verify_universal

__all__ = [
    'DiversePairSolver',
    'BipartiteSolver',
    'RandomizedSolver',
    'DeterministicSolver',
    'KernelSolver',
    'OracleSolver',
    'build_solver',
    'resolve_mode',
    'Decision',
    'SolveMode',
    'SolveOutcome',
    'Variant',
    'check_certificate',
    'analyze_bipartite',
    'build_gprime',
    'reconstruct_pair',
    'solve_bipartite',
    'EdgeColoring',
    'base_check',
    'coloring_round',
    'flexible_edges',
    'solve_randomized',
    'solve_deterministic',
    'solve_perfect',
    'UniversalFamily',
    'construct_universal',
    'verify_universal',
    'LinearFamily',
    'linear_family',
    'KernelResult',
    'greedy_maximal_matching',
    'kernelize',
    'solve_any_matching',
    'enumerate_matchings',
    'max_diversity_pair',
    'decide',
]
