"""
divmatch - diverse pairs of maximum and perfect matchings

This package decides whether a graph has two maximum (or perfect) matchings
whose symmetric difference is at least k, and certifies every YES answer.
It contains an exact solver for bipartite graphs, randomized and
deterministic colour-coding solvers for general graphs, a quadratic kernel
for the unconstrained variant and a brute-force oracle.
"""

__version__ = "0.1.0"
