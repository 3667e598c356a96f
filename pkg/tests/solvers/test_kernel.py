"""
Tests for the quadratic kernel of the unconstrained variant.
"""

import unittest

import pytest
from hypothesis import given, strategies as st

from divmatch.errors import UsageError
from divmatch.graph.core import Graph, Matching, matching_vertices
from divmatch.graph.generators import complete_bipartite, cycle, gnp, path
from divmatch.solvers.kernel import KernelOutcome, KernelSolver, greedy_maximal_matching, kernelize, solve_any_matching
from divmatch.solvers.oracle import decide
from divmatch.solvers.outcome import Decision, SolveMode, Variant


class TestGreedyMaximalMatching(unittest.TestCase):
    """Tests for the identifier-order greedy matching."""

    def test_examples(self):
        """Test P3, C4 and a star."""
        self.assertEqual(greedy_maximal_matching(path(3)).sorted_ids(), [0])
        self.assertEqual(greedy_maximal_matching(cycle(4)).sorted_ids(), [0, 2])
        self.assertEqual(len(greedy_maximal_matching(complete_bipartite(1, 3))), 1)

    @given(st.integers(0, 9), st.floats(0.0, 1.0), st.integers(0, 10 ** 6))
    def test_endpoints_cover_every_edge(self, n, p, seed):
        """Test V(M) is a vertex cover."""
        graph = gnp(n, p, seed)
        cover = set(matching_vertices(greedy_maximal_matching(graph)))
        assert all(u in cover or v in cover for u, v in graph.edges)


class TestKernelize(unittest.TestCase):
    """Tests for the kernelization."""

    def test_immediate_yes(self):
        """Test C4 with k = 2 splits the greedy matching."""
        result = kernelize(cycle(4), 2)
        self.assertEqual(result.outcome, KernelOutcome.IMMEDIATE_YES)
        first, second = result.certificate
        self.assertEqual((first.sorted_ids(), second.sorted_ids()), ([0], [2]))

    def test_star_is_trimmed(self):
        """Test K_{1,9} with k = 3 keeps the centre, its mate and six leaves."""
        result = kernelize(complete_bipartite(1, 9), 3)
        self.assertEqual(result.outcome, KernelOutcome.REDUCED)
        self.assertEqual(result.marked, tuple(range(8)))
        self.assertEqual(result.kernel_graph.edge_count, 7)
        self.assertEqual(result.size_bound, 36)
        self.assertTrue(result.within_bound)

    def test_edgeless(self):
        """Test an edgeless graph reduces to the empty graph."""
        result = kernelize(Graph(2), 1)
        self.assertEqual(result.outcome, KernelOutcome.REDUCED)
        self.assertEqual(result.marked, ())
        self.assertEqual(result.kernel_graph.vertex_count, 0)

    def test_rejects_non_positive_k(self):
        """Test k must be at least 1."""
        with self.assertRaises(UsageError):
            kernelize(cycle(4), 0)

    def test_lift(self):
        """Test kernel matchings map back to original edges."""
        graph = complete_bipartite(1, 9)
        result = kernelize(graph, 3)
        kernel_matching = Matching(result.kernel_graph, frozenset({result.kernel_graph.edge_id(0, 7)}))
        lifted = result.lift(kernel_matching)
        self.assertEqual(lifted.edge_pairs(), [(0, 7)])

    def test_lift_needs_reduced_instance(self):
        """Test lifting from an immediate answer is refused."""
        result = kernelize(cycle(4), 2)
        with self.assertRaises(UsageError):
            result.lift(Matching(cycle(4), frozenset()))

    @given(st.integers(1, 9), st.floats(0.1, 1.0), st.integers(0, 10 ** 6), st.integers(1, 4))
    def test_kernel_is_equivalent(self, n, p, seed, k):
        """Test the kernel preserves the answer and the size bound."""
        graph = gnp(n, p, seed)
        result = kernelize(graph, k)
        expected = decide(graph, k, Variant.ANY_MATCHING, max_edges=36)
        if result.outcome is KernelOutcome.IMMEDIATE_YES:
            assert expected is Decision.YES
            return
        assert result.within_bound
        assert decide(result.kernel_graph, k, Variant.ANY_MATCHING, max_edges=36) is expected


class TestSolveAnyMatching(unittest.TestCase):
    """Tests for deciding the unconstrained variant."""

    def test_maximum_matching_suffices(self):
        """Test μ >= k pairs a maximum matching with the empty one."""
        outcome = solve_any_matching(cycle(4), 2)
        self.assertTrue(outcome.is_yes)
        self.assertEqual(outcome.diversity, 2)
        self.assertEqual(outcome.mode, SolveMode.KERNEL_SPLIT)

    def test_star(self):
        """Test K_{1,7} reaches 2 but not 3."""
        self.assertTrue(solve_any_matching(complete_bipartite(1, 7), 2).is_yes)
        outcome = solve_any_matching(complete_bipartite(1, 7), 3)
        self.assertEqual(outcome.decision, Decision.NO)
        self.assertIn("kernel optimum 2", outcome.reason)

    def test_non_positive_k(self):
        """Test k <= 0 returns two empty matchings."""
        outcome = solve_any_matching(path(2), 0)
        self.assertEqual([m.sorted_ids() for m in outcome.certificate], [[], []])

    @given(st.integers(1, 7), st.floats(0.1, 1.0), st.integers(0, 10 ** 6), st.integers(1, 8))
    def test_matches_oracle(self, n, p, seed, k):
        """Test the decision equals exhaustive enumeration."""
        graph = gnp(n, p, seed)
        assert solve_any_matching(graph, k).decision is decide(graph, k, Variant.ANY_MATCHING)


class TestKernelSolver:
    """Tests for the kernel solver class."""

    def test_solve(self, config):
        assert KernelSolver(config).solve(path(3), 2, Variant.ANY_MATCHING).is_yes

    def test_rejects_maximum(self, config):
        with pytest.raises(UsageError):
            KernelSolver(config).solve(path(3), 2, Variant.MAXIMUM)
