"""
Tests for the brute-force oracle.
"""

import unittest

import pytest
from hypothesis import given, strategies as st

from divmatch.errors import UsageError
from divmatch.graph.core import Graph
from divmatch.graph.generators import complete, complete_bipartite, cycle, gnp, path, petersen
from divmatch.matching.engine import maximum_matching
from divmatch.solvers.oracle import OracleSolver, decide, enumerate_matchings, max_diversity_pair, solve_oracle
from divmatch.solvers.outcome import Decision, SolveMode, Variant


class TestEnumerate(unittest.TestCase):
    """Tests for listing the matchings of a class."""

    def test_triangle(self):
        """Test K3 has three maximum matchings and four matchings overall."""
        self.assertEqual(len(enumerate_matchings(complete(3), Variant.MAXIMUM)), 3)
        self.assertEqual(len(enumerate_matchings(complete(3), Variant.ANY_MATCHING)), 4)

    def test_perfect_counts(self):
        """Test the perfect matching counts of C4, K4 and the Petersen graph."""
        self.assertEqual(len(enumerate_matchings(cycle(4), Variant.PERFECT)), 2)
        self.assertEqual(len(enumerate_matchings(complete(4), Variant.PERFECT)), 3)
        self.assertEqual(len(enumerate_matchings(petersen(), Variant.PERFECT)), 6)

    def test_ordering(self):
        """Test matchings come sorted by their edge identifiers."""
        listed = [m.sorted_ids() for m in enumerate_matchings(path(3), Variant.ANY_MATCHING)]
        self.assertEqual(listed, [[], [0], [1]])

    def test_no_perfect_matching(self):
        """Test P3 has an empty perfect class."""
        self.assertEqual(enumerate_matchings(path(3), Variant.PERFECT), [])

    def test_size_guard(self):
        """Test graphs above the edge guard are refused."""
        with self.assertRaises(UsageError):
            enumerate_matchings(complete(8))
        self.assertEqual(len(enumerate_matchings(complete(8), Variant.PERFECT, max_edges=28)), 105)


class TestMaxDiversityPair(unittest.TestCase):
    """Tests for the exact optimum."""

    def test_values(self):
        """Test optima of small named graphs."""
        self.assertEqual(max_diversity_pair(complete(3), Variant.MAXIMUM).value, 2)
        self.assertEqual(max_diversity_pair(complete(4), Variant.PERFECT).value, 4)
        self.assertEqual(max_diversity_pair(petersen(), Variant.PERFECT).value, 8)
        self.assertEqual(max_diversity_pair(complete_bipartite(1, 7), Variant.ANY_MATCHING).value, 2)

    def test_single_member(self):
        """Test a one-member class pairs the matching with itself."""
        optimum = max_diversity_pair(path(2), Variant.MAXIMUM)
        self.assertEqual(optimum.value, 0)
        self.assertEqual(optimum.class_size, 1)
        first, second = optimum.pair
        self.assertEqual(first, second)

    def test_empty_class(self):
        """Test an empty perfect class is infeasible."""
        optimum = max_diversity_pair(path(3), Variant.PERFECT)
        self.assertTrue(optimum.infeasible)
        self.assertIsNone(optimum.pair)

    def test_any_matching_on_edgeless(self):
        """Test the empty matching is the only one without edges."""
        optimum = max_diversity_pair(Graph(3), Variant.ANY_MATCHING)
        self.assertEqual(optimum.value, 0)
        self.assertEqual(optimum.class_size, 1)


class TestDecide(unittest.TestCase):
    """Tests for the yes/no oracle."""

    def test_examples(self):
        """Test C4, the star K_{1,7} and K4."""
        self.assertEqual(decide(cycle(4), 4, Variant.PERFECT), Decision.YES)
        self.assertEqual(decide(complete_bipartite(1, 7), 3, Variant.ANY_MATCHING), Decision.NO)
        self.assertEqual(decide(complete(4), 6, Variant.PERFECT), Decision.NO)

    def test_solve_oracle(self):
        """Test outcomes carry the optimum or the infeasibility reason."""
        outcome = solve_oracle(petersen(), 9, Variant.PERFECT)
        self.assertEqual(outcome.decision, Decision.NO)
        self.assertEqual(outcome.diversity, 8)
        self.assertEqual(outcome.mode, SolveMode.ORACLE)

        outcome = solve_oracle(path(3), 1, Variant.PERFECT)
        self.assertEqual(outcome.reason, "no perfect matching")

        outcome = solve_oracle(complete(4), 4, Variant.PERFECT)
        self.assertTrue(outcome.is_yes)
        self.assertEqual(outcome.diversity, 4)


class TestOracleSolver:
    """Tests for the oracle solver class."""

    def test_reads_guard_from_config(self, config):
        config["oracle"]["max_edges"] = 5
        with pytest.raises(UsageError):
            OracleSolver(config).solve(cycle(6), 2)

    def test_any_matching(self, config):
        outcome = OracleSolver(config).solve(path(3), 2, Variant.ANY_MATCHING)
        assert outcome.is_yes


class TestOracleProperties:
    """Structural properties of the optimum."""

    @given(st.integers(1, 6), st.floats(0.2, 1.0), st.integers(0, 10 ** 6))
    def test_even_and_bounded(self, n, p, seed):
        graph = gnp(n, p, seed)
        mu = len(maximum_matching(graph))
        value = max_diversity_pair(graph, Variant.MAXIMUM).value
        assert value % 2 == 0
        assert value <= 2 * mu

    @given(st.integers(1, 6), st.floats(0.2, 1.0), st.integers(0, 10 ** 6))
    def test_monotone_in_k(self, n, p, seed):
        graph = gnp(n, p, seed)
        answers = [decide(graph, k, Variant.ANY_MATCHING) for k in range(0, 8)]
        for smaller, larger in zip(answers, answers[1:]):
            assert not (smaller is Decision.NO and larger is Decision.YES)
