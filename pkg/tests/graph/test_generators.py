"""
Tests for the instance generators.
"""

import unittest

import pytest

from divmatch.errors import UsageError
from divmatch.graph.core import detect_bipartition
from divmatch.graph.generators import (
    FAMILIES,
    complete,
    complete_bipartite,
    cubic,
    cycle,
    generate,
    gnp,
    path,
    petersen,
    random_bipartite,
)


class TestDeterministicFamilies(unittest.TestCase):
    """Tests for the fixed constructions."""

    def test_cycle(self):
        """Test C6 is 2-regular with 6 edges."""
        graph = cycle(6)
        self.assertEqual(graph.edge_count, 6)
        self.assertTrue(all(graph.degree(v) == 2 for v in range(6)))

    def test_path(self):
        """Test P1 is a single vertex and P3 has two edges."""
        self.assertEqual(path(1).edge_count, 0)
        self.assertEqual(path(3).edges, ((0, 1), (1, 2)))

    def test_complete(self):
        """Test K4 has all six edges in lexicographic order."""
        self.assertEqual(complete(4).edges, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))

    def test_complete_bipartite(self):
        """Test K_{1,9} is a star centred at 0."""
        star = complete_bipartite(1, 9)
        self.assertEqual(star.degree(0), 9)
        self.assertEqual(star.edge_count, 9)

    def test_petersen(self):
        """Test the Petersen graph is cubic, has 15 edges and an odd cycle."""
        graph = petersen()
        self.assertEqual(graph.edge_count, 15)
        self.assertTrue(all(graph.degree(v) == 3 for v in range(10)))
        self.assertIsNone(detect_bipartition(graph))

    def test_invalid_parameters(self):
        """Test parameter validation."""
        with self.assertRaises(UsageError):
            cycle(2)
        with self.assertRaises(UsageError):
            path(0)
        with self.assertRaises(UsageError):
            complete_bipartite(-1, 2)


class TestRandomFamilies:
    """Tests for the seeded random families."""

    def test_gnp_extremes(self):
        """Test p = 0 and p = 1."""
        assert gnp(6, 0.0, seed=1).edge_count == 0
        assert gnp(6, 1.0, seed=1).edge_count == 15

    def test_gnp_deterministic_per_seed(self):
        """Test equal seeds give equal graphs."""
        assert gnp(12, 0.4, seed=3) == gnp(12, 0.4, seed=3)

    def test_gnp_invalid_probability(self):
        """Test p outside [0, 1] is rejected."""
        with pytest.raises(UsageError):
            gnp(5, 1.5)

    def test_random_bipartite_is_bipartite(self):
        """Test every edge crosses the two index ranges."""
        graph = random_bipartite(4, 5, 0.6, seed=11)
        assert all(u < 4 <= v for u, v in graph.edges)
        assert detect_bipartition(graph) is not None

    @pytest.mark.parametrize("n, seed", [(4, 0), (10, 1), (20, 5)])
    def test_cubic_is_simple_and_regular(self, n, seed):
        """Test cubic graphs are 3-regular."""
        graph = cubic(n, seed=seed)
        assert graph.vertex_count == n
        assert graph.edge_count == 3 * n // 2
        assert all(graph.degree(v) == 3 for v in range(n))

    def test_cubic_deterministic_per_seed(self):
        """Test equal seeds give equal cubic graphs."""
        assert cubic(12, seed=9) == cubic(12, seed=9)

    @pytest.mark.parametrize("n", [3, 5, 2])
    def test_cubic_invalid(self, n):
        """Test odd or too small orders are rejected."""
        with pytest.raises(UsageError):
            cubic(n)


class TestGenerate:
    """Tests for the named-family dispatcher."""

    def test_all_families_registered(self):
        """Test the CLI family list."""
        assert set(FAMILIES) == {
            "gnp", "bipartite", "cycle", "path", "complete", "complete_bipartite", "cubic", "petersen",
        }

    def test_generate_cycle(self):
        """Test generate ignores the seed for fixed families."""
        assert generate("cycle", {"n": 6}, seed=4) == cycle(6)

    def test_generate_seeded(self):
        """Test generate forwards the seed."""
        assert generate("cubic", {"n": 10}, seed=1) == cubic(10, seed=1)

    def test_generate_missing_parameter(self):
        """Test a missing parameter names the flag."""
        with pytest.raises(UsageError, match="--p"):
            generate("gnp", {"n": 5})

    def test_generate_unknown_family(self):
        """Test an unknown family is rejected."""
        with pytest.raises(UsageError):
            generate("grid", {})
