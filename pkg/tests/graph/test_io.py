"""
Tests for the edge-list format.
"""

import os

import pytest
from hypothesis import given, strategies as st

from divmatch.errors import GraphFormatError, UsageError
from divmatch.graph.core import Graph
from divmatch.graph.generators import cycle, gnp, petersen
from divmatch.graph.io import parse_edge_list, read_graph, serialize_edge_list, write_graph


class TestParse:
    """Tests for parse_edge_list."""

    def test_numeric_identity_labels(self):
        """Test integer files keep their vertex indices."""
        graph = parse_edge_list("# a path\n0 1\n\n1 2\n")
        assert graph.vertex_count == 3
        assert graph.edges == ((0, 1), (1, 2))
        assert graph.names == ("0", "1", "2")

    def test_header_declares_isolated_vertices(self):
        """Test the n header adds isolated vertices."""
        graph = parse_edge_list("n 5\n0 1\n")
        assert graph.vertex_count == 5
        assert graph.degree(4) == 0

    def test_one_based_integers_are_relabelled(self):
        """Test a 1-based file gets no phantom vertex 0."""
        graph = parse_edge_list("1 2\n2 3\n3 4\n4 1\n")
        assert graph.vertex_count == 4
        assert graph.names == ("1", "2", "3", "4")
        assert graph.edges == ((0, 1), (1, 2), (2, 3), (0, 3))
        assert all(graph.degree(v) == 2 for v in range(4))

    def test_sparse_integers_keep_numeric_order(self):
        """Test gaps are closed in ascending numeric order."""
        graph = parse_edge_list("10 2\n2 07\n")
        assert graph.names == ("2", "7", "10")
        assert graph.edges == ((0, 2), (0, 1))

    def test_one_based_round_trip(self):
        """Test a relabelled integer file re-parses to the same graph."""
        graph = parse_edge_list("3 5\n5 9\n")
        assert parse_edge_list(serialize_edge_list(graph)) == graph

    def test_empty_input(self):
        """Test an empty file is the empty graph."""
        assert parse_edge_list("").vertex_count == 0
        assert parse_edge_list("n 0\n").vertex_count == 0

    def test_named_vertices_first_appearance(self):
        """Test names are numbered by first appearance."""
        graph = parse_edge_list("b c\na b\n")
        assert graph.names == ("b", "c", "a")
        assert graph.edges == ((0, 1), (0, 2))

    def test_single_token_declares_vertex(self):
        """Test a single-token line declares an isolated vertex."""
        graph = parse_edge_list("z\nx y\n")
        assert graph.names == ("z", "x", "y")
        assert graph.degree(0) == 0

    def test_named_with_header_pads(self):
        """Test a header larger than the named vertices adds padding names."""
        graph = parse_edge_list("n 4\na b\n")
        assert graph.names == ("a", "b", "_v2", "_v3")

    @pytest.mark.parametrize("text, line", [
        ("0 1\n1 1\n", 2),
        ("0 1\n1 0\n", 2),
        ("0 1 2\n", 1),
        ("n 2\n0 5\n", 2),
        ("n x\n", 1),
        ("n -1\n", 1),
        ("a b\nb a\n", 2),
    ])
    def test_malformed_lines(self, text, line):
        """Test parse errors carry the offending line."""
        with pytest.raises(GraphFormatError) as excinfo:
            parse_edge_list(text)
        assert excinfo.value.line_number == line
        assert str(excinfo.value).startswith(f"line {line}:")

    def test_header_too_small_for_names(self):
        """Test a named file with a header smaller than its vertex set."""
        with pytest.raises(GraphFormatError):
            parse_edge_list("n 1\na b\n")

    def test_format_error_is_usage_error(self):
        """Test the error hierarchy."""
        with pytest.raises(UsageError):
            parse_edge_list("0 0\n")


class TestSerialize:
    """Tests for serialize_edge_list and the file wrappers."""

    def test_identity_graph(self):
        """Test identity-named graphs are written as integers."""
        assert serialize_edge_list(cycle(3), ["triangle"]) == "n 3\n# triangle\n0 1\n1 2\n0 2\n"

    def test_named_graph_declares_vertices(self):
        """Test named graphs get a declaration block."""
        graph = Graph.from_edges(3, [(0, 2)], ["a", "b", "c"])
        assert serialize_edge_list(graph) == "n 3\na\nb\nc\na c\n"

    def test_numeric_looking_names_round_trip(self):
        """Test a relabelled kernel-like graph re-parses exactly."""
        graph, _ = cycle(6).induced_subgraph([0, 1, 3, 5])
        assert parse_edge_list(serialize_edge_list(graph)) == graph

    def test_unwritable_name(self):
        """Test names with whitespace are refused."""
        graph = Graph.from_edges(2, [(0, 1)], ["a b", "c"])
        with pytest.raises(UsageError):
            serialize_edge_list(graph)

    def test_write_and_read(self, tmp_path):
        """Test writing to a new directory and reading back."""
        target = os.path.join(tmp_path, "nested", "petersen.txt")
        write_graph(petersen(), target, ["petersen"])
        assert read_graph(target) == petersen()

    def test_read_missing_file(self, tmp_path):
        """Test a missing file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            read_graph(os.path.join(tmp_path, "missing.txt"))

    @given(st.integers(0, 9), st.floats(0.0, 1.0), st.integers(0, 1000))
    def test_random_graphs_round_trip(self, n, p, seed):
        """Test parse(serialize(g)) == g on random graphs."""
        graph = gnp(n, p, seed)
        assert parse_edge_list(serialize_edge_list(graph)) == graph
