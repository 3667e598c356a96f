"""
Tests for the command-line interface.
"""

import json

import pytest

from divmatch.cli import EXIT_NO, EXIT_USAGE, EXIT_YES, RunReport, main
from divmatch.graph.generators import complete, complete_bipartite, cycle, petersen
from divmatch.graph.io import read_graph, write_graph
from divmatch.solvers.universal import UniversalFamily


@pytest.fixture
def write_instance(tmp_path):
    def write(graph, name="graph.txt"):
        path = tmp_path / name
        write_graph(graph, str(path))
        return str(path)
    return write


def run_json(capsys, argv):
    code = main(argv + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


class TestSolve:
    """Tests for ``divmatch solve``."""

    def test_bipartite_perfect(self, capsys, write_instance):
        code, report = run_json(capsys, ["solve", write_instance(cycle(4)), "--k", "4", "--variant", "perfect"])
        assert code == EXIT_YES
        assert report["decision"] == "YES"
        assert report["mode"] == "bipartite"
        assert report["diversity"] == 4
        assert report["verified"] == "verified"

    def test_no_answer(self, capsys, tmp_path):
        path = tmp_path / "k2.txt"
        path.write_text("0 1\n")
        code, report = run_json(capsys, ["solve", str(path), "--k", "2", "--mode", "deterministic"])
        assert code == EXIT_NO
        assert report["decision"] == "NO"
        assert report["certificate"] is None
        assert report["verified"] == "n/a"
        assert report["exact"] is True

    def test_randomized_report(self, capsys, write_instance):
        code, report = run_json(capsys, [
            "solve", write_instance(petersen()), "--k", "8", "--mode", "randomized", "--seed", "7",
        ])
        assert code == EXIT_YES
        assert {"instance", "mode", "decision", "certificate", "diversity", "trials_used",
                "elapsed_ms", "verified"} <= set(report)
        assert report["instance"]["n"] == 10
        assert report["instance"]["variant"] == "maximum"
        assert len(report["certificate"]) == 2
        assert all(len(matching) == 5 for matching in report["certificate"])

    def test_any_matching_uses_kernel(self, capsys, write_instance):
        code, report = run_json(capsys, [
            "solve", write_instance(complete_bipartite(1, 7)), "--k", "3", "--variant", "any_matching",
        ])
        assert code == EXIT_NO
        assert report["mode"] == "kernel-split"
        assert "reason" in report

    def test_text_report(self, capsys, write_instance):
        code = main(["solve", write_instance(cycle(4)), "--k", "4", "--verbose"])
        out = capsys.readouterr().out
        assert code == EXIT_YES
        assert out.startswith("YES mode=bipartite")
        assert "M1: " in out and "M2: " in out

    def test_one_based_file(self, capsys, tmp_path):
        path = tmp_path / "c4.txt"
        path.write_text("1 2\n2 3\n3 4\n4 1\n")
        code, report = run_json(capsys, ["solve", str(path), "--k", "4", "--variant", "perfect", "--mode", "auto"])
        assert code == EXIT_YES
        assert report["instance"]["n"] == 4
        assert report["diversity"] == 4

    def test_unproven_no_is_flagged(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setattr("divmatch.solvers.fpt.coloring_family",
                            lambda m, kappa, universal_config=None: UniversalFamily(m, kappa, (0,), verified=False))
        path = tmp_path / "star.txt"
        path.write_text("0 1\n0 2\n0 3\n4 5\n")
        config_path = tmp_path / "config.yaml"
        config_path.write_text("universal:\n  proven_size_limit: 1\n")
        argv = ["solve", str(path), "--k", "4", "--mode", "deterministic", "--config", str(config_path)]
        code, report = run_json(capsys, argv)
        assert code == EXIT_NO
        assert report["exact"] is False
        assert report["reason"] == "universal family verified on a sample only"

        assert main(argv) == EXIT_NO
        assert "exact=false" in capsys.readouterr().out

    def test_named_vertices(self, capsys, tmp_path):
        path = tmp_path / "named.txt"
        path.write_text("a b\nb c\nc d\nd a\n")
        code, report = run_json(capsys, ["solve", str(path), "--k", "4"])
        assert code == EXIT_YES
        names = {name for matching in report["certificate"] for pair in matching for name in pair}
        assert names == {"a", "b", "c", "d"}


class TestUsageErrors:
    """Tests for exit code 2."""

    def test_unknown_flag(self, write_instance):
        assert main(["solve", write_instance(cycle(4)), "--k", "2", "--bogus"]) == EXIT_USAGE

    def test_parse_error(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0 1 2\n")
        assert main(["solve", str(path), "--k", "2"]) == EXIT_USAGE
        assert "line 1" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert main(["solve", str(tmp_path / "absent.txt"), "--k", "2"]) == EXIT_USAGE

    def test_mode_cannot_handle_variant(self, write_instance):
        argv = ["solve", write_instance(cycle(4)), "--k", "2", "--variant", "any_matching", "--mode", "bipartite"]
        assert main(argv) == EXIT_USAGE

    def test_bipartite_mode_on_odd_cycle(self, write_instance):
        assert main(["solve", write_instance(cycle(5)), "--k", "2", "--mode", "bipartite"]) == EXIT_USAGE

    def test_invalid_thread_count(self, write_instance):
        assert main(["solve", write_instance(cycle(4)), "--k", "2", "--threads", "0"]) == EXIT_USAGE

    def test_mistyped_config_value(self, capsys, tmp_path, write_instance):
        config_path = tmp_path / "config.yaml"
        config_path.write_text("solver:\n  threads: x\n")
        argv = ["solve", write_instance(cycle(4)), "--k", "2", "--config", str(config_path)]
        assert main(argv) == EXIT_USAGE
        assert "invalid configuration" in capsys.readouterr().err

    def test_version(self, capsys):
        assert main(["--version"]) == EXIT_YES
        assert "divmatch" in capsys.readouterr().out


class TestKernelize:
    """Tests for ``divmatch kernelize``."""

    def test_reduced_instance_is_written(self, capsys, tmp_path, write_instance):
        out = tmp_path / "kernel.txt"
        code, report = run_json(capsys, [
            "kernelize", write_instance(complete_bipartite(1, 9)), "--k", "3", "--out", str(out),
        ])
        assert code == EXIT_YES
        assert report["outcome"] == "reduced"
        assert report["marked"] == 8
        assert report["within_bound"] is True
        kernel = read_graph(str(out))
        assert (kernel.vertex_count, kernel.edge_count) == (8, 7)
        assert "# relabel 7=7" in out.read_text()

    def test_immediate_yes(self, capsys, tmp_path, write_instance):
        out = tmp_path / "kernel.txt"
        code, report = run_json(capsys, ["kernelize", write_instance(cycle(4)), "--k", "2", "--out", str(out)])
        assert code == EXIT_YES
        assert report["decision"] == "YES"
        assert report["outcome"] == "immediate_yes"
        assert not out.exists()

    def test_edgeless_instance(self, capsys, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("n 3\n")
        out = tmp_path / "kernel.txt"
        code, report = run_json(capsys, ["kernelize", str(path), "--k", "1", "--out", str(out)])
        assert code == EXIT_YES
        assert report["marked"] == 0
        assert read_graph(str(out)).vertex_count == 0

    def test_rejects_zero_k(self, tmp_path, write_instance):
        argv = ["kernelize", write_instance(cycle(4)), "--k", "0", "--out", str(tmp_path / "k.txt")]
        assert main(argv) == EXIT_USAGE


class TestGenerate:
    """Tests for ``divmatch generate``."""

    def test_cycle_to_file(self, tmp_path):
        out = tmp_path / "c5.txt"
        assert main(["generate", "cycle", "--n", "5", "--out", str(out)]) == EXIT_YES
        assert read_graph(str(out)) == cycle(5)

    def test_complete_to_stdout(self, capsys):
        assert main(["generate", "complete", "--n", "4"]) == EXIT_YES
        out = capsys.readouterr().out
        assert out.startswith("n 4\n# generated complete")
        assert len([line for line in out.splitlines() if not line.startswith(("#", "n "))]) == 6

    def test_cubic_is_reproducible(self, tmp_path):
        first, second = tmp_path / "a.txt", tmp_path / "b.txt"
        assert main(["generate", "cubic", "--n", "8", "--seed", "3", "--out", str(first)]) == EXIT_YES
        assert main(["generate", "cubic", "--n", "8", "--seed", "3", "--out", str(second)]) == EXIT_YES
        graph = read_graph(str(first))
        assert graph.edge_count == 12
        assert first.read_text() == second.read_text()

    def test_random_family_default_seed(self, tmp_path):
        first, second = tmp_path / "a.txt", tmp_path / "b.txt"
        assert main(["generate", "gnp", "--n", "12", "--p", "0.3", "--out", str(first)]) == EXIT_YES
        assert main(["generate", "gnp", "--n", "12", "--p", "0.3", "--out", str(second)]) == EXIT_YES
        assert first.read_text() == second.read_text()
        assert "seed=0" in first.read_text()

    def test_missing_parameter(self):
        assert main(["generate", "cycle"]) == EXIT_USAGE


class TestOracle:
    """Tests for ``divmatch oracle``."""

    def test_complete_four(self, capsys, write_instance):
        code, report = run_json(capsys, ["oracle", write_instance(complete(4)), "--k", "4", "--variant", "perfect"])
        assert code == EXIT_YES
        assert report["mode"] == "oracle"
        assert report["diversity"] == 4

    def test_triangle_has_no_perfect_matching(self, capsys, write_instance):
        code, report = run_json(capsys, ["oracle", write_instance(complete(3)), "--k", "1", "--variant", "perfect"])
        assert code == EXIT_NO
        assert report["reason"] == "no perfect matching"

    def test_petersen_optimum(self, capsys, write_instance):
        code, report = run_json(capsys, ["oracle", write_instance(petersen()), "--k", "9", "--variant", "perfect"])
        assert code == EXIT_NO
        assert report["diversity"] == 8


def test_report_text_without_decision():
    """Test a report with no decision renders a placeholder."""
    report = RunReport(instance={"path": "x", "n": 3}, mode="kernel", details={"outcome": "reduced"})
    assert report.to_text().startswith("- mode=kernel")
    assert report.to_dict()["outcome"] == "reduced"
