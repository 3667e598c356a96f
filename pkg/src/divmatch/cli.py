"""
Command-line interface for the divmatch solvers.

Subcommands:
    solve      Decide an instance with a chosen (or automatically picked) solver.
    kernelize  Reduce an unconstrained instance to its quadratic kernel.
    generate   Write a generated instance in the edge-list format.
    oracle     Decide an instance by exhaustive enumeration.

Exit codes: 0 for YES (and for successful kernelize/generate runs), 1 for
NO, 2 for usage, parse and configuration errors. Reports go to stdout and
log records to stderr.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import yaml

from divmatch import __version__
from divmatch.config import load_config, validate_config
from divmatch.errors import DivMatchError, UsageError
from divmatch.graph.core import Graph
from divmatch.graph.generators import FAMILIES, generate
from divmatch.graph.io import read_graph, serialize_edge_list, write_graph
from divmatch.logging import get_logger, setup_logging
from divmatch.matching.engine import maximum_matching
from divmatch.solvers.dispatch import AUTO, build_solver, resolve_mode
from divmatch.solvers.kernel import KernelOutcome, kernelize
from divmatch.solvers.oracle import solve_oracle
from divmatch.solvers.outcome import SolveOutcome, Variant, check_certificate


logger = get_logger(__name__)

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2

MODES = [AUTO, "bipartite", "randomized", "deterministic", "oracle"]


@dataclass
class RunReport:
    """
    Result of one command, rendered as text or JSON.

    Attributes:
        instance: Summary of the instance (path, n, edges, k, variant).
        mode: Solver mode that produced the decision.
        decision: "YES", "NO", or None when the command decides nothing.
        certificate: The two matchings as ``[u, v]`` pairs of vertex names.
        diversity: Certificate diversity, or the optimum when known.
        trials_used: Colourings tried.
        elapsed_ms: Wall time of the command.
        verified: "verified" for re-checked certificates, otherwise "n/a".
        exact: False when a NO was not proven, see ``SolveOutcome.exact``.
        details: Command-specific fields (reason, kernel statistics, ...).
    """

    instance: Dict[str, Any]
    mode: str
    decision: Optional[str] = None
    certificate: Optional[List[List[List[str]]]] = None
    diversity: Optional[int] = None
    trials_used: int = 0
    elapsed_ms: float = 0.0
    verified: str = "n/a"
    exact: bool = True
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        report = {
            "instance": self.instance,
            "mode": self.mode,
            "decision": self.decision,
            "certificate": self.certificate,
            "diversity": self.diversity,
            "trials_used": self.trials_used,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "verified": self.verified,
            "exact": self.exact,
        }
        report.update(self.details)
        return report

    def to_text(self, verbose: bool = False) -> str:
        fields = [self.decision or "-", f"mode={self.mode}"]
        if self.diversity is not None:
            fields.append(f"diversity={self.diversity}")
        fields.append(f"trials={self.trials_used}")
        if not self.exact:
            fields.append("exact=false")
        fields.extend(f"{key}={value}" for key, value in self.instance.items() if key != "path")
        fields.extend(f"{key}={value}" for key, value in self.details.items())
        fields.append(f"elapsed_ms={self.elapsed_ms:.1f}")
        lines = [" ".join(fields)]
        if verbose and self.certificate is not None:
            for label, pairs in zip(("M1", "M2"), self.certificate):
                lines.append(f"{label}: " + " ".join(f"{u}-{v}" for u, v in pairs))
        return "\n".join(lines)


def _instance_summary(path: str, graph: Graph, k: Optional[int], variant: Optional[Variant]) -> Dict[str, Any]:
    summary: Dict[str, Any] = {"path": path, "n": graph.vertex_count, "edges": graph.edge_count}
    if k is not None:
        summary["k"] = k
    if variant is not None:
        summary["variant"] = variant.value
    return summary


def _verify(graph: Graph, outcome: SolveOutcome, k: int, variant: Variant) -> str:
    """Re-check a YES certificate against the input graph."""
    if not outcome.is_yes:
        return "n/a"
    required = None if variant is Variant.ANY_MATCHING else len(maximum_matching(graph))
    check_certificate(graph, outcome.certificate, k, variant, required)
    return "verified"


def _outcome_report(path: str, graph: Graph, k: int, variant: Variant, outcome: SolveOutcome,
                    started: float) -> RunReport:
    verified = _verify(graph, outcome, k, variant)
    report = RunReport(
        instance=_instance_summary(path, graph, k, variant),
        mode=outcome.mode.value,
        decision=outcome.decision.value,
        certificate=[matching.named_pairs() for matching in outcome.certificate] if outcome.is_yes else None,
        diversity=outcome.diversity,
        trials_used=outcome.trials_used,
        verified=verified,
        exact=outcome.exact,
    )
    if outcome.reason:
        report.details["reason"] = outcome.reason
    report.elapsed_ms = (time.perf_counter() - started) * 1000.0
    return report


def cmd_solve(args: argparse.Namespace, config: Dict[str, Any]) -> RunReport:
    """Run the ``solve`` subcommand."""
    started = time.perf_counter()
    graph = read_graph(args.path)
    variant = Variant(args.variant)
    mode = resolve_mode(graph, variant, args.mode)
    solver = build_solver(mode, config, trials=args.trials)
    outcome = solver.solve(graph, args.k, variant)
    return _outcome_report(args.path, graph, args.k, variant, outcome, started)


def cmd_oracle(args: argparse.Namespace, config: Dict[str, Any]) -> RunReport:
    """Run the ``oracle`` subcommand."""
    started = time.perf_counter()
    graph = read_graph(args.path)
    variant = Variant(args.variant)
    outcome = solve_oracle(graph, args.k, variant, config["oracle"]["max_edges"])
    return _outcome_report(args.path, graph, args.k, variant, outcome, started)


def cmd_kernelize(args: argparse.Namespace, config: Dict[str, Any]) -> RunReport:
    """Run the ``kernelize`` subcommand; writes the kernel file for reduced instances."""
    started = time.perf_counter()
    graph = read_graph(args.path)
    result = kernelize(graph, args.k)

    report = RunReport(instance=_instance_summary(args.path, graph, args.k, Variant.ANY_MATCHING), mode="kernel")
    report.details["outcome"] = result.outcome.value
    if result.outcome is KernelOutcome.IMMEDIATE_YES:
        check_certificate(graph, result.certificate, args.k, Variant.ANY_MATCHING)
        report.decision = "YES"
        report.certificate = [matching.named_pairs() for matching in result.certificate]
        report.diversity = len(result.maximal_matching)
        report.verified = "verified"
    else:
        comments = [f"kernel of {args.path} for k={args.k}"]
        comments.extend(f"relabel {old}={new}" for old, new in sorted(result.relabel.items()))
        write_graph(result.kernel_graph, args.out, comments)
        report.details.update(
            marked=len(result.marked),
            kernel_edges=result.kernel_graph.edge_count,
            size_bound=result.size_bound,
            within_bound=result.within_bound,
            out=args.out,
        )
    report.elapsed_ms = (time.perf_counter() - started) * 1000.0
    return report


def cmd_generate(args: argparse.Namespace, config: Dict[str, Any]) -> Graph:
    """Run the ``generate`` subcommand."""
    params = {"n": args.n, "p": args.p, "a": args.a, "b": args.b}
    graph = generate(args.family, params, seed=args.seed)
    comment = f"generated {args.family} " + " ".join(
        f"{name}={value}" for name, value in params.items() if value is not None
    )
    if FAMILIES[args.family][2]:
        comment += f" seed={args.seed}"
    if args.out:
        write_graph(graph, args.out, [comment.strip()])
    else:
        sys.stdout.write(serialize_edge_list(graph, [comment.strip()]))
    logger.info(f"Generated {args.family}: n={graph.vertex_count}, m={graph.edge_count}")
    return graph


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="path to a YAML configuration file")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        help="logging level (default from the configuration)")
    common.add_argument("--format", choices=["text", "json"], default="text", help="report format")
    common.add_argument("--verbose", action="store_true", help="print certificates in text reports")
    common.add_argument("--threads", type=int, help="worker threads for colouring rounds")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all subcommands."""
    common = _common_options()
    parser = argparse.ArgumentParser(prog="divmatch", description="Diverse pairs of maximum and perfect matchings")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    solve = subparsers.add_parser("solve", parents=[common], help="decide an instance")
    solve.add_argument("path", help="edge-list file")
    solve.add_argument("--k", type=int, required=True, help="diversity target")
    solve.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.MAXIMUM.value)
    solve.add_argument("--mode", choices=MODES, default=AUTO)
    solve.add_argument("--seed", type=int, help="seed of the randomized solver")
    solve.add_argument("--trials", type=int, help="number of random colourings")

    kernel = subparsers.add_parser("kernelize", parents=[common], help="compute the quadratic kernel")
    kernel.add_argument("path", help="edge-list file")
    kernel.add_argument("--k", type=int, required=True, help="diversity target (>= 1)")
    kernel.add_argument("--out", required=True, help="kernel output file")

    gen = subparsers.add_parser("generate", parents=[common], help="generate an instance")
    gen.add_argument("family", choices=sorted(FAMILIES))
    gen.add_argument("--n", type=int)
    gen.add_argument("--p", type=float)
    gen.add_argument("--a", type=int)
    gen.add_argument("--b", type=int)
    gen.add_argument("--seed", type=int, default=0, help="seed of the random families (default 0)")
    gen.add_argument("--out", help="output file (stdout if omitted)")

    oracle = subparsers.add_parser("oracle", parents=[common], help="decide by exhaustive enumeration")
    oracle.add_argument("path", help="edge-list file")
    oracle.add_argument("--k", type=int, required=True, help="diversity target")
    oracle.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.MAXIMUM.value)

    return parser


def _apply_overrides(config: Dict[str, Any], args: argparse.Namespace) -> Dict[str, Any]:
    if args.threads is not None:
        config["solver"]["threads"] = args.threads
    if getattr(args, "seed", None) is not None and args.command == "solve":
        config["solver"]["seed"] = args.seed
    if args.log_level is not None:
        config["logging"]["level"] = args.log_level
    return config


def _emit(report: RunReport, args: argparse.Namespace) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(report.to_text(args.verbose) + "\n")


COMMANDS = {
    "solve": cmd_solve,
    "kernelize": cmd_kernelize,
    "generate": cmd_generate,
    "oracle": cmd_oracle,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the ``divmatch`` command.

    Args:
        argv: Arguments without the program name; ``sys.argv[1:]`` if None.

    Returns:
        The process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_YES

    try:
        config = load_config(args.config)
        if not validate_config(config):
            raise UsageError("invalid configuration")
        config = _apply_overrides(config, args)
        if not validate_config(config):
            raise UsageError("invalid command-line overrides")
        setup_logging(config["logging"]["level"], config["logging"].get("file"))

        result = COMMANDS[args.command](args, config)
    except (DivMatchError, ValueError, OSError, yaml.YAMLError) as e:
        sys.stderr.write(f"divmatch: error: {e}\n")
        return EXIT_USAGE

    if not isinstance(result, RunReport):
        return EXIT_YES
    _emit(result, args)
    if result.decision == "NO":
        return EXIT_NO
    return EXIT_YES


if __name__ == "__main__":
    sys.exit(main())
