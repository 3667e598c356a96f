"""
Interface definition for diverse-pair solvers.

This module defines the abstract interface shared by the bipartite,
colour-coding, kernel and brute-force solvers so that the command-line
dispatch can treat them uniformly.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

from divmatch.config import get_default_config
from divmatch.graph.core import Graph
from divmatch.logging import get_logger
from divmatch.solvers.outcome import SolveOutcome, Variant


class DiversePairSolver(ABC):
    """
    Abstract interface for deciding diverse-pair instances.

    Attributes:
        config: Full configuration dictionary.
        logger: Logger named after the concrete solver.
    """

    supported_variants = (Variant.MAXIMUM, Variant.PERFECT)

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the solver.

        Args:
            config: Configuration dictionary; the defaults are used if omitted.
        """
        self.config = config or get_default_config()
        self.logger = get_logger(type(self).__name__)

    @property
    def tie_break_edge_limit(self) -> int:
        return self.config["matching"]["tie_break_edge_limit"]

    def supports(self, variant: Variant) -> bool:
        return variant in self.supported_variants

    @abstractmethod
    def solve(self, graph: Graph, k: int, variant: Variant = Variant.MAXIMUM) -> SolveOutcome:
        """
        Decide whether ``graph`` has two matchings of ``variant`` with
        symmetric difference at least ``k``.

        Args:
            graph: The instance graph.
            k: The diversity target.
            variant: Which matchings the pair may be drawn from.

        Returns:
            The outcome; YES outcomes carry a verified certificate.
        """
        pass
