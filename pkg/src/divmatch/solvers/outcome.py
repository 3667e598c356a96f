"""
Solver outcomes and certificate checks.

This module defines the decision/certificate value returned by every
solver and the independent re-check applied to each certificate before it
is returned.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from divmatch.errors import UsageError
from divmatch.graph.core import Graph, Matching, is_matching, symmetric_difference_size


MatchingPair = Tuple[Matching, Matching]


class Decision(str, Enum):
    YES = "YES"
    NO = "NO"


class SolveMode(str, Enum):
    RANDOMIZED = "randomized"
    DETERMINISTIC = "deterministic"
    BIPARTITE = "bipartite"
    KERNEL_SPLIT = "kernel-split"
    ORACLE = "oracle"


class Variant(str, Enum):
    """Which matchings a pair may be drawn from."""

    ANY_MATCHING = "any_matching"
    MAXIMUM = "maximum"
    PERFECT = "perfect"


@dataclass(frozen=True)
class SolveOutcome:
    """
    A decision together with the evidence supporting it.

    Attributes:
        decision: YES or NO.
        certificate: The pair of matchings witnessing a YES.
        trials_used: Number of colourings tried (0 when none were needed).
        mode: The algorithm that produced the decision.
        diversity: Symmetric difference of the certificate, or the exact
            optimum when the solver computes it.
        reason: Short explanation for NO answers decided without search.
        exact: False when a NO rests on a colouring family that is not
            known to be universal.
    """

    decision: Decision
    certificate: Optional[MatchingPair] = None
    trials_used: int = 0
    mode: SolveMode = SolveMode.DETERMINISTIC
    diversity: Optional[int] = None
    reason: Optional[str] = None
    exact: bool = True

    @property
    def is_yes(self) -> bool:
        return self.decision is Decision.YES


def check_certificate(graph: Graph, pair: MatchingPair, k: int, variant: Variant,
                      required_size: Optional[int] = None) -> int:
    """
    Re-validate a certificate from scratch.

    Args:
        graph: The instance graph.
        pair: The two matchings.
        k: The diversity target.
        variant: The problem variant the pair must belong to.
        required_size: μ(graph), needed for the maximum and perfect variants.

    Returns:
        The symmetric difference of the pair.

    Raises:
        UsageError: If the certificate is invalid for the instance.
    """
    first, second = pair
    for matching in pair:
        if matching.graph is not graph and matching.graph != graph:
            raise UsageError("certificate refers to a different graph")
        if not is_matching(graph, matching.edge_ids):
            raise UsageError("certificate contains a non-matching")
    if variant is not Variant.ANY_MATCHING:
        if required_size is None:
            raise UsageError("required_size is needed to check maximum/perfect certificates")
        if len(first) != required_size or len(second) != required_size:
            raise UsageError(f"certificate sizes {len(first)}, {len(second)} differ from μ = {required_size}")
        if variant is Variant.PERFECT and 2 * required_size != graph.vertex_count:
            raise UsageError("certificate matchings are not perfect")
    diversity = symmetric_difference_size(first, second)
    if diversity < k:
        raise UsageError(f"certificate diversity {diversity} is below k = {k}")
    return diversity


def yes(pair: MatchingPair, mode: SolveMode, trials_used: int = 0) -> SolveOutcome:
    """Build a YES outcome whose diversity is the certificate's."""
    return SolveOutcome(
        decision=Decision.YES,
        certificate=pair,
        trials_used=trials_used,
        mode=mode,
        diversity=symmetric_difference_size(*pair),
    )


def no(mode: SolveMode, trials_used: int = 0, reason: Optional[str] = None,
       diversity: Optional[int] = None, exact: bool = True) -> SolveOutcome:
    return SolveOutcome(
        decision=Decision.NO,
        trials_used=trials_used,
        mode=mode,
        diversity=diversity,
        reason=reason,
        exact=exact,
    )
