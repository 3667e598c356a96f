"""
Matching engine for the divmatch package.

This module provides the exact matching subroutines every solver builds on.
"""

from divmatch.matching.engine import (
    CostFunction,
    TwoFactor,
    WeightedMultigraph,
    is_two_factor,
    max_weight_two_factor,
    maximum_matching,
    min_cost_maximum_matching,
)

__all__ = [
    'CostFunction',
    'TwoFactor',
    'WeightedMultigraph',
    'is_two_factor',
    'max_weight_two_factor',
    'maximum_matching',
    'min_cost_maximum_matching',
]
