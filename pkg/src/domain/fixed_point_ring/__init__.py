"""
Fixed-Point Ring Domain Layer - Package Initialization
"""

from src.domain.fixed_point_ring.value_objects import (
    RingVariable,
    Generator,
    RingPresentation,
    QuotientSummary,
    weighted_grevlex_key,
)

__all__ = [
    'RingVariable',
    'Generator',
    'RingPresentation',
    'QuotientSummary',
    'weighted_grevlex_key',
]
