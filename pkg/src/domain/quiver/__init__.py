"""
Quiver Domain Layer - Package Initialization
"""

from src.domain.quiver.entities import (
    Arrow,
    Quiver,
    PiModule,
    Interval,
    IntervalSpec,
    ModuleSource,
    RationalMatrix,
)

__all__ = [
    'Arrow',
    'Quiver',
    'PiModule',
    'Interval',
    'IntervalSpec',
    'ModuleSource',
    'RationalMatrix',
]
