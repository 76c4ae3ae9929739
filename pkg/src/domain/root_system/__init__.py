"""
Root System Domain Layer - Package Initialization
"""

from src.domain.root_system.value_objects import CartanFamily, CartanData, Weight, Coweight
from src.domain.root_system.entities import WeylElement, ChamberWeight

__all__ = [
    'CartanFamily',
    'CartanData',
    'Weight',
    'Coweight',
    'WeylElement',
    'ChamberWeight',
]
