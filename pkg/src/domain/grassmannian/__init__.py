"""
Quiver Grassmannian Domain Layer - Package Initialization
"""

from src.domain.grassmannian.value_objects import DimVector, PoincarePoly

__all__ = ['DimVector', 'PoincarePoly']
