# Domain Layer __init__.py
from src.domain.exceptions import (
    MVCycleError,
    InputError,
    RelationViolationError,
    UnsupportedInputError,
    BoundExceededError,
    PavingAssumptionError,
)
from src.domain.root_system import CartanData, CartanFamily, Weight, Coweight, WeylElement, ChamberWeight
from src.domain.quiver import Quiver, PiModule, IntervalSpec, ModuleSource
from src.domain.grassmannian import DimVector, PoincarePoly
from src.domain.fixed_point_ring import RingPresentation, QuotientSummary
from src.domain.verification import VerificationMode, VerificationReport

__all__ = [
    # Exceptions
    "MVCycleError",
    "InputError",
    "RelationViolationError",
    "UnsupportedInputError",
    "BoundExceededError",
    "PavingAssumptionError",
    # Value objects / entities
    "CartanData",
    "CartanFamily",
    "Weight",
    "Coweight",
    "WeylElement",
    "ChamberWeight",
    "Quiver",
    "PiModule",
    "IntervalSpec",
    "ModuleSource",
    "DimVector",
    "PoincarePoly",
    "RingPresentation",
    "QuotientSummary",
    "VerificationMode",
    "VerificationReport",
]
