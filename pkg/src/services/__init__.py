# Services Layer __init__.py
from src.services.weyl_group_service import WeylGroupService, cartan_matrix, pairing, weyl_service_for
from src.services.pi_module_service import PiModuleService, PolytopeData
from src.services.quiver_grassmannian_service import QuiverGrassmannianService
from src.services.fixed_point_ring_service import FixedPointRingService, EliminationResult
from src.services.verification_service import VerificationService

__all__ = [
    # Root system
    "WeylGroupService",
    "cartan_matrix",
    "pairing",
    "weyl_service_for",

    # Π-modules
    "PiModuleService",
    "PolytopeData",

    # Both sides of the comparison
    "QuiverGrassmannianService",
    "FixedPointRingService",
    "EliminationResult",

    # Orchestration
    "VerificationService",
]
