"""
Verification Domain Layer - Package Initialization
"""

from src.domain.verification.entities import (
    VerificationMode,
    VerificationReport,
    FactorCheckResult,
    AdmissibilityReport,
    PresentationComparison,
)

__all__ = [
    'VerificationMode',
    'VerificationReport',
    'FactorCheckResult',
    'AdmissibilityReport',
    'PresentationComparison',
]
