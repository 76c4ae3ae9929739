# Repositories __init__.py
from src.domain.repositories.interfaces import (
    IDynkinCatalogRepository,
    IModuleRepository,
    IReportRepository,
)

__all__ = [
    "IDynkinCatalogRepository",
    "IModuleRepository",
    "IReportRepository",
]
