"""
공용 pytest fixture
"""
import sys
from pathlib import Path

import pytest

# 프로젝트 루트 추가
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.domain.quiver.entities import IntervalSpec, ModuleSource  # noqa: E402
from src.services.pi_module_service import PiModuleService  # noqa: E402
from src.services.weyl_group_service import cartan_matrix  # noqa: E402

MODULES_DIR = PROJECT_ROOT / "data" / "modules"
FIXTURES_DIR = PROJECT_ROOT / "tests" / "fixtures"


@pytest.fixture
def pi_service():
    return PiModuleService()


@pytest.fixture
def a1():
    return cartan_matrix("A", 1)


@pytest.fixture
def a2():
    return cartan_matrix("A", 2)


@pytest.fixture
def a3():
    return cartan_matrix("A", 3)


@pytest.fixture
def interval_module(pi_service):
    """(rank, [(from, to, mult), ...]) → PiModule"""
    def build(rank, triples):
        spec = IntervalSpec.of(rank, triples)
        return pi_service.build_from_intervals(cartan_matrix("A", rank), spec)
    return build


@pytest.fixture
def interval_source(pi_service):
    """(rank, [(from, to, mult), ...]) → ModuleSource (구간 명세 포함)"""
    def build(rank, triples):
        spec = IntervalSpec.of(rank, triples)
        module = pi_service.build_from_intervals(cartan_matrix("A", rank), spec)
        return ModuleSource(quiver=module.quiver, module=module, intervals=spec)
    return build
