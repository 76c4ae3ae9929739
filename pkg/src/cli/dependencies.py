"""
Dependency Injection Container
CLI 한 번 실행에 필요한 Repository 와 Service 인스턴스를 한곳에서 생성

Clean Architecture:
- Repository 는 Infrastructure Layer 에서 생성
- Service 는 Application Layer 에서 생성
- CLI 는 이 Container 에서 필요한 인스턴스를 가져감
"""
from dataclasses import dataclass
from typing import Optional

from config import POINT_COUNT_CONFIG, SCAN_CONFIG
from src.infrastructure.repositories.dynkin_diagram_repository import YAMLDynkinCatalogRepository
from src.infrastructure.repositories.module_file_repository import JSONModuleFileRepository
from src.infrastructure.repositories.report_repository import JSONReportRepository
from src.services.fixed_point_ring_service import FixedPointRingService
from src.services.pi_module_service import PiModuleService
from src.services.quiver_grassmannian_service import QuiverGrassmannianService
from src.services.verification_service import VerificationService


@dataclass
class Container:
    """CLI 실행 단위의 객체 묶음"""
    catalog: YAMLDynkinCatalogRepository
    module_repo: JSONModuleFileRepository
    report_repo: JSONReportRepository
    pi_service: PiModuleService
    ring_service: FixedPointRingService
    grassmannian_service: QuiverGrassmannianService
    verification_service: VerificationService


def build_container(max_dim: Optional[int] = None, workers: Optional[int] = None) -> Container:
    """
    CLI 플래그 (--max-dim, --workers) 를 반영해 Container 생성

    Args:
        max_dim: Σ d_i 상한 (None 이면 POINT_COUNT_CONFIG)
        workers: scan 병렬 워커 수 (None 이면 SCAN_CONFIG)
    """
    catalog = YAMLDynkinCatalogRepository()
    pi_service = PiModuleService()
    ring_service = FixedPointRingService(pi_service)
    grassmannian_service = QuiverGrassmannianService(
        max_total_dim=POINT_COUNT_CONFIG["max_total_dim"] if max_dim is None else max_dim,
    )
    verification_service = VerificationService(
        pi_service=pi_service,
        ring_service=ring_service,
        grassmannian_service=grassmannian_service,
        max_workers=SCAN_CONFIG["max_workers"] if workers is None else workers,
    )
    return Container(
        catalog=catalog,
        module_repo=JSONModuleFileRepository(catalog=catalog),
        report_repo=JSONReportRepository(),
        pi_service=pi_service,
        ring_service=ring_service,
        grassmannian_service=grassmannian_service,
        verification_service=verification_service,
    )
