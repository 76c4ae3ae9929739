"""
Verification Service
고정점 환 쪽 (차원, Hilbert 급수) 과 퀴버 그라스마니안 쪽 (χ, Poincaré 다항식) 비교
Clean Architecture: Application Layer

- verify: (M, e) 한 건
- scan: 0 <= e <= d 전체 (ThreadPoolExecutor 병렬, 결과는 e 사전식 정렬)
- factor_check: 직합에 대한 환 차원 합성곱 항등식
- compare_presentations: 유한 표현과 소거 표현의 몫환 비교
"""
import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

from config import SCAN_CONFIG
from src.domain.exceptions import BoundExceededError, InputError, PavingAssumptionError
from src.domain.quiver.entities import IntervalSpec, ModuleSource, PiModule
from src.domain.root_system.value_objects import CartanFamily
from src.domain.verification.entities import (
    AdmissibilityReport,
    FactorCheckResult,
    PresentationComparison,
    VerificationMode,
    VerificationReport,
)
from src.services.fixed_point_ring_service import FixedPointRingService
from src.services.pi_module_service import PiModuleService
from src.services.quiver_grassmannian_service import QuiverGrassmannianService
from src.services.weyl_group_service import admissibility_sweep

logger = logging.getLogger(__name__)

try:
    from tqdm import tqdm
    TQDM_AVAILABLE = True
except ImportError:
    TQDM_AVAILABLE = False


def all_dimension_vectors(dims: Sequence[int]) -> List[Tuple[int, ...]]:
    """0 <= e <= d 인 모든 e (사전식)"""
    return [tuple(e) for e in itertools.product(*(range(d + 1) for d in dims))]


class VerificationService:
    """
    검증 오케스트레이션 서비스

    하위 서비스는 생성자에서 주입하며, 없으면 설정 기본값으로 만든다.
    """

    def __init__(
        self,
        pi_service: Optional[PiModuleService] = None,
        ring_service: Optional[FixedPointRingService] = None,
        grassmannian_service: Optional[QuiverGrassmannianService] = None,
        max_cases: Optional[int] = None,
        max_workers: Optional[int] = None,
    ):
        self.pi_service = pi_service or PiModuleService()
        self.ring_service = ring_service or FixedPointRingService(self.pi_service)
        self.grassmannian_service = grassmannian_service or QuiverGrassmannianService()
        self.max_cases = SCAN_CONFIG["max_cases"] if max_cases is None else max_cases
        self.max_workers = SCAN_CONFIG["max_workers"] if max_workers is None else max_workers
        if self.max_workers < 1:
            raise InputError(f"max_workers must be at least 1, got {self.max_workers}")

    # =========================================================================
    # 모드 / 구간 명세
    # =========================================================================

    def default_mode(self, module: PiModule) -> VerificationMode:
        """A 타입 kQ-모듈은 assert, 그 외 Π-모듈은 explore"""
        if module.cartan.family == CartanFamily.A and self.pi_service.is_kq_module(module):
            return VerificationMode.ASSERT
        return VerificationMode.EXPLORE

    def interval_spec(self, source: ModuleSource) -> Optional[IntervalSpec]:
        """구간 명세 (파일에 없으면 분해를 시도, 불가하면 None)"""
        if source.intervals is not None:
            return source.intervals
        try:
            return self.pi_service.decompose_intervals(source.module)
        except InputError:
            return None

    # =========================================================================
    # 단일 검증
    # =========================================================================

    def verify(
        self,
        source: ModuleSource,
        e: Sequence[int],
        mode: Optional[VerificationMode] = None,
        spec: Optional[IntervalSpec] = None,
    ) -> VerificationReport:
        """
        (M, e) 한 건에 대해 양쪽을 계산하고 비교

        Args:
            source: 모듈 파일 읽기 결과
            e: 차원 벡터 (0 <= e <= d)
            mode: None 이면 default_mode
            spec: 미리 구한 구간 명세 (scan 에서 재사용)

        Returns:
            VerificationReport

        Raises:
            InputError: e 범위 오류
            PavingAssumptionError: assert 모드에서 보간이 정수 다항식이 아님
        """
        started = time.perf_counter()
        module = source.module
        mode = mode or self.default_mode(module)
        coords = tuple(int(x) for x in e)
        notes: List[str] = []

        summary = self.ring_service.ring_summary(module, coords)
        hilbert = list(summary.hilbert)

        try:
            poincare = self.grassmannian_service.poincare_poly(module, coords)
            poincare_list: Optional[List[int]] = poincare.as_list()
        except PavingAssumptionError as exc:
            if mode == VerificationMode.ASSERT:
                raise
            logger.warning(f"[VerificationService] {module.display_name()} e={list(coords)}: {exc}")
            notes.append(str(exc))
            poincare, poincare_list = None, None

        spec = spec if spec is not None else self.interval_spec(source)
        if spec is not None:
            chi = self.grassmannian_service.euler_cc(spec, coords)
            chi_source = "euler_cc"
            if poincare is not None and poincare.evaluate(1) != chi:
                notes.append(f"euler_cc {chi} differs from P(1) = {poincare.evaluate(1)}")
        else:
            chi = poincare.evaluate(1) if poincare is not None else None
            chi_source = "poincare"

        if summary.is_infinite:
            notes.append("fixed-point ring is infinite dimensional")

        report = VerificationReport(
            module=module.display_name(),
            e=coords,
            ring_dim=summary.dimension,
            ring_hilbert=hilbert,
            chi=chi,
            poincare=poincare_list if poincare_list is not None else [],
            dim_match=summary.dimension is not None and summary.dimension == chi,
            series_match=poincare_list is not None and hilbert == poincare_list,
            mode=mode,
            chi_source=chi_source,
            elapsed_seconds=time.perf_counter() - started,
            notes=notes,
        )
        if not report.passed:
            logger.warning(
                f"[VerificationService] {report.module} e={list(coords)} ({mode.value}): "
                f"ring {summary} vs chi {chi}, P = {poincare}"
            )
        else:
            logger.debug(f"[VerificationService] {report.module} e={list(coords)}: ok")
        return report

    # =========================================================================
    # 전체 스캔
    # =========================================================================

    def scan(
        self,
        source: ModuleSource,
        mode: Optional[VerificationMode] = None,
        show_progress: bool = False,
    ) -> List[VerificationReport]:
        """
        0 <= e <= d 인 모든 e 를 병렬로 검증

        Raises:
            BoundExceededError: Π (d_i + 1) 이 max_cases 초과
        """
        module = source.module
        cases = prod(d + 1 for d in module.dims)
        if cases > self.max_cases:
            raise BoundExceededError(
                f"scan of {module.display_name()} needs {cases} cases (max {self.max_cases})"
            )
        mode = mode or self.default_mode(module)
        spec = self.interval_spec(source)
        vectors = all_dimension_vectors(module.dims)

        reports: List[VerificationReport] = []
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            futures = {executor.submit(self.verify, source, e, mode, spec): e for e in vectors}
            if show_progress and TQDM_AVAILABLE:
                iterator = tqdm(as_completed(futures), total=len(futures), desc="scan")
            else:
                iterator = as_completed(futures)
            for future in iterator:
                reports.append(future.result())

        reports.sort(key=lambda r: r.e)
        passed = sum(1 for r in reports if r.passed)
        logger.info(
            f"[VerificationService] scan {module.display_name()}: "
            f"{passed}/{len(reports)} pass ({mode.value})"
        )
        return reports

    # =========================================================================
    # 직합 분해 항등식
    # =========================================================================

    def factor_check(self, first: PiModule, second: PiModule, e: Sequence[int]) -> FactorCheckResult:
        """
        dim O(M1⊕M2, e) = Σ_{e1+e2=e} dim O(M1, e1) · dim O(M2, e2)

        Raises:
            InputError: 퀴버가 다르거나 e 범위 오류
        """
        total = self.pi_service.direct_sum(first, second)
        coords = tuple(int(x) for x in e)
        lhs = self.ring_service.ring_summary(total, coords).dimension

        cache: Dict[Tuple[int, Tuple[int, ...]], Optional[int]] = {}

        def ring_dim(index: int, module: PiModule, vector: Tuple[int, ...]) -> Optional[int]:
            key = (index, vector)
            if key not in cache:
                cache[key] = self.ring_service.ring_summary(module, vector).dimension
            return cache[key]

        terms = []
        rhs: Optional[int] = 0
        for e1 in all_dimension_vectors(first.dims):
            e2 = tuple(x - y for x, y in zip(coords, e1))
            if any(x < 0 or x > d for x, d in zip(e2, second.dims)):
                continue
            dim1 = ring_dim(1, first, e1)
            dim2 = ring_dim(2, second, e2)
            if dim1 is None or dim2 is None:
                rhs = None
                continue
            terms.append((e1, e2, dim1, dim2))
            if rhs is not None:
                rhs += dim1 * dim2

        result = FactorCheckResult(e=coords, lhs=lhs, rhs=rhs, terms=terms)
        if not result.holds:
            logger.warning(
                f"[VerificationService] factorization fails for "
                f"{total.display_name()} e={list(coords)}: {lhs} != {rhs}"
            )
        return result

    def factor_check_all(self, first: PiModule, second: PiModule) -> List[FactorCheckResult]:
        """0 <= e <= d1 + d2 전체에 대한 factor_check"""
        dims = tuple(a + b for a, b in zip(first.dims, second.dims))
        return [self.factor_check(first, second, e) for e in all_dimension_vectors(dims)]

    # =========================================================================
    # 표현 비교 / admissibility
    # =========================================================================

    def compare_presentations(self, module: PiModule, e: Sequence[int]) -> PresentationComparison:
        """유한 표현과 소거 표현의 몫환 크기 비교"""
        coords = tuple(int(x) for x in e)
        finite = self.ring_service.ring_summary(module, coords)
        elimination = self.ring_service.stable_elimination_summary(module, coords)
        comparison = PresentationComparison(
            module=module.display_name(),
            e=coords,
            finite=finite,
            elimination=elimination.summary,
            cutoff=elimination.cutoff,
            stable=elimination.stable,
        )
        if not comparison.agree:
            logger.warning(
                f"[VerificationService] presentations differ for {comparison.module} "
                f"e={list(coords)}: finite {finite} vs elimination {elimination.summary}"
            )
        return comparison

    def admissibility(self, types: Optional[Sequence[Tuple[str, int]]] = None) -> List[AdmissibilityReport]:
        return admissibility_sweep(types)
