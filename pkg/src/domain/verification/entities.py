"""
Verification Entities
Clean Architecture: Domain Layer

고정점 환 쪽과 퀴버 그라스마니안 쪽 비교 결과
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from src.domain.fixed_point_ring.value_objects import QuotientSummary


class VerificationMode(str, Enum):
    """assert: 불일치를 실패로 판정 / explore: 불일치를 관찰 결과로만 기록"""
    ASSERT = "assert"
    EXPLORE = "explore"


@dataclass
class VerificationReport:
    """
    (M, e) 한 건의 검증 결과

    Attributes:
        module: 모듈 식별자
        e: 차원 벡터
        ring_dim: 고정점 환 차원 (무한이면 None)
        ring_hilbert: 가중치별 차원
        chi: Euler 표수 (계산 불가면 None)
        poincare: Poincaré 다항식 계수 (q^0 부터)
        dim_match: ring_dim == chi
        series_match: ring_hilbert == poincare
        mode: 검증 모드
        chi_source: chi 계산 출처 ("euler_cc" 또는 "poincare")
        elapsed_seconds: 소요 시간 (JSON 출력에서는 제외)
    """
    module: str
    e: Tuple[int, ...]
    ring_dim: Optional[int]
    ring_hilbert: List[int]
    chi: Optional[int]
    poincare: List[int]
    dim_match: bool
    series_match: bool
    mode: VerificationMode = VerificationMode.ASSERT
    chi_source: str = "euler_cc"
    elapsed_seconds: float = 0.0
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.dim_match and self.series_match

    @property
    def is_anomaly(self) -> bool:
        """assert 모드에서 실패했거나 환이 무한 차원"""
        if self.ring_dim is None:
            return True
        return self.mode == VerificationMode.ASSERT and not self.passed

    def to_dict(self) -> Dict[str, Any]:
        """JSON 리포트 스키마 (timing 제외, 바이트 안정)"""
        return {
            "module": self.module,
            "e": list(self.e),
            "ring_dim": self.ring_dim,
            "ring_hilbert": list(self.ring_hilbert),
            "chi": self.chi,
            "poincare": list(self.poincare),
            "dim_match": self.dim_match,
            "series_match": self.series_match,
            "mode": self.mode.value,
        }


@dataclass
class FactorCheckResult:
    """
    직합 분해 항등식 dim(M1⊕M2, e) = Σ dim(M1, e1)·dim(M2, e2) 결과

    Attributes:
        e: 검사한 차원 벡터
        lhs: 직합의 환 차원
        rhs: 합성곱 합
        terms: (e1, e2, dim1, dim2) 항 목록
    """
    e: Tuple[int, ...]
    lhs: Optional[int]
    rhs: Optional[int]
    terms: List[Tuple[Tuple[int, ...], Tuple[int, ...], int, int]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.lhs is not None and self.lhs == self.rhs


@dataclass
class AdmissibilityReport:
    """
    Cartan 타입 하나에 대한 admissibility 전수 검사 결과

    Attributes:
        label: Cartan 타입 (예: "A3")
        group_order: |W|
        words_checked: 검사한 (축약 단어, j) 쌍 수
        counterexamples: (단어, j) 반례 목록
    """
    label: str
    group_order: int
    words_checked: int
    counterexamples: List[Tuple[Tuple[int, ...], int]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples


@dataclass
class PresentationComparison:
    """
    유한 표현 (b 절단) 과 소거 표현 (b = a^{-1}) 의 몫환 비교

    Attributes:
        module: 모듈 식별자
        e: 차원 벡터
        finite: 유한 표현의 몫환 요약
        elimination: 소거 표현의 몫환 요약 (마지막 cutoff)
        cutoff: 소거 표현의 마지막 cutoff
        stable: 연속한 두 cutoff 에서 요약이 같았는지
    """
    module: str
    e: Tuple[int, ...]
    finite: QuotientSummary
    elimination: QuotientSummary
    cutoff: int
    stable: bool

    @property
    def agree(self) -> bool:
        return self.stable and self.finite.same_size(self.elimination)
