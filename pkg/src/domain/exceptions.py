"""
Domain Exceptions
Clean Architecture: Domain Layer

서비스 계층이 발생시키는 예외 계층. CLI 가 종료 코드로 변환한다.
"""
from fractions import Fraction
from typing import List, Sequence


class MVCycleError(Exception):
    """검증 도구 공통 예외"""
    pass


class InputError(MVCycleError):
    """입력 오류 (스키마, 범위, rank 불일치, 잘못된 Cartan 타입) - 종료 코드 2"""
    pass


class RelationViolationError(InputError):
    """전사영 관계식 위반 - 위반 정점 목록을 함께 보관"""

    def __init__(self, vertices: Sequence[int]):
        self.vertices: List[int] = sorted(vertices)
        super().__init__(
            f"preprojective relation fails at vertices {self.vertices}"
        )


class UnsupportedInputError(MVCycleError):
    """지원하지 않는 입력 (chamber weight 계수 |γ_i| >= 2 등)"""
    pass


class BoundExceededError(MVCycleError):
    """설정된 계산 상한 초과"""
    pass


class PavingAssumptionError(MVCycleError):
    """
    점 개수 보간 결과가 음이 아닌 정수 계수가 아님

    Attributes:
        coefficients: 보간된 유리수 계수 (q^0 부터)
    """

    def __init__(self, coefficients: Sequence[Fraction]):
        self.coefficients: List[Fraction] = list(coefficients)
        rendered = ", ".join(str(c) for c in self.coefficients)
        super().__init__(
            f"interpolated point count is not a nonnegative integer polynomial: [{rendered}]"
        )
