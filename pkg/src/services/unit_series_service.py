"""
Unit Series Service
t^{-1} 에 대한 절단 단위 급수 (상수항 1) 와 그 산술
Clean Architecture: Application Layer (helper)

계수는 sympy PolyRing 원소이며, 변수 a_{i,j}, b_{i,k} 의 가중치는 j, k 이다.
단항식 순서는 가중 차수 우선의 역사전식 (WeightedReverseLexOrder).
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from sympy import QQ, Symbol
from sympy.polys.orderings import MonomialOrder
from sympy.polys.rings import PolyElement, PolyRing

from src.domain.exceptions import InputError
from src.domain.fixed_point_ring.value_objects import (
    Generator,
    RingVariable,
    weighted_grevlex_key,
)


class WeightedReverseLexOrder(MonomialOrder):
    """가중 차수 → 역사전식 순서 (가중치 양수이므로 대역적 단항식 순서)"""

    alias = "wgrevlex"
    is_global = True

    def __init__(self, weights: Sequence[int]):
        self.weights = tuple(weights)

    def __call__(self, monomial):
        return weighted_grevlex_key(self.weights, monomial)

    def __repr__(self):
        return f"{self.__class__.__name__}({self.weights})"

    def __eq__(self, other):
        return isinstance(other, WeightedReverseLexOrder) and self.weights == other.weights

    def __hash__(self):
        return hash((self.__class__, self.weights))


def polynomial_ring(variables: Sequence[RingVariable]) -> PolyRing:
    """
    변수 목록의 유리수 계수 다항식환

    Raises:
        InputError: 변수가 없음 (상수 환은 호출부에서 처리)
    """
    if not variables:
        raise InputError("a polynomial ring needs at least one variable")
    order = WeightedReverseLexOrder([v.weight for v in variables])
    return PolyRing([Symbol(v.name) for v in variables], QQ, order)


def to_poly(ring: PolyRing, terms) -> PolyElement:
    return ring.from_dict({mono: QQ(c.numerator, c.denominator) for mono, c in terms})


def to_terms(poly: PolyElement) -> Tuple[Tuple[Tuple[int, ...], Fraction], ...]:
    return tuple(
        (tuple(mono), Fraction(int(c.numerator), int(c.denominator)))
        for mono, c in sorted(poly.items())
    )


def to_generator(provenance: str, poly: PolyElement) -> Generator:
    return Generator(provenance=provenance, terms=to_terms(poly))


@dataclass
class UnitSeries:
    """
    1 + c_1 t^{-1} + ... + c_N t^{-N}

    Attributes:
        coefficients: [1, c_1, ..., c_N]
    """
    coefficients: List[PolyElement]

    @property
    def ring(self) -> PolyRing:
        return self.coefficients[0].ring

    @property
    def length(self) -> int:
        """저장된 최고 차수 N"""
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> PolyElement:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return self.ring.zero


def variable_series(ring: PolyRing, variables: Sequence[RingVariable], kind: str, vertex: int) -> UnitSeries:
    """a_i = 1 + Σ a_{i,j} t^{-j} (b 도 같은 방식)"""
    index = {(v.kind, v.vertex, v.index): pos for pos, v in enumerate(variables)}
    coefficients = [ring.one]
    k = 1
    while (kind, vertex, k) in index:
        coefficients.append(ring.gens[index[(kind, vertex, k)]])
        k += 1
    return UnitSeries(coefficients)


def multiply(first: UnitSeries, second: UnitSeries, order: int) -> UnitSeries:
    """곱을 t^{-order} 까지 절단"""
    ring = first.ring
    out = []
    for k in range(order + 1):
        total = ring.zero
        for j in range(k + 1):
            x, y = first.coefficient(j), second.coefficient(k - j)
            if x and y:
                total += x * y
        out.append(total)
    return UnitSeries(out)


def inverse_series(series: UnitSeries, order: int) -> UnitSeries:
    """
    a^{-1} 을 t^{-order} 까지: b_0 = 1, b_k = -Σ_{j=1..min(k, N)} a_j b_{k-j}
    """
    if order < 0:
        raise InputError(f"series order must be nonnegative, got {order}")
    ring = series.ring
    inverse = [ring.one]
    for k in range(1, order + 1):
        total = ring.zero
        for j in range(1, min(k, series.length) + 1):
            total -= series.coefficient(j) * inverse[k - j]
        inverse.append(total)
    return UnitSeries(inverse)


def power_product(factors: Sequence[Tuple[UnitSeries, int]], order: int) -> UnitSeries:
    """Π series^exponent 를 t^{-order} 까지 절단"""
    if not factors:
        raise InputError("a series product needs at least one factor")
    ring = factors[0][0].ring
    product = UnitSeries([ring.one])
    for series, exponent in factors:
        if exponent < 1:
            raise InputError(f"series exponents must be positive integers, got {exponent}")
        for _ in range(exponent):
            product = multiply(product, series, order)
    return product


def series_coefficient(factors: Sequence[Tuple[UnitSeries, int]], k: int) -> PolyElement:
    """Π series^exponent 의 t^{-k} 계수"""
    if k < 0:
        raise InputError(f"coefficient order must be nonnegative, got {k}")
    return power_product(factors, k).coefficient(k)


def ab_coefficients(a: UnitSeries, b: UnitSeries, top: int) -> List[PolyElement]:
    """a·b - 1 의 t^{-1} .. t^{-top} 계수"""
    product = multiply(a, b, top)
    return [product.coefficient(k) for k in range(1, top + 1)]


def ab_relations(i: int, e_i: int, d_i: int) -> List[PolyElement]:
    """
    정점 i 의 a_i b_i = 1 관계식 (d_i 개)

    a_i 는 e_i 에서, b_i 는 d_i - e_i 에서 절단한다.

    Raises:
        InputError: e_i 가 [0, d_i] 밖
    """
    if not 0 <= e_i <= d_i:
        raise InputError(f"e_{i}={e_i} outside [0, {d_i}]")
    if d_i == 0:
        return []
    variables = [RingVariable("a", i, j) for j in range(1, e_i + 1)]
    variables += [RingVariable("b", i, k) for k in range(1, d_i - e_i + 1)]
    ring = polynomial_ring(variables)
    a = variable_series(ring, variables, "a", i)
    b = variable_series(ring, variables, "b", i)
    return ab_coefficients(a, b, d_i)


def ring_variables(a_lengths: Sequence[int], b_lengths: Sequence[int]) -> List[RingVariable]:
    """a_{i,j} (j <= a_lengths[i]) 를 먼저, 그 다음 b_{i,k} (k <= b_lengths[i])"""
    variables = [
        RingVariable("a", i, j)
        for i, n in enumerate(a_lengths, start=1)
        for j in range(1, n + 1)
    ]
    variables += [
        RingVariable("b", i, k)
        for i, n in enumerate(b_lengths, start=1)
        for k in range(1, n + 1)
    ]
    return variables


def series_by_vertex(ring: PolyRing, variables: Sequence[RingVariable], kind: str, vertices) -> Dict[int, UnitSeries]:
    return {v: variable_series(ring, variables, kind, v) for v in vertices}
