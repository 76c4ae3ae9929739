"""
Fixed-Point Ring Service
고정점 환 k[a_ij, b_ik]/I(M) 의 유한 표현과 몫환 차원 / Hilbert 급수
Clean Architecture: Application Layer

- 변수: a_{i,j} (j <= e_i, 가중치 j), b_{i,k} (k <= d_i - e_i, 가중치 k)
- 관계식: a_i b_i = 1 의 계수, 그리고 γ ∈ Γ 마다
  deg(Π a_i^{γ_i^+} Π b_i^{γ_i^-}) <= (γ, ν) - A_γ 를 넘는 차수의 계수
- A_γ = -D_{-γ}(M) = -dim ker φ_γ(M), ν = Σ e_i α̌_i
- (γ, ν) - A_γ < 0 이면 단위 아이디얼 (고정점 성분이 비어 있음)
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.groebnertools import groebner

from config import RING_CONFIG
from src.domain.exceptions import InputError
from src.domain.fixed_point_ring.value_objects import (
    Generator,
    QuotientSummary,
    RingPresentation,
    RingVariable,
)
from src.domain.quiver.entities import PiModule
from src.domain.root_system.entities import ChamberWeight
from src.domain.root_system.value_objects import CartanData, Coweight, Weight
from src.services import unit_series_service as series
from src.services.pi_module_service import PiModuleService
from src.services.weyl_group_service import pairing, weyl_service_for

logger = logging.getLogger(__name__)


@dataclass
class EliminationResult:
    """
    소거 표현의 안정화 결과

    Attributes:
        summary: 마지막 cutoff 의 몫환 요약
        cutoff: 마지막으로 사용한 cutoff
        stable: 연속한 두 cutoff 의 요약이 같았는지
    """
    summary: QuotientSummary
    cutoff: int
    stable: bool


def _unit_generator(provenance: str, nvars: int) -> Generator:
    return Generator(provenance=provenance, terms=(((0,) * nvars, Fraction(1)),))


class _PresentationBuilder:
    """하나의 변수 집합 위에서 γ 관계식을 만드는 작업 공간"""

    def __init__(self, rank: int, a_lengths: Sequence[int], b_lengths: Sequence[int],
                 b_series_override: Optional[int] = None):
        self.rank = rank
        self.a_lengths = list(a_lengths)
        self.b_lengths = list(b_lengths)
        self.variables = series.ring_variables(a_lengths, b_lengths)
        self.ring = series.polynomial_ring(self.variables) if self.variables else None
        vertices = range(1, rank + 1)
        if self.ring is not None:
            self.a = series.series_by_vertex(self.ring, self.variables, "a", vertices)
            if b_series_override is None:
                self.b = series.series_by_vertex(self.ring, self.variables, "b", vertices)
            else:
                # 소거 표현: b_i = a_i^{-1} 을 cutoff 까지 전개
                self.b = {v: series.inverse_series(self.a[v], b_series_override) for v in vertices}

    def unit(self, provenance: str) -> Generator:
        return _unit_generator(provenance, len(self.variables))

    def ab_generators(self) -> List[Generator]:
        out: List[Generator] = []
        if self.ring is None:
            return out
        for i in range(1, self.rank + 1):
            top = self.a_lengths[i - 1] + self.b_lengths[i - 1]
            for k, coef in enumerate(series.ab_coefficients(self.a[i], self.b[i], top), start=1):
                if coef:
                    out.append(series.to_generator(f"ab[{i},k={k}]", coef))
        return out

    def gamma_generators(self, gamma: Weight, bound: int, top: int) -> List[Generator]:
        """bound < 0 이면 단위 생성원, 아니면 차수 bound+1 .. top 의 0 이 아닌 계수"""
        if bound < 0:
            return [self.unit(f"unit[{gamma}]")]
        if self.ring is None or top <= bound:
            return []
        factors = [(self.a[i], m) for i, m in gamma.positive_support()]
        factors += [(self.b[i], m) for i, m in gamma.negative_support()]
        product = series.power_product(factors, top)
        out: List[Generator] = []
        for k in range(bound + 1, top + 1):
            coef = product.coefficient(k)
            if coef:
                out.append(series.to_generator(f"gamma[{gamma},k={k}]", coef))
        return out


class FixedPointRingService:
    """
    고정점 환 서비스

    표현 생성과 Gröbner 계산은 호출마다 독립적인 지역 상태만 사용한다.
    """

    def __init__(
        self,
        pi_service: Optional[PiModuleService] = None,
        groebner_method: Optional[str] = None,
        elimination_extra_orders: Optional[int] = None,
    ):
        self.pi_service = pi_service or PiModuleService()
        self.groebner_method = groebner_method or RING_CONFIG["groebner_method"]
        self.elimination_extra_orders = (
            RING_CONFIG["elimination_extra_orders"]
            if elimination_extra_orders is None else elimination_extra_orders
        )

    # =========================================================================
    # 입력 검증 / A_γ
    # =========================================================================

    @staticmethod
    def _check_e(module: PiModule, e: Sequence[int]) -> Tuple[int, ...]:
        coords = tuple(int(x) for x in e)
        if len(coords) != module.quiver.rank:
            raise InputError(f"dimension vector {list(coords)} does not match rank {module.quiver.rank}")
        if any(not 0 <= x <= d for x, d in zip(coords, module.dims)):
            raise InputError(f"dimension vector {list(coords)} must satisfy 0 <= e <= d = {list(module.dims)}")
        return coords

    def a_gamma(self, module: PiModule) -> Dict[Tuple[int, ...], int]:
        """γ → A_γ = -dim ker φ_γ(M) (Γ 의 정규 순서)"""
        weyl = weyl_service_for(module.cartan)
        return {
            gamma.coords: -self.pi_service.kernel_dimension(module, gamma.weight)
            for gamma in weyl.chamber_weights()
        }

    # =========================================================================
    # 표현
    # =========================================================================

    def cycle_presentation(
        self,
        cartan: CartanData,
        a_gamma: Mapping[Tuple[int, ...], int],
        nu: Coweight,
        label: str = "",
    ) -> RingPresentation:
        """
        chamber 데이터 (A_γ) 와 coweight ν 로부터의 일반 유한 표현

        a_i 는 (ϖ_i, ν) - A_{ϖ_i} 에서, b_i 는 (-ϖ_i, ν) - A_{-ϖ_i} 에서 절단한다.

        Raises:
            InputError: Γ 의 원소에 대한 A_γ 가 누락됨
        """
        weyl = weyl_service_for(cartan)
        rank = cartan.rank
        gammas: List[ChamberWeight] = weyl.chamber_weights()
        missing = [str(g) for g in gammas if g.coords not in a_gamma]
        if missing:
            raise InputError(f"A_gamma missing for {len(missing)} chamber weights (e.g. {missing[0]})")

        a_lengths, b_lengths = [], []
        for i in cartan.vertices:
            fundamental = Weight.fundamental(rank, i)
            a_lengths.append(pairing(fundamental, nu) - a_gamma[fundamental.coords])
            b_lengths.append(pairing(-fundamental, nu) - a_gamma[(-fundamental).coords])

        if any(n < 0 for n in a_lengths + b_lengths):
            logger.debug(f"[FixedPointRingService] {label}: negative truncation, unit ideal")
            return RingPresentation(
                variables=(),
                generators=(_unit_generator("unit[truncation]", 0),),
                is_unit_ideal=True,
                label=label,
            )

        builder = _PresentationBuilder(rank, a_lengths, b_lengths)
        generators = builder.ab_generators()
        for gamma in gammas:
            bound = pairing(gamma.weight, nu) - a_gamma[gamma.coords]
            top = sum(m * a_lengths[i - 1] for i, m in gamma.weight.positive_support())
            top += sum(m * b_lengths[i - 1] for i, m in gamma.weight.negative_support())
            generators.extend(builder.gamma_generators(gamma.weight, bound, top))

        presentation = RingPresentation(
            variables=tuple(builder.variables),
            generators=tuple(generators),
            is_unit_ideal=any(g.is_unit() for g in generators),
            label=label,
        )
        logger.debug(
            f"[FixedPointRingService] {label}: {len(presentation.variables)} variables, "
            f"{len(presentation.generators)} generators {presentation.by_provenance()}"
        )
        return presentation

    def presentation(self, module: PiModule, e: Sequence[int]) -> RingPresentation:
        """
        k[a_ij, b_ik]/I(M) 의 유한 표현 (ab 관계식, 그 다음 Γ 정규 순서의 γ 관계식)

        Raises:
            InputError: e 가 0 <= e <= d 를 벗어남
        """
        coords = self._check_e(module, e)
        label = f"{module.display_name()} e={list(coords)}"
        return self.cycle_presentation(
            module.cartan, self.a_gamma(module), Coweight.from_dimension_vector(coords), label
        )

    def gamma_relations(self, module: PiModule, e: Sequence[int], gamma: Weight) -> List[Generator]:
        """γ 하나의 관계식 (bound < 0 이면 단위 생성원 하나)"""
        coords = self._check_e(module, e)
        weyl = weyl_service_for(module.cartan)
        weyl.chamber_weight(gamma)
        d_minus = [d - x for d, x in zip(module.dims, coords)]
        builder = _PresentationBuilder(module.quiver.rank, coords, d_minus)
        bound = pairing(gamma, Coweight.from_dimension_vector(coords))
        bound += self.pi_service.kernel_dimension(module, gamma)
        top = sum(m * coords[i - 1] for i, m in gamma.positive_support())
        top += sum(m * d_minus[i - 1] for i, m in gamma.negative_support())
        return builder.gamma_generators(gamma, bound, top)

    def elimination_presentation(self, module: PiModule, e: Sequence[int], cutoff: int) -> RingPresentation:
        """
        a 변수만 쓰는 표현: b_i 를 a_i 의 역급수 (cutoff 까지) 로 치환하고
        γ 관계식을 차수 bound+1 .. cutoff 에서 취한다
        """
        coords = self._check_e(module, e)
        if cutoff < 0:
            raise InputError(f"cutoff must be nonnegative, got {cutoff}")
        rank = module.quiver.rank
        nu = Coweight.from_dimension_vector(coords)
        label = f"{module.display_name()} e={list(coords)} cutoff={cutoff}"
        builder = _PresentationBuilder(rank, coords, [0] * rank, b_series_override=cutoff)

        a_gamma = self.a_gamma(module)
        generators: List[Generator] = []
        for gamma in weyl_service_for(module.cartan).chamber_weights():
            bound = pairing(gamma.weight, nu) - a_gamma[gamma.coords]
            generators.extend(builder.gamma_generators(gamma.weight, bound, cutoff))

        return RingPresentation(
            variables=tuple(builder.variables),
            generators=tuple(generators),
            is_unit_ideal=any(g.is_unit() for g in generators),
            label=label,
        )

    # =========================================================================
    # 몫환 크기
    # =========================================================================

    def quotient_dimension(self, presentation: RingPresentation) -> QuotientSummary:
        """
        Buchberger 완비화 후 표준 단항식을 가중치별로 센다

        모든 변수의 순수 거듭제곱이 선도 단항식에 있어야 유한하며,
        아니면 INFINITE (dimension=None) 을 돌려준다.
        """
        if presentation.is_unit_ideal:
            return QuotientSummary(dimension=0, hilbert=(), basis_size=1)
        nvars = len(presentation.variables)
        if nvars == 0:
            return QuotientSummary(dimension=1, hilbert=(1,), basis_size=0)

        ring = series.polynomial_ring(presentation.variables)
        polys = [series.to_poly(ring, g.terms) for g in presentation.generators]
        polys = [p for p in polys if p]
        basis = groebner(polys, ring, method=self.groebner_method) if polys else []
        leading = [g.LM for g in basis]
        logger.debug(
            f"[FixedPointRingService] {presentation.label}: reduced basis of size {len(basis)}"
        )

        if any(not any(m) for m in leading):
            return QuotientSummary(dimension=0, hilbert=(), basis_size=len(basis))

        for k in range(nvars):
            if not any(m[k] > 0 and sum(m) == m[k] for m in leading):
                logger.warning(
                    f"[FixedPointRingService] {presentation.label}: "
                    f"{presentation.variables[k].name} is free, quotient is infinite"
                )
                return QuotientSummary.infinite(basis_size=len(basis))

        weights = presentation.weights
        standard = self._standard_monomials(leading, nvars)
        hilbert: Dict[int, int] = {}
        for mono in standard:
            degree = sum(w * m for w, m in zip(weights, mono))
            hilbert[degree] = hilbert.get(degree, 0) + 1
        top = max(hilbert)
        return QuotientSummary(
            dimension=len(standard),
            hilbert=tuple(hilbert.get(k, 0) for k in range(top + 1)),
            basis_size=len(basis),
        )

    @staticmethod
    def _standard_monomials(leading: List[Tuple[int, ...]], nvars: int) -> List[Tuple[int, ...]]:
        """선도 단항식으로 나누어지지 않는 단항식 (아래로 닫힌 계단)"""
        def divisible(mono: Tuple[int, ...]) -> bool:
            return any(all(a >= b for a, b in zip(mono, lm)) for lm in leading)

        start = (0,) * nvars
        seen = {start}
        stack = [start]
        while stack:
            mono = stack.pop()
            for k in range(nvars):
                nxt = mono[:k] + (mono[k] + 1,) + mono[k + 1:]
                if nxt not in seen and not divisible(nxt):
                    seen.add(nxt)
                    stack.append(nxt)
        return sorted(seen)

    def ring_summary(self, module: PiModule, e: Sequence[int]) -> QuotientSummary:
        """presentation → quotient_dimension"""
        return self.quotient_dimension(self.presentation(module, e))

    def stable_elimination_summary(self, module: PiModule, e: Sequence[int]) -> EliminationResult:
        """
        cutoff 를 max d_i 부터 올리며 연속한 두 요약이 같아질 때까지 소거 표현을 계산
        """
        cutoff = max(max(module.dims, default=0), 1)
        previous = self.quotient_dimension(self.elimination_presentation(module, e, cutoff))
        for _ in range(self.elimination_extra_orders):
            cutoff += 1
            current = self.quotient_dimension(self.elimination_presentation(module, e, cutoff))
            if current.same_size(previous):
                return EliminationResult(summary=current, cutoff=cutoff, stable=True)
            previous = current
        logger.warning(
            f"[FixedPointRingService] {module.display_name()} e={list(e)}: "
            f"elimination summary not stable up to cutoff {cutoff}"
        )
        return EliminationResult(summary=previous, cutoff=cutoff, stable=False)
