"""
Pi-Module Service
전사영 대수 모듈의 검증, 구간 모듈 생성, 경로 사상 φ_ij, φ_γ, D_γ, 다면체 데이터
Clean Architecture: Application Layer

D_γ(M) 은 dim ker φ_{-γ}(M) 으로 정의한다. φ_ii 는 항등 사상.
모든 계산은 유리수 위의 정확한 산술이다.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from src.domain.exceptions import InputError, RelationViolationError, UnsupportedInputError
from src.domain.quiver.entities import (
    IntervalSpec,
    PiModule,
    Quiver,
    RationalMatrix,
    identity_matrix,
    is_zero,
    require_type_a,
)
from src.domain.root_system.entities import WeylElement
from src.domain.root_system.value_objects import CartanData, Coweight, Weight
from src.services import exact_linear_algebra as ela
from src.services.weyl_group_service import WeylGroupService, weyl_service_for

logger = logging.getLogger(__name__)


@dataclass
class PolytopeData:
    """
    모듈의 다면체 데이터

    Attributes:
        lambdas: w → λ_w = Σ_i -D_{-wϖ_i}(M) w α̌_i
        a_gamma: γ 좌표 → A_γ = -D_{-γ}(M)
    """
    lambdas: Dict[WeylElement, Coweight] = field(default_factory=dict)
    a_gamma: Dict[Tuple[int, ...], int] = field(default_factory=dict)


def _matmul(left: RationalMatrix, right: RationalMatrix, rows: int, inner: int, cols: int) -> RationalMatrix:
    product = ela.matmul(
        ela.to_domain_matrix(left, rows, inner),
        ela.to_domain_matrix(right, inner, cols),
    )
    return ela.to_fractions(product)


class PiModuleService:
    """
    Π-모듈 서비스

    모듈 자체는 불변 값이며, 서비스는 상태를 갖지 않는다.
    """

    # =========================================================================
    # 검증
    # =========================================================================

    def relation_matrix(self, module: PiModule, i: int) -> RationalMatrix:
        """정점 i 의 Σ_{t(a)=i} ε(a) φ_a φ_{a*}"""
        d_i = module.dim(i)
        total = ela.zeros(d_i, d_i)
        for arrow in module.quiver.arrows():
            if arrow.target != i:
                continue
            s = arrow.source
            d_s = module.dim(s)
            product = ela.matmul(
                ela.to_domain_matrix(module.phi(s, i), d_i, d_s),
                ela.to_domain_matrix(module.phi(i, s), d_s, d_i),
            )
            total = ela.add(total, product, sign=arrow.sign)
        return ela.to_fractions(total)

    def relation_violations(self, module: PiModule) -> List[int]:
        """전사영 관계식이 0 이 아닌 정점 목록"""
        return [i for i in module.quiver.vertices if not is_zero(self.relation_matrix(module, i))]

    def validate_module(self, module: PiModule) -> bool:
        """
        전사영 관계식 검증

        Raises:
            RelationViolationError: 관계식이 0 이 아닌 정점이 있음
        """
        violations = self.relation_violations(module)
        if violations:
            logger.debug(f"[PiModuleService] {module.display_name()}: relation fails at {violations}")
            raise RelationViolationError(violations)
        return True

    def is_kq_module(self, module: PiModule) -> bool:
        """모든 E* 사상이 0 인지 (kQ-모듈)"""
        return all(
            is_zero(module.phi(a.source, a.target))
            for a in module.quiver.arrows() if a.sign < 0
        )

    # =========================================================================
    # 생성
    # =========================================================================

    def build_from_intervals(self, cartan: CartanData, spec: IntervalSpec, name: str = "") -> PiModule:
        """
        구간 모듈 직합을 오른쪽 방향 퀴버 위의 Π-모듈로 생성하고 관계식을 확인

        Raises:
            InputError: A 타입이 아니거나 rank 불일치
        """
        module = spec.build_module(cartan, name=name)
        self.validate_module(module)
        return module

    def direct_sum(self, first: PiModule, second: PiModule, name: str = "") -> PiModule:
        """
        블록 대각 직합 M ⊕ N

        Raises:
            InputError: 퀴버가 다름
        """
        if first.quiver != second.quiver:
            raise InputError(
                f"direct sum needs the same quiver ({first.cartan.label} vs {second.cartan.label})"
            )
        quiver = first.quiver
        dims = tuple(a + b for a, b in zip(first.dims, second.dims))
        maps: Dict[Tuple[int, int], RationalMatrix] = {}
        for arrow in quiver.arrows():
            s, t = arrow.key
            block = ela.block_diagonal(
                ela.to_domain_matrix(first.phi(s, t), first.dim(t), first.dim(s)),
                ela.to_domain_matrix(second.phi(s, t), second.dim(t), second.dim(s)),
            )
            maps[arrow.key] = ela.to_fractions(block)
        module = PiModule(
            quiver=quiver, dims=dims, maps=maps,
            name=name or f"{first.display_name()}+{second.display_name()}",
        )
        self.validate_module(module)
        return module

    def zero_module(self, quiver: Quiver) -> PiModule:
        return PiModule(quiver=quiver, dims=(0,) * quiver.rank, name="0")

    # =========================================================================
    # 경로 사상과 φ_γ
    # =========================================================================

    def path_map(self, module: PiModule, i: int, j: int) -> RationalMatrix:
        """
        φ_ij : M_i → M_j (트리의 유일한 경로를 따라 H 의 화살표를 합성)

        φ_ii 는 항등 사상.
        """
        route = module.quiver.path(i, j)
        result = identity_matrix(module.dim(i))
        for s, t in zip(route, route[1:]):
            result = _matmul(module.phi(s, t), result, module.dim(t), module.dim(s), module.dim(i))
        return result

    def phi_gamma(self, module: PiModule, gamma: Weight) -> DomainMatrix:
        """
        φ_γ : ⊕_{i∈I_γ^-} M_i → ⊕_{j∈I_γ^+} M_j, 블록 (j, i) = φ_ij

        Raises:
            UnsupportedInputError: |γ_i| >= 2 인 좌표가 있음
        """
        if gamma.max_multiplicity() >= 2:
            raise UnsupportedInputError(
                f"chamber weight {gamma} has a coefficient of absolute value >= 2"
            )
        sources = [i for i, _ in gamma.negative_support()]
        targets = [j for j, _ in gamma.positive_support()]
        rows = sum(module.dim(j) for j in targets)
        cols = sum(module.dim(i) for i in sources)

        block_rows: List[List[Fraction]] = [[] for _ in range(rows)]
        offset = 0
        for j in targets:
            for i in sources:
                block = self.path_map(module, i, j)
                for r in range(module.dim(j)):
                    block_rows[offset + r].extend(block[r])
            offset += module.dim(j)
        return ela.to_domain_matrix(block_rows, rows, cols)

    def d_gamma(self, module: PiModule, gamma: Weight) -> int:
        """D_γ(M) = dim ker φ_{-γ}(M)"""
        return ela.kernel_dimension(self.phi_gamma(module, -gamma))

    def kernel_dimension(self, module: PiModule, gamma: Weight) -> int:
        """dim ker φ_γ(M) (= D_{-γ}(M))"""
        return ela.kernel_dimension(self.phi_gamma(module, gamma))

    # =========================================================================
    # 다면체 데이터
    # =========================================================================

    def polytope_data(self, module: PiModule, weyl: Optional[WeylGroupService] = None) -> PolytopeData:
        """
        λ_w = Σ_i -D_{-wϖ_i}(M) w α̌_i 와 A_γ = -D_{-γ}(M)
        """
        weyl = weyl or weyl_service_for(module.cartan)
        rank = module.cartan.rank
        data = PolytopeData()

        for gamma in weyl.chamber_weights():
            data.a_gamma[gamma.coords] = -self.d_gamma(module, -gamma.weight)

        for w in weyl.weyl_elements():
            lam = Coweight.zero(rank)
            for i in module.cartan.vertices:
                a_value = data.a_gamma[w.column(i).coords]
                coroot = weyl.act_on_coweight(w, Coweight.simple_coroot(rank, i))
                lam = lam + coroot.scale(a_value)
            data.lambdas[w] = lam

        logger.debug(
            f"[PiModuleService] polytope data for {module.display_name()}: "
            f"{len(data.lambdas)} vertices, {len(data.a_gamma)} chamber weights"
        )
        return data

    # =========================================================================
    # 구간 분해
    # =========================================================================

    def decompose_intervals(self, module: PiModule) -> IntervalSpec:
        """
        A 타입 오른쪽 방향 kQ-모듈을 구간 모듈 직합으로 분해

        mult[a,b] = r(a,b) - r(a-1,b) - r(a,b+1) + r(a-1,b+1), r(a,b) = rank φ_ab

        Raises:
            InputError: A 타입이 아니거나, 오른쪽 방향이 아니거나, E* 사상이 0 이 아님
        """
        require_type_a(module.cartan)
        if not module.quiver.is_rightward():
            raise InputError("interval decomposition needs the rightward orientation")
        if not self.is_kq_module(module):
            raise InputError("interval decomposition needs vanishing star maps")

        n = module.cartan.rank
        ranks: Dict[Tuple[int, int], int] = {}

        def r(a: int, b: int) -> int:
            if a < 1 or b > n or a > b:
                return 0
            if (a, b) not in ranks:
                matrix = self.path_map(module, a, b)
                ranks[(a, b)] = ela.rank(ela.to_domain_matrix(matrix, module.dim(b), module.dim(a)))
            return ranks[(a, b)]

        triples = []
        for a in range(1, n + 1):
            for b in range(a, n + 1):
                mult = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1)
                if mult > 0:
                    triples.append((a, b, mult))
        return IntervalSpec.of(n, triples)
