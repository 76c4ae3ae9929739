"""
Quiver Grassmannian Service
퀴버 그라스마니안 Gr_e(M) 의 불변량: 부분모듈 판정, Euler 표수 (구간 합성곱),
유한체 점 개수, 보간으로 얻는 Poincaré 다항식
Clean Architecture: Application Layer

Poincaré 다항식은 affine paving 을 전제로 점 개수 다항식에서 읽어낸다.
보간 결과가 음이 아닌 정수 계수가 아니면 PavingAssumptionError 로 보고한다.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import Poly, Rational, interpolate, isprime, nextprime, symbols
from sympy.polys.matrices import DomainMatrix

from config import POINT_COUNT_CONFIG
from src.domain.exceptions import BoundExceededError, InputError, PavingAssumptionError
from src.domain.grassmannian.value_objects import DimVector, PoincarePoly
from src.domain.quiver.entities import IntervalSpec, PiModule, RationalMatrix
from src.services import exact_linear_algebra as ela
from src.services.subspace_enumeration import (
    column_basis,
    count_subspaces,
    gaussian_binomial,
    rref_subspaces,
)

logger = logging.getLogger(__name__)

DimLike = Union[DimVector, Sequence[int]]

STRATEGIES = ("leaf", "brute")


def _coords(e: DimLike, rank: int) -> Tuple[int, ...]:
    coords = tuple(e.coords) if isinstance(e, DimVector) else tuple(int(x) for x in e)
    if len(coords) != rank:
        raise InputError(f"dimension vector {list(coords)} does not match rank {rank}")
    if any(x < 0 for x in coords):
        raise InputError(f"dimension vector entries must be nonnegative, got {list(coords)}")
    return coords


@lru_cache(maxsize=256)
def _interval_distribution(rank: int, summands: Tuple[Tuple[int, int], ...]) -> Dict[Tuple[int, ...], int]:
    """구간 합의 부분모듈 차원 벡터별 χ (합성곱)"""
    zero = (0,) * rank
    dist: Dict[Tuple[int, ...], int] = {zero: 1}
    for a, b in summands:
        # [a, b] 의 부분모듈: 0 과 접미 구간 [c, b]
        options = [zero] + [
            tuple(1 if c <= v <= b else 0 for v in range(1, rank + 1))
            for c in range(a, b + 1)
        ]
        nxt: Dict[Tuple[int, ...], int] = {}
        for vec, count in dist.items():
            for option in options:
                key = tuple(x + y for x, y in zip(vec, option))
                nxt[key] = nxt.get(key, 0) + count
        dist = nxt
    return dist


class QuiverGrassmannianService:
    """
    퀴버 그라스마니안 불변량 서비스

    열거 상한과 전략은 생성자 인자이며 기본값은 POINT_COUNT_CONFIG 이다.
    """

    def __init__(
        self,
        max_total_dim: Optional[int] = None,
        max_enumeration: Optional[int] = None,
        strategy: Optional[str] = None,
    ):
        self.max_total_dim = POINT_COUNT_CONFIG["max_total_dim"] if max_total_dim is None else max_total_dim
        self.max_enumeration = POINT_COUNT_CONFIG["max_enumeration"] if max_enumeration is None else max_enumeration
        self.strategy = strategy or POINT_COUNT_CONFIG["strategy"]
        if self.strategy not in STRATEGIES:
            raise InputError(f"unknown point-count strategy {self.strategy!r} (expected {STRATEGIES})")

    # =========================================================================
    # 부분모듈 판정
    # =========================================================================

    def is_submodule(
        self,
        module: PiModule,
        subspaces: Mapping[int, RationalMatrix],
        p: Optional[int] = None,
    ) -> bool:
        """
        열공간 N_i 들이 모든 φ_a 에 대해 φ_a(N_{s(a)}) ⊆ N_{t(a)} 인지

        Args:
            module: Π-모듈
            subspaces: 정점 → N_i 의 열 생성 행렬 (d_i x k_i)
            p: None 이면 유리수 위, 소수면 F_p 위에서 판정

        Raises:
            InputError: 행렬 모양 불일치
        """
        spans: Dict[int, DomainMatrix] = {}
        for v in module.quiver.vertices:
            matrix = subspaces.get(v, ())
            rows = module.dim(v)
            cols = len(matrix[0]) if matrix else 0
            if len(matrix) not in (0, rows) or any(len(row) != cols for row in matrix):
                raise InputError(f"subspace at vertex {v} must have {rows} rows")
            spans[v] = ela.to_domain_matrix(matrix, rows, cols, p)
        maps = self._field_maps(module, p)
        return self._stable(module, spans, maps)

    def _field_maps(self, module: PiModule, p: Optional[int]) -> Dict[Tuple[int, int], DomainMatrix]:
        return {
            a.key: ela.to_domain_matrix(module.phi(*a.key), module.dim(a.target), module.dim(a.source), p)
            for a in module.quiver.arrows()
        }

    @staticmethod
    def _arrow_ok(maps, spans, s: int, t: int) -> bool:
        image = ela.matmul(maps[(s, t)], spans[s])
        return ela.contains(spans[t], image)

    def _stable(self, module: PiModule, spans: Dict[int, DomainMatrix], maps) -> bool:
        return all(self._arrow_ok(maps, spans, a.source, a.target) for a in module.quiver.arrows())

    # =========================================================================
    # Euler 표수 (구간 합성곱)
    # =========================================================================

    def euler_cc(self, spec: IntervalSpec, e: DimLike) -> int:
        """
        χ(Gr_e(M)) - 구간 모듈 직합에 대한 합성곱

        [a, b] 의 Gr_e 는 e 가 0 이거나 접미 구간 [c, b] 의 지시 벡터일 때 한 점,
        아니면 공집합이다.

        Raises:
            InputError: e_i < 0 또는 rank 불일치
        """
        coords = _coords(e, spec.rank)
        summands = tuple(sorted(spec.summands()))
        return _interval_distribution(spec.rank, summands).get(coords, 0)

    def euler_cc_table(self, spec: IntervalSpec) -> Dict[Tuple[int, ...], int]:
        """모든 e 에 대한 χ (0 이 아닌 것만)"""
        return dict(_interval_distribution(spec.rank, tuple(sorted(spec.summands()))))

    # =========================================================================
    # 유한체 점 개수
    # =========================================================================

    def leaf_vertices(self, module: PiModule, e: Tuple[int, ...], q: int) -> List[int]:
        """
        서로 이웃하지 않는 정점 집합 (닫힌 식으로 처리할 잎)

        Gr(e_i, d_i)(F_q) 가 큰 정점부터 탐욕적으로 고른다.
        """
        cartan = module.cartan
        order = sorted(
            cartan.vertices,
            key=lambda v: (-count_subspaces(module.dim(v), e[v - 1], q), v),
        )
        chosen: List[int] = []
        for v in order:
            if all(u not in chosen for u in cartan.neighbors(v)):
                chosen.append(v)
        return sorted(chosen)

    def count_points_fq(
        self,
        module: PiModule,
        e: DimLike,
        q: int,
        strategy: Optional[str] = None,
    ) -> int:
        """
        |Gr_e(M)(F_q)| - φ_a 로 안정한 차원 e 의 I-graded 부분공간 수

        Args:
            strategy: "leaf" (잎 정점은 Gauss 이항계수로 계산) 또는 "brute"

        Raises:
            InputError: q 가 소수가 아니거나 분모가 q 로 나누어짐
            BoundExceededError: Σ d_i 또는 열거 수가 상한 초과
        """
        strategy = strategy or self.strategy
        if strategy not in STRATEGIES:
            raise InputError(f"unknown point-count strategy {strategy!r}")
        if not isprime(q):
            raise InputError(f"q must be prime, got {q}")
        coords = _coords(e, module.quiver.rank)
        if module.total_dim > self.max_total_dim:
            raise BoundExceededError(
                f"total dimension {module.total_dim} exceeds max_total_dim={self.max_total_dim}"
            )
        if not DimVector(coords).fits(module.dims):
            return 0

        maps = self._field_maps(module, q)
        vertices = module.quiver.vertices
        leaves = self.leaf_vertices(module, coords, q) if strategy == "leaf" else []
        enumerated = [v for v in vertices if v not in leaves]

        budget = prod(count_subspaces(module.dim(v), coords[v - 1], q) for v in enumerated)
        if budget > self.max_enumeration:
            raise BoundExceededError(
                f"{budget} subspace tuples exceed max_enumeration={self.max_enumeration}"
            )

        K = ela.field_of(q)
        candidates: Dict[int, List[DomainMatrix]] = {
            v: [
                ela.to_domain_matrix(column_basis(rows, module.dim(v)), module.dim(v), coords[v - 1], q)
                for rows in rref_subspaces(module.dim(v), coords[v - 1], q)
            ]
            for v in enumerated
        }
        arrows = module.quiver.arrows()
        total = 0
        spans: Dict[int, DomainMatrix] = {}

        def consistent(v: int) -> bool:
            for a in arrows:
                if v not in a.key:
                    continue
                other = a.target if a.source == v else a.source
                if other in spans and not self._arrow_ok(maps, spans, a.source, a.target):
                    return False
            return True

        def recurse(index: int) -> None:
            nonlocal total
            if index == len(enumerated):
                total += self._leaf_product(module, coords, q, leaves, spans, maps, K)
                return
            v = enumerated[index]
            for span in candidates[v]:
                spans[v] = span
                if consistent(v):
                    recurse(index + 1)
                del spans[v]

        recurse(0)
        logger.debug(
            f"[QuiverGrassmannianService] {module.display_name()} e={list(coords)} q={q} "
            f"({strategy}, leaves={leaves}): {total}"
        )
        return total

    def _leaf_product(self, module, coords, q, leaves, spans, maps, K) -> int:
        """
        잎 ℓ 마다 U ⊆ X ⊆ W, dim X = e_ℓ 인 X 의 수를 곱한다

        U = Σ φ_{n→ℓ}(N_n), W = ∩ φ_{ℓ→n}^{-1}(N_n)
        """
        result = 1
        for leaf in leaves:
            d = module.dim(leaf)
            neighbors = module.cartan.neighbors(leaf)
            images = [ela.matmul(maps[(n, leaf)], spans[n]) for n in neighbors]
            incoming = ela.hstack(images, d, K)
            constraints = ela.vstack(
                [ela.matmul(ela.annihilator(spans[n]), maps[(leaf, n)]) for n in neighbors],
                d, K,
            )
            if not ela.is_zero_matrix(ela.matmul(constraints, incoming)):
                return 0
            dim_u = ela.rank(incoming)
            dim_w = d - ela.rank(constraints)
            result *= gaussian_binomial(dim_w - dim_u, coords[leaf - 1] - dim_u).evaluate(q)
            if result == 0:
                return 0
        return result

    # =========================================================================
    # Poincaré 다항식
    # =========================================================================

    def sample_primes(self, module: PiModule, count: int) -> List[int]:
        """행렬 성분 분모를 나누지 않는 처음 count 개의 소수"""
        denominators = {
            x.denominator
            for matrix in module.maps.values()
            for row in matrix for x in row
        }
        primes: List[int] = []
        p = 2
        while len(primes) < count:
            if all(den % p != 0 for den in denominators):
                primes.append(p)
            p = nextprime(p)
        return primes

    def poincare_poly(self, module: PiModule, e: DimLike) -> PoincarePoly:
        """
        Σ_k b_{2k} q^k - 처음 D+1 개 소수에서의 점 개수를 보간 (D = Σ e_i (d_i - e_i))

        Raises:
            PavingAssumptionError: 보간 계수가 음이 아닌 정수가 아님
        """
        coords = _coords(e, module.quiver.rank)
        dim_vector = DimVector(coords)
        if not dim_vector.fits(module.dims):
            return PoincarePoly.zero()

        degree_bound = dim_vector.ambient_dimension(module.dims)
        primes = self.sample_primes(module, degree_bound + 1)
        points = [(p, self.count_points_fq(module, coords, p)) for p in primes]

        if len(points) == 1:
            coefficients = [points[0][1]]
        else:
            x = symbols("x")
            poly = Poly(interpolate(points, x), x)
            coefficients = list(reversed(poly.all_coeffs()))

        rationals = [Rational(c) for c in coefficients]
        if any(not c.is_integer or c < 0 for c in rationals):
            raise PavingAssumptionError([Fraction(int(c.p), int(c.q)) for c in rationals])
        result = PoincarePoly(tuple(int(c) for c in rationals))
        logger.debug(
            f"[QuiverGrassmannianService] P({module.display_name()}, e={list(coords)}) = {result}"
        )
        return result

    def total_cohomology(self, module: PiModule, e: DimLike) -> Tuple[int, List[int]]:
        """(χ = P(1), Betti 수 목록)"""
        poly = self.poincare_poly(module, e)
        return poly.evaluate(1), poly.betti_numbers()
