"""
Weyl Group Service
ADE 루트 시스템의 Weyl 군 열거, chamber weight, admissibility 검사
Clean Architecture: Application Layer

규약:
- weight 는 기본 weight ϖ 기저, coweight 는 단순 coroot α̌ 기저 좌표
- 단어 [i_1, ..., i_m] 은 표현식 s_{i_m} ⋯ s_{i_1} (i_1 이 먼저 작용)
- admissibility 의 ⟨α_{i_a}, μ⟩ 는 단순 레이스 타입에서 ⟨μ, α̌_{i_a}⟩ (= μ 의 i_a 좌표) 로 계산
"""
import logging
from collections import deque
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy import ImmutableMatrix

from config import ADMISSIBILITY_CONFIG, WEYL_CONFIG
from src.domain.exceptions import BoundExceededError, InputError
from src.domain.root_system.entities import ChamberWeight, WeylElement
from src.domain.root_system.value_objects import CartanData, Coweight, Weight
from src.domain.verification.entities import AdmissibilityReport
from src.infrastructure.repositories.dynkin_diagram_repository import YAMLDynkinCatalogRepository

logger = logging.getLogger(__name__)

Matrix = ImmutableMatrix


def cartan_matrix(family: str, rank: int) -> CartanData:
    """
    표준 번호 규약의 Cartan 데이터

    Args:
        family: "A", "D", "E"
        rank: 정점 수

    Raises:
        InputError: 유효하지 않은 ADE 쌍 (예: D3, E5)
    """
    return YAMLDynkinCatalogRepository().cartan(family, rank)


def pairing(weight: Weight, coweight: Coweight) -> int:
    """⟨λ, ν⟩ = Σ λ_i ν_i"""
    if weight.rank != coweight.rank:
        raise InputError(f"rank mismatch in pairing: {weight.rank} vs {coweight.rank}")
    return sum(a * b for a, b in zip(weight.coords, coweight.coords))


class WeylGroupService:
    """
    Weyl 군 W 서비스

    한 Cartan 데이터에 대해 W 원소와 Γ 는 처음 요청될 때 계산해 보관한다.
    병렬 작업 전에 weyl_elements() 와 chamber_weights() 를 한 번 호출해 두면
    이후에는 읽기만 일어난다.
    """

    def __init__(self, cartan: CartanData, max_group_order: Optional[int] = None):
        self.cartan = cartan
        self.rank = cartan.rank
        self.max_group_order = WEYL_CONFIG["max_group_order"] if max_group_order is None else max_group_order
        self._reflections: Dict[int, Matrix] = {
            i: self._reflection_matrix(i) for i in cartan.vertices
        }
        self._elements: Optional[List[WeylElement]] = None
        self._chamber_weights: Optional[List[ChamberWeight]] = None
        self._lengths: Optional[Dict[Matrix, int]] = None
        self._word_cache: Dict[Matrix, Tuple[Tuple[int, ...], ...]] = {}

    # =========================================================================
    # 단순 반사
    # =========================================================================

    def _reflection_matrix(self, i: int) -> Matrix:
        """S_i = I - α_i e_i^T (ϖ 기저 위의 작용)"""
        alpha = ImmutableMatrix(list(self.cartan.simple_root(i).coords))
        unit_row = ImmutableMatrix([[1 if c == i - 1 else 0 for c in range(self.rank)]])
        return ImmutableMatrix.eye(self.rank) - alpha * unit_row

    def reflection_matrix(self, i: int) -> Matrix:
        self.cartan.check_vertex(i)
        return self._reflections[i]

    def reflect_weight(self, i: int, weight: Weight) -> Weight:
        """s_i λ = λ - λ_i α_i"""
        self.cartan.check_vertex(i)
        return weight - self.cartan.simple_root(i).scale(weight[i])

    def reflect_coweight(self, i: int, coweight: Coweight) -> Coweight:
        """s_i ν = ν - (Σ_j C_ij ν_j) α̌_i"""
        self.cartan.check_vertex(i)
        row = self.cartan.cartan[i - 1]
        shift = sum(row[j] * coweight.coords[j] for j in range(self.rank))
        return coweight - Coweight.simple_coroot(self.rank, i).scale(shift)

    def apply_word_to_weight(self, word: Sequence[int], weight: Weight) -> Weight:
        for i in word:
            weight = self.reflect_weight(i, weight)
        return weight

    def apply_word_to_coweight(self, word: Sequence[int], coweight: Coweight) -> Coweight:
        for i in word:
            coweight = self.reflect_coweight(i, coweight)
        return coweight

    def act_on_coweight(self, w: WeylElement, coweight: Coweight) -> Coweight:
        """w ν"""
        return self.apply_word_to_coweight(w.word, coweight)

    def act_inverse_on_coweight(self, w: WeylElement, coweight: Coweight) -> Coweight:
        """w^{-1} ν"""
        return self.apply_word_to_coweight(w.inverse_word(), coweight)

    def element_from_word(self, word: Sequence[int]) -> WeylElement:
        """단어의 원소 (저장 단어는 BFS 로 찾은 축약 단어)"""
        matrix = ImmutableMatrix.eye(self.rank)
        for i in word:
            self.cartan.check_vertex(i)
            matrix = self._reflections[i] * matrix
        for w in self.weyl_elements():
            if w.matrix == matrix:
                return w
        raise InputError(f"word {list(word)} does not define an element of W")

    # =========================================================================
    # 원소 열거
    # =========================================================================

    def weyl_elements(self) -> List[WeylElement]:
        """
        항등원에서 시작한 너비 우선 폐포로 W 의 모든 원소를 한 번씩 열거

        새 원소는 s_i 를 왼쪽에 곱하고 단어 끝에 i 를 붙여 얻는다. BFS 이므로
        처음 만난 단어가 축약 단어이다.

        Raises:
            BoundExceededError: |W| 가 max_group_order 초과
        """
        if self._elements is not None:
            return self._elements

        identity = WeylElement(matrix=ImmutableMatrix.eye(self.rank), word=())
        seen: Dict[Matrix, WeylElement] = {identity.matrix: identity}
        ordered: List[WeylElement] = [identity]
        queue = deque([identity])

        while queue:
            current = queue.popleft()
            for i in self.cartan.vertices:
                matrix = self._reflections[i] * current.matrix
                if matrix in seen:
                    continue
                element = WeylElement(matrix=matrix, word=current.word + (i,))
                seen[matrix] = element
                ordered.append(element)
                queue.append(element)
                if len(ordered) > self.max_group_order:
                    raise BoundExceededError(
                        f"|W({self.cartan.label})| exceeds max_group_order={self.max_group_order}"
                    )

        logger.debug(f"[WeylGroupService] {self.cartan.label}: |W| = {len(ordered)}")
        self._elements = ordered
        return ordered

    def identity(self) -> WeylElement:
        return self.weyl_elements()[0]

    def longest_element(self) -> WeylElement:
        """최장 원소 w_0 (BFS 순서의 마지막 원소는 길이가 최대)"""
        return max(self.weyl_elements(), key=lambda w: w.length)

    def left_descents(self, w: WeylElement) -> List[int]:
        """ℓ(s_i w) = ℓ(w) - 1 인 i"""
        lengths = {e.matrix: e.length for e in self.weyl_elements()}
        return [
            i for i in self.cartan.vertices
            if lengths[self._reflections[i] * w.matrix] == w.length - 1
        ]

    def reduced_words(self, w: WeylElement) -> List[Tuple[int, ...]]:
        """
        w 의 모든 축약 단어 (적용 순서)

        words(w) = { words(s_i w) + [i] : i 는 w 의 왼쪽 descent }
        """
        return list(self._words(w.matrix))

    def _words(self, matrix: Matrix) -> Tuple[Tuple[int, ...], ...]:
        if self._lengths is None:
            self._lengths = {e.matrix: e.length for e in self.weyl_elements()}
        if matrix in self._word_cache:
            return self._word_cache[matrix]
        length = self._lengths[matrix]
        if length == 0:
            return ((),)
        out: List[Tuple[int, ...]] = []
        for i in self.cartan.vertices:
            shorter = self._reflections[i] * matrix
            if self._lengths[shorter] == length - 1:
                out.extend(prefix + (i,) for prefix in self._words(shorter))
        self._word_cache[matrix] = tuple(sorted(out))
        return self._word_cache[matrix]

    # =========================================================================
    # Chamber weights
    # =========================================================================

    def chamber_weights(self) -> List[ChamberWeight]:
        """
        Γ = {w ϖ_j} 를 정규 순서로 열거 (j 오름차순, 그 안에서 W 의 BFS 순서)

        중복 weight 는 합치고 처음 만난 (w, j) 를 증인으로 남긴다.
        """
        if self._chamber_weights is not None:
            return self._chamber_weights

        seen: Dict[Tuple[int, ...], ChamberWeight] = {}
        for j in self.cartan.vertices:
            for w in self.weyl_elements():
                weight = w.column(j)
                if weight.coords not in seen:
                    seen[weight.coords] = ChamberWeight(weight=weight, source_j=j, witness=w)

        self._chamber_weights = list(seen.values())
        logger.debug(f"[WeylGroupService] {self.cartan.label}: |Γ| = {len(self._chamber_weights)}")
        return self._chamber_weights

    def chamber_weight(self, weight: Weight) -> ChamberWeight:
        """weight 가 Γ 에 속하면 해당 ChamberWeight 반환"""
        for gamma in self.chamber_weights():
            if gamma.weight == weight:
                return gamma
        raise InputError(f"{weight} is not a chamber weight of {self.cartan.label}")

    def orbit_sizes(self) -> Dict[int, int]:
        """j → |W ϖ_j|"""
        sizes: Dict[int, int] = {}
        for j in self.cartan.vertices:
            sizes[j] = len({w.column(j).coords for w in self.weyl_elements()})
        return sizes

    # =========================================================================
    # Admissibility / pseudo-Weyl
    # =========================================================================

    def is_admissible(self, word: Sequence[int], j: int) -> bool:
        """
        단어가 j-admissible 인지: a = 1..m 에 대해 ⟨s_{i_{a-1}}⋯s_{i_1} ϖ_j, α̌_{i_a}⟩ >= 0
        """
        self.cartan.check_vertex(j)
        mu = Weight.fundamental(self.rank, j)
        for i in word:
            self.cartan.check_vertex(i)
            if mu[i] < 0:
                return False
            mu = self.reflect_weight(i, mu)
        return True

    def check_pseudo_weyl(self, lambdas: Mapping[WeylElement, Coweight]) -> bool:
        """
        모든 v, w 에 대해 w^{-1} λ_v - w^{-1} λ_w 가 단순 coroot 의 음이 아닌 정수 결합인지

        Raises:
            InputError: W 의 원소가 누락됨
        """
        elements = self.weyl_elements()
        missing = [w.label() for w in elements if w not in lambdas]
        if missing:
            raise InputError(f"λ_w missing for {len(missing)} Weyl elements (e.g. {missing[0]})")

        for w in elements:
            lam_w = self.act_inverse_on_coweight(w, lambdas[w])
            for v in elements:
                lam_v = self.act_inverse_on_coweight(w, lambdas[v])
                if not (lam_v - lam_w).is_nonnegative():
                    logger.debug(
                        f"[WeylGroupService] pseudo-Weyl fails at v={v.label()}, w={w.label()}"
                    )
                    return False
        return True

    def admissibility_sweep(self) -> AdmissibilityReport:
        """모든 원소의 모든 축약 단어가 모든 j 에 대해 admissible 인지 전수 검사"""
        counterexamples: List[Tuple[Tuple[int, ...], int]] = []
        checked = 0
        for w in self.weyl_elements():
            for word in self.reduced_words(w):
                for j in self.cartan.vertices:
                    checked += 1
                    if not self.is_admissible(word, j):
                        counterexamples.append((word, j))

        report = AdmissibilityReport(
            label=self.cartan.label,
            group_order=len(self.weyl_elements()),
            words_checked=checked,
            counterexamples=counterexamples,
        )
        logger.info(
            f"[WeylGroupService] admissibility {self.cartan.label}: "
            f"{checked} (word, j) pairs, {len(counterexamples)} counterexamples"
        )
        return report


def admissibility_sweep(types: Optional[Sequence[Tuple[str, int]]] = None) -> List[AdmissibilityReport]:
    """여러 Cartan 타입에 대한 admissibility 전수 검사"""
    targets = list(types or ADMISSIBILITY_CONFIG["default_types"])
    return [WeylGroupService(cartan_matrix(f, n)).admissibility_sweep() for f, n in targets]


@lru_cache(maxsize=32)
def weyl_service_for(cartan: CartanData) -> WeylGroupService:
    """Cartan 데이터별로 공유되는 WeylGroupService (W 와 Γ 를 미리 계산)"""
    service = WeylGroupService(cartan)
    service.weyl_elements()
    service.chamber_weights()
    return service
