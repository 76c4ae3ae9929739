"""
Root System Entities
Clean Architecture: Domain Layer

Weyl 군 원소와 chamber weight 엔티티
"""
from dataclasses import dataclass
from typing import Dict, Tuple

from sympy import ImmutableMatrix

from src.domain.root_system.value_objects import Weight


@dataclass(frozen=True)
class WeylElement:
    """
    Weyl 군 원소

    Attributes:
        matrix: weight 격자 (ϖ 기저) 위의 정수 작용 행렬 (ImmutableMatrix, 해시 가능)
        word: 축약 단어 [i_1, ..., i_m] - 표현식 s_{i_m} ... s_{i_1} 로,
              i_1 이 가장 먼저 작용한다 (오른쪽에서 왼쪽)

    동일성 / 해시는 작용 행렬로만 판정한다 (같은 원소의 다른 축약 단어는 같은 원소).
    """
    matrix: ImmutableMatrix
    word: Tuple[int, ...] = ()

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    @property
    def length(self) -> int:
        """Coxeter 길이 (저장된 단어가 축약 단어이므로 그 길이)"""
        return len(self.word)

    @property
    def rank(self) -> int:
        return self.matrix.rows

    def is_identity(self) -> bool:
        return not self.word

    def inverse_word(self) -> Tuple[int, ...]:
        """w^{-1} 의 적용 순서 단어"""
        return tuple(reversed(self.word))

    def act(self, weight: Weight) -> Weight:
        """w · λ (행렬 곱)"""
        return Weight(tuple(int(x) for x in self.matrix * ImmutableMatrix(list(weight.coords))))

    def column(self, j: int) -> Weight:
        """w ϖ_j"""
        return Weight(tuple(int(x) for x in self.matrix.col(j - 1)))

    def label(self) -> str:
        if not self.word:
            return "e"
        return "s" + ".s".join(str(i) for i in reversed(self.word))


@dataclass(frozen=True)
class ChamberWeight:
    """
    Chamber weight γ = w ϖ_j ∈ Γ

    Attributes:
        weight: γ 의 ϖ-좌표
        source_j: 궤도의 기본 weight 정점 j
        witness: γ = witness · ϖ_j 를 만족하는 Weyl 원소 (최단 단어)
    """
    weight: Weight
    source_j: int
    witness: WeylElement

    @property
    def coords(self) -> Tuple[int, ...]:
        return self.weight.coords

    @property
    def positive(self) -> Dict[int, int]:
        """I_γ^+ : {정점: γ_i^+}"""
        return dict(self.weight.positive_support())

    @property
    def negative(self) -> Dict[int, int]:
        """I_γ^- : {정점: γ_i^-}"""
        return dict(self.weight.negative_support())

    def __str__(self) -> str:
        return str(self.weight)
