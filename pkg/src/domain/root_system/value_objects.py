"""
Root System Value Objects
Clean Architecture: Domain Layer

ADE Cartan 데이터, weight / coweight 값 객체 정의

정점 번호는 1부터 시작한다 (A_n: 경로 1-2-...-n, D_n: n-2 에서 분기,
E_n: Bourbaki 규약). 좌표 튜플의 인덱스는 정점 번호 - 1.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from src.domain.exceptions import InputError


class CartanFamily(str, Enum):
    """단순 레이스 Dynkin 타입"""
    A = "A"
    D = "D"
    E = "E"

    @classmethod
    def parse(cls, value: str) -> "CartanFamily":
        try:
            return cls(str(value).strip().upper())
        except ValueError:
            raise InputError(f"unknown Cartan family: {value!r} (expected A, D or E)")


@dataclass(frozen=True)
class CartanData:
    """
    Cartan 행렬 값 객체

    Attributes:
        family: A / D / E
        rank: 정점 수
        cartan: rank x rank 정수 행렬 (대칭, 대각 2, 비대각 0 또는 -1)
    """
    family: CartanFamily
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = self.rank
        if n < 1 or len(self.cartan) != n or any(len(row) != n for row in self.cartan):
            raise InputError(f"Cartan matrix shape does not match rank {n}")
        for i in range(n):
            if self.cartan[i][i] != 2:
                raise InputError("Cartan matrix diagonal must be 2")
            for j in range(n):
                if i != j:
                    if self.cartan[i][j] != self.cartan[j][i]:
                        raise InputError("Cartan matrix must be symmetric")
                    if self.cartan[i][j] not in (0, -1):
                        raise InputError("off-diagonal Cartan entries must be 0 or -1")

    @property
    def label(self) -> str:
        return f"{self.family.value}{self.rank}"

    @property
    def vertices(self) -> List[int]:
        return list(range(1, self.rank + 1))

    def edges(self) -> List[Tuple[int, int]]:
        """Dynkin 트리의 변 (i < j)"""
        return [
            (i + 1, j + 1)
            for i in range(self.rank)
            for j in range(i + 1, self.rank)
            if self.cartan[i][j] == -1
        ]

    def neighbors(self, i: int) -> List[int]:
        self.check_vertex(i)
        return [j + 1 for j in range(self.rank) if self.cartan[i - 1][j] == -1]

    def adjacency(self) -> Dict[int, List[int]]:
        return {i: self.neighbors(i) for i in self.vertices}

    def check_vertex(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise InputError(f"vertex {i} out of range 1..{self.rank}")

    def simple_root(self, i: int) -> "Weight":
        """α_i 의 ϖ-좌표 (C 의 i 번째 열)"""
        self.check_vertex(i)
        return Weight(tuple(self.cartan[k][i - 1] for k in range(self.rank)))

    def braid_order(self, i: int, j: int) -> int:
        """(s_i s_j)^m = e 가 되는 m"""
        if i == j:
            return 1
        return 3 if self.cartan[i - 1][j - 1] == -1 else 2


@dataclass(frozen=True)
class Weight:
    """
    Weight 값 객체 (기본 weight ϖ 기저 좌표, λ = Σ λ_i ϖ_i)

    ⟨λ, α̌_i⟩ = λ_i
    """
    coords: Tuple[int, ...]

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "Weight":
        return cls(tuple(1 if k == i - 1 else 0 for k in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        """정점 번호 i (1부터) 의 좌표"""
        return self.coords[i - 1]

    def __neg__(self) -> "Weight":
        return Weight(tuple(-c for c in self.coords))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, factor: int) -> "Weight":
        return Weight(tuple(factor * c for c in self.coords))

    def positive_support(self) -> Tuple[Tuple[int, int], ...]:
        """I_γ^+ 와 γ_i^+ (정점, 계수)"""
        return tuple((i + 1, c) for i, c in enumerate(self.coords) if c > 0)

    def negative_support(self) -> Tuple[Tuple[int, int], ...]:
        """I_γ^- 와 γ_i^- = -γ_i (정점, 계수)"""
        return tuple((i + 1, -c) for i, c in enumerate(self.coords) if c < 0)

    def max_multiplicity(self) -> int:
        return max((abs(c) for c in self.coords), default=0)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coords, start=1):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign}{mag}w{i}")
        if not terms:
            return "0"
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text


@dataclass(frozen=True)
class Coweight:
    """
    Coweight 값 객체 (단순 coroot 기저 좌표, ν = Σ ν_i α̌_i)

    (ϖ_i, ν) = ν_i
    """
    coords: Tuple[int, ...]

    @classmethod
    def zero(cls, rank: int) -> "Coweight":
        return cls((0,) * rank)

    @classmethod
    def simple_coroot(cls, rank: int, i: int) -> "Coweight":
        return cls(tuple(1 if k == i - 1 else 0 for k in range(rank)))

    @classmethod
    def from_dimension_vector(cls, e: Tuple[int, ...]) -> "Coweight":
        """ν(e) = Σ e_i α̌_i"""
        return cls(tuple(e))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i - 1]

    def __neg__(self) -> "Coweight":
        return Coweight(tuple(-c for c in self.coords))

    def __add__(self, other: "Coweight") -> "Coweight":
        return Coweight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Coweight") -> "Coweight":
        return Coweight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, factor: int) -> "Coweight":
        return Coweight(tuple(factor * c for c in self.coords))

    def is_nonnegative(self) -> bool:
        """dominance 순서에서 ≥ 0 (단순 coroot 의 음이 아닌 정수 결합)"""
        return all(c >= 0 for c in self.coords)
