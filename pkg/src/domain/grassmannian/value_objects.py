"""
Quiver Grassmannian Value Objects
Clean Architecture: Domain Layer

차원 벡터 e 와 정수 계수 Poincaré 다항식
"""
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from src.domain.exceptions import InputError


@dataclass(frozen=True)
class DimVector:
    """
    부분모듈 차원 벡터 e (ν(e) = Σ e_i α̌_i)

    Attributes:
        coords: 정점별 e_i
    """
    coords: Tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.coords):
            raise InputError(f"dimension vector entries must be nonnegative, got {list(self.coords)}")

    @classmethod
    def parse(cls, text: str) -> "DimVector":
        """'1,0,2' 형식 파싱"""
        try:
            return cls(tuple(int(part) for part in text.split(",") if part.strip() != ""))
        except ValueError:
            raise InputError(f"cannot parse dimension vector {text!r}")

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i - 1]

    def fits(self, dims: Iterable[int]) -> bool:
        """0 <= e_i <= d_i"""
        return all(e <= d for e, d in zip(self.coords, dims))

    def ambient_dimension(self, dims: Iterable[int]) -> int:
        """Π Gr(e_i, d_i) 의 차원 Σ e_i (d_i - e_i)"""
        return sum(e * (d - e) for e, d in zip(self.coords, dims))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class PoincarePoly:
    """
    Poincaré 다항식 Σ b_{2k} q^k

    Attributes:
        coefficients: q^0 부터의 정수 계수 (끝의 0 은 제거된 상태)
    """
    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        trimmed = list(self.coefficients)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in trimmed))

    @classmethod
    def zero(cls) -> "PoincarePoly":
        return cls(())

    @classmethod
    def one(cls) -> "PoincarePoly":
        return cls((1,))

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __add__(self, other: "PoincarePoly") -> "PoincarePoly":
        n = max(len(self.coefficients), len(other.coefficients))
        a = list(self.coefficients) + [0] * (n - len(self.coefficients))
        b = list(other.coefficients) + [0] * (n - len(other.coefficients))
        return PoincarePoly(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: "PoincarePoly") -> "PoincarePoly":
        if self.is_zero() or other.is_zero():
            return PoincarePoly.zero()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, x in enumerate(self.coefficients):
            for j, y in enumerate(other.coefficients):
                out[i + j] += x * y
        return PoincarePoly(tuple(out))

    def evaluate(self, q: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * q + c
        return value

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    def betti_numbers(self) -> List[int]:
        """(b_0, b_1, b_2, ...) - 홀수 차수는 0"""
        betti: List[int] = []
        for k, c in enumerate(self.coefficients):
            betti.append(c)
            if k < len(self.coefficients) - 1:
                betti.append(0)
        return betti

    def as_list(self) -> List[int]:
        return list(self.coefficients)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = "q" if k == 1 else f"q^{k}"
                terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms)
