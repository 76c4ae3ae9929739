"""
Fixed-Point Ring Value Objects
Clean Architecture: Domain Layer

유한 표현 k[a_ij, b_ik]/I(M) 과 몫환 요약

다항식은 sympy 에 의존하지 않는 항 목록 ((지수 튜플, Fraction), ...) 으로 보관한다.
서비스 계층이 sympy PolyRing 원소로 변환해 계산한다.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

Monomial = Tuple[int, ...]
Terms = Tuple[Tuple[Monomial, Fraction], ...]


def weighted_grevlex_key(weights: Sequence[int], monomial: Monomial) -> tuple:
    """가중 차수 우선, 동률이면 역사전식 (grevlex) 정렬 키"""
    degree = sum(w * m for w, m in zip(weights, monomial))
    return (degree, tuple(reversed([-m for m in monomial])))


@dataclass(frozen=True)
class RingVariable:
    """
    a_{i,j} 또는 b_{i,k} 변수

    Attributes:
        kind: "a" 또는 "b"
        vertex: 정점 i
        index: j 또는 k (= 가중치)
    """
    kind: str
    vertex: int
    index: int

    @property
    def name(self) -> str:
        return f"{self.kind}{self.vertex}_{self.index}"

    @property
    def weight(self) -> int:
        return self.index


@dataclass(frozen=True)
class Generator:
    """
    I(M) 의 생성원 한 개

    Attributes:
        provenance: 출처 태그 (예: "ab[1,k=2]", "gamma[w1-w2,k=1]", "unit[...]")
        terms: (지수 튜플, 계수) 목록
    """
    provenance: str
    terms: Terms

    def is_unit(self) -> bool:
        """0 이 아닌 상수 생성원"""
        return len(self.terms) == 1 and not any(self.terms[0][0]) and self.terms[0][1] != 0

    def weighted_degrees(self, weights: Sequence[int]) -> List[int]:
        return sorted({sum(w * m for w, m in zip(weights, mono)) for mono, _ in self.terms})


@dataclass(frozen=True)
class RingPresentation:
    """
    고정점 환의 유한 표현

    Attributes:
        variables: 변수 목록 (a 변수 먼저, 그 다음 b 변수)
        generators: 생성원 목록 (결정적 순서)
        is_unit_ideal: 생성 시 1 ∈ I(M) 이 검출되었는지
        label: 리포트용 식별자
    """
    variables: Tuple[RingVariable, ...]
    generators: Tuple[Generator, ...]
    is_unit_ideal: bool = False
    label: str = ""

    @property
    def variable_names(self) -> List[str]:
        return [v.name for v in self.variables]

    @property
    def weights(self) -> List[int]:
        return [v.weight for v in self.variables]

    def is_weighted_homogeneous(self) -> bool:
        return all(len(g.weighted_degrees(self.weights)) <= 1 for g in self.generators)

    def by_provenance(self) -> Dict[str, int]:
        """출처 종류별 생성원 개수"""
        counts: Dict[str, int] = {}
        for g in self.generators:
            kind = g.provenance.split("[", 1)[0]
            counts[kind] = counts.get(kind, 0) + 1
        return counts

    def _render_monomial(self, monomial: Monomial) -> str:
        factors = []
        for var, power in zip(self.variables, monomial):
            if power == 1:
                factors.append(var.name)
            elif power > 1:
                factors.append(f"{var.name}^{power}")
        return "*".join(factors)

    def _render_terms(self, terms: Terms) -> str:
        ordered = sorted(terms, key=lambda t: weighted_grevlex_key(self.weights, t[0]), reverse=True)
        parts = []
        for monomial, coeff in ordered:
            text = self._render_monomial(monomial)
            parts.append(f"{coeff}*{text}" if text else f"{coeff}")
        return " + ".join(parts) if parts else "0"

    def to_canonical_text(self) -> str:
        """
        골든 파일용 정규 텍스트

        첫 줄은 변수와 가중치, 이후 생성원마다 한 줄 "[출처] 계수*단항식 + ...".
        항은 단항식 순서 내림차순, 계수는 p 또는 p/q.
        """
        header = "vars: " + " ".join(f"{v.name}:{v.weight}" for v in self.variables)
        lines = [header.rstrip()]
        for g in self.generators:
            lines.append(f"[{g.provenance}] {self._render_terms(g.terms)}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class QuotientSummary:
    """
    몫환 k[vars]/I 의 크기

    Attributes:
        dimension: 전체 차원 (무한이면 None)
        hilbert: 가중치별 차원 (유한일 때만)
        basis_size: 축약 Gröbner 기저 크기
    """
    dimension: Optional[int]
    hilbert: Tuple[int, ...] = ()
    basis_size: int = 0

    @classmethod
    def infinite(cls, basis_size: int = 0) -> "QuotientSummary":
        return cls(dimension=None, hilbert=(), basis_size=basis_size)

    @property
    def is_infinite(self) -> bool:
        return self.dimension is None

    def same_size(self, other: "QuotientSummary") -> bool:
        """차원과 Hilbert 급수가 같은지 (기저 크기는 무시)"""
        return self.dimension == other.dimension and self.hilbert == other.hilbert

    def __str__(self) -> str:
        if self.is_infinite:
            return "INFINITE"
        return f"dim {self.dimension}, hilbert {list(self.hilbert)}"
