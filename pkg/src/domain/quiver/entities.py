"""
Quiver Domain Entities
Clean Architecture: Domain Layer

Dynkin 퀴버, 전사영 대수 (preprojective algebra) Π 모듈, 구간 모듈 명세

행렬은 유리수 (Fraction) 튜플로 보관한다. φ_a : M_{s(a)} → M_{t(a)} 의 행렬 모양은
(d_{t(a)}, d_{s(a)}).
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from src.domain.exceptions import InputError
from src.domain.root_system.value_objects import CartanData, CartanFamily

RationalMatrix = Tuple[Tuple[Fraction, ...], ...]
ArrowKey = Tuple[int, int]


def zero_matrix(rows: int, cols: int) -> RationalMatrix:
    return tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))


def identity_matrix(n: int) -> RationalMatrix:
    return tuple(
        tuple(Fraction(1) if r == c else Fraction(0) for c in range(n))
        for r in range(n)
    )


def is_zero(matrix: RationalMatrix) -> bool:
    return all(x == 0 for row in matrix for x in row)


@dataclass(frozen=True)
class Arrow:
    """
    이중 퀴버 Q̄ 의 화살표 a ∈ H = E ⊔ E*

    Attributes:
        source: s(a)
        target: t(a)
        sign: ε(a) (E 이면 +1, E* 이면 -1)
    """
    source: int
    target: int
    sign: int

    @property
    def key(self) -> ArrowKey:
        return (self.source, self.target)

    @property
    def star(self) -> "Arrow":
        """a* (방향 반전, 부호 반전)"""
        return Arrow(self.target, self.source, -self.sign)

    @property
    def label(self) -> str:
        return f"{self.source}->{self.target}"


@dataclass(frozen=True)
class Quiver:
    """
    Dynkin 트리 위의 퀴버 Q = (I, E) 와 이중화 H

    Attributes:
        cartan: 기반 Dynkin 데이터
        orientation: 방향이 정해진 변 E 의 (s, t) 목록
    """
    cartan: CartanData
    orientation: Tuple[ArrowKey, ...]

    def __post_init__(self):
        undirected = sorted(tuple(sorted(edge)) for edge in self.orientation)
        if undirected != sorted(self.cartan.edges()):
            raise InputError(
                f"orientation {list(self.orientation)} does not cover the Dynkin edges "
                f"{self.cartan.edges()} exactly once"
            )

    @classmethod
    def rightward(cls, cartan: CartanData) -> "Quiver":
        """모든 변을 작은 번호 → 큰 번호로 향하게 한 퀴버"""
        return cls(cartan=cartan, orientation=tuple(cartan.edges()))

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def vertices(self) -> List[int]:
        return self.cartan.vertices

    def is_rightward(self) -> bool:
        return all(s < t for s, t in self.orientation)

    def arrows(self) -> List[Arrow]:
        """H = E ⊔ E* (E 를 먼저, 그 다음 E*)"""
        forward = [Arrow(s, t, 1) for s, t in self.orientation]
        return forward + [a.star for a in forward]

    def arrow(self, source: int, target: int) -> Arrow:
        key = (source, target)
        for a in self.arrows():
            if a.key == key:
                return a
        raise InputError(f"{source}->{target} is not an arrow of the doubled quiver")

    def epsilon(self, source: int, target: int) -> int:
        return self.arrow(source, target).sign

    def is_star(self, source: int, target: int) -> bool:
        return self.epsilon(source, target) < 0

    def path(self, i: int, j: int) -> List[int]:
        """트리에서 i 와 j 를 잇는 유일한 (되돌아가지 않는) 경로의 정점 열"""
        self.cartan.check_vertex(i)
        self.cartan.check_vertex(j)
        parents: Dict[int, Optional[int]] = {i: None}
        frontier = [i]
        while frontier:
            nxt = []
            for v in frontier:
                for u in self.cartan.neighbors(v):
                    if u not in parents:
                        parents[u] = v
                        nxt.append(u)
            frontier = nxt
        route = [j]
        while route[-1] != i:
            route.append(parents[route[-1]])
        return list(reversed(route))


@dataclass(frozen=True)
class PiModule:
    """
    Π-모듈 엔티티

    Attributes:
        quiver: 기반 퀴버
        dims: 정점별 차원 d_i
        maps: 화살표 (s, t) → φ_a 행렬 (없는 화살표는 영행렬)
        name: 리포트용 식별자
    """
    quiver: Quiver
    dims: Tuple[int, ...]
    maps: Dict[ArrowKey, RationalMatrix] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        if len(self.dims) != self.quiver.rank:
            raise InputError(f"dims {self.dims} do not match rank {self.quiver.rank}")
        if any(d < 0 for d in self.dims):
            raise InputError(f"dims must be nonnegative, got {self.dims}")
        valid = {a.key for a in self.quiver.arrows()}
        for key, matrix in self.maps.items():
            if key not in valid:
                raise InputError(f"{key[0]}->{key[1]} is not an arrow of the doubled quiver")
            rows, cols = self.dim(key[1]), self.dim(key[0])
            if len(matrix) != rows or any(len(row) != cols for row in matrix):
                raise InputError(
                    f"map {key[0]}->{key[1]} must be {rows}x{cols} "
                    f"(d_{key[1]} x d_{key[0]})"
                )

    @property
    def cartan(self) -> CartanData:
        return self.quiver.cartan

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def dim(self, i: int) -> int:
        return self.dims[i - 1]

    def phi(self, source: int, target: int) -> RationalMatrix:
        """φ_a (화살표가 지정되지 않았으면 영행렬)"""
        key = (source, target)
        if key in self.maps:
            return self.maps[key]
        self.quiver.arrow(source, target)
        return zero_matrix(self.dim(target), self.dim(source))

    def is_zero_module(self) -> bool:
        return self.total_dim == 0

    def display_name(self) -> str:
        return self.name or f"{self.cartan.label}{list(self.dims)}"


@dataclass(frozen=True)
class Interval:
    """one-direction (구간) 모듈 [start, end] 와 중복도"""
    start: int
    end: int
    mult: int = 1

    def __post_init__(self):
        if self.start > self.end:
            raise InputError(f"interval [{self.start},{self.end}] has from > to")
        if self.mult < 1:
            raise InputError(f"interval multiplicity must be positive, got {self.mult}")

    def support(self) -> range:
        return range(self.start, self.end + 1)

    def label(self) -> str:
        base = f"[{self.start},{self.end}]"
        return base if self.mult == 1 else f"{base}^{self.mult}"


@dataclass(frozen=True)
class IntervalSpec:
    """
    구간 모듈 직합 명세 (A 타입 전용)

    Attributes:
        rank: A_n 의 n
        intervals: (from, to, mult) 목록
    """
    rank: int
    intervals: Tuple[Interval, ...] = ()

    def __post_init__(self):
        for iv in self.intervals:
            if iv.start < 1 or iv.end > self.rank:
                raise InputError(
                    f"interval {iv.label()} is outside vertices 1..{self.rank}"
                )

    @classmethod
    def of(cls, rank: int, triples: Iterable[Tuple[int, int, int]]) -> "IntervalSpec":
        return cls(rank=rank, intervals=tuple(Interval(a, b, m) for a, b, m in triples))

    def summands(self) -> List[Tuple[int, int]]:
        """중복도를 펼친 구간 목록"""
        out: List[Tuple[int, int]] = []
        for iv in self.intervals:
            out.extend([(iv.start, iv.end)] * iv.mult)
        return out

    def dims(self) -> Tuple[int, ...]:
        d = [0] * self.rank
        for a, b in self.summands():
            for v in range(a, b + 1):
                d[v - 1] += 1
        return tuple(d)

    def normalized(self) -> "IntervalSpec":
        """같은 구간을 합치고 정렬한 명세"""
        counts: Dict[Tuple[int, int], int] = {}
        for a, b in self.summands():
            counts[(a, b)] = counts.get((a, b), 0) + 1
        return IntervalSpec(
            rank=self.rank,
            intervals=tuple(Interval(a, b, m) for (a, b), m in sorted(counts.items())),
        )

    def label(self) -> str:
        parts = [iv.label() for iv in self.normalized().intervals]
        return f"A{self.rank}:" + ("+".join(parts) if parts else "0")

    def build_module(self, cartan: CartanData, name: str = "") -> "PiModule":
        """
        오른쪽 방향 퀴버 위의 구간 모듈 직합

        각 구간 [a, b] 는 정점 a..b 에 1차원 공간을 주고, 오른쪽 화살표는 항등,
        E* 사상은 0 이다. 전사영 관계식은 구성상 성립한다.

        Raises:
            InputError: A 타입이 아니거나 rank 불일치
        """
        require_type_a(cartan)
        if self.rank != cartan.rank:
            raise InputError(f"interval spec rank {self.rank} does not match {cartan.label}")

        quiver = Quiver.rightward(cartan)
        # 정점별로 그 정점을 덮는 구간의 (구간 번호 → 지역 좌표)
        local: Dict[int, Dict[int, int]] = {v: {} for v in cartan.vertices}
        for idx, (a, b) in enumerate(self.summands()):
            for v in range(a, b + 1):
                local[v][idx] = len(local[v])
        dims = tuple(len(local[v]) for v in cartan.vertices)

        maps: Dict[ArrowKey, RationalMatrix] = {}
        for s, t in quiver.orientation:
            matrix = [[Fraction(0)] * dims[s - 1] for _ in range(dims[t - 1])]
            for idx, col in local[s].items():
                if idx in local[t]:
                    matrix[local[t][idx]][col] = Fraction(1)
            maps[(s, t)] = tuple(tuple(row) for row in matrix)

        return PiModule(quiver=quiver, dims=dims, maps=maps, name=name or self.label())


def require_type_a(cartan: CartanData) -> None:
    if cartan.family != CartanFamily.A:
        raise InputError(f"interval modules need type A, got {cartan.label}")


@dataclass(frozen=True)
class ModuleSource:
    """
    모듈 파일 한 개를 읽은 결과

    Attributes:
        quiver: 퀴버
        module: Π-모듈 (구간 형식이면 build_from_intervals 결과)
        intervals: 구간 형식으로 주어졌을 때의 명세 (행렬 형식이면 None)
    """
    quiver: Quiver
    module: PiModule
    intervals: Optional[IntervalSpec] = None
