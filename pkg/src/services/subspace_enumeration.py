"""
Subspace Enumeration over F_q
유한체 위 부분공간 열거 (기약 행 사다리꼴 대표원) 와 Gauss 이항계수
"""
import itertools
from functools import lru_cache
from typing import Iterator, List, Tuple

from src.domain.grassmannian.value_objects import PoincarePoly

RowBasis = Tuple[Tuple[int, ...], ...]


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> PoincarePoly:
    """
    [n choose k]_q (k < 0 또는 k > n 이면 0)

    [n, k] = [n-1, k-1] + q^k [n-1, k]
    """
    if k < 0 or n < 0 or k > n:
        return PoincarePoly.zero()
    if k == 0 or k == n:
        return PoincarePoly.one()
    shifted = PoincarePoly((0,) * k + gaussian_binomial(n - 1, k).coefficients)
    return gaussian_binomial(n - 1, k - 1) + shifted


def count_subspaces(n: int, k: int, q: int) -> int:
    """F_q^n 의 k 차원 부분공간 수"""
    return gaussian_binomial(n, k).evaluate(q)


def _free_positions(pivots: Tuple[int, ...], n: int) -> List[Tuple[int, int]]:
    """피벗 열 오른쪽의 비피벗 열 위치 (행, 열)"""
    pivot_set = set(pivots)
    return [
        (row, col)
        for row, pivot in enumerate(pivots)
        for col in range(pivot + 1, n)
        if col not in pivot_set
    ]


def rref_subspaces(n: int, k: int, q: int) -> Iterator[RowBasis]:
    """
    F_q^n 의 k 차원 부분공간을 기약 행 사다리꼴 기저 (k x n) 로 하나씩 생성

    피벗 열 조합마다 자유 위치에 F_q 의 모든 값을 채운다.
    """
    if k < 0 or k > n:
        return
    if k == 0:
        yield ()
        return
    for pivots in itertools.combinations(range(n), k):
        free = _free_positions(pivots, n)
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for row, pivot in enumerate(pivots):
                rows[row][pivot] = 1
            for (row, col), value in zip(free, values):
                rows[row][col] = value
            yield tuple(tuple(r) for r in rows)


def column_basis(rows: RowBasis, n: int) -> Tuple[Tuple[int, ...], ...]:
    """행 기저 (k x n) 를 열 기저 행렬 (n x k) 로 전치"""
    k = len(rows)
    return tuple(tuple(rows[c][r] for c in range(k)) for r in range(n))
