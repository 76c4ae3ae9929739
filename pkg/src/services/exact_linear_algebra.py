"""
Exact Linear Algebra
Clean Architecture: Application Layer (helper)

유리수 (QQ) 와 유한체 (GF(p)) 위의 정확한 행렬 연산.
sympy DomainMatrix 를 감싸며, 크기 0 인 행렬은 직접 처리한다.
"""
from fractions import Fraction
from typing import List, Optional, Sequence

from sympy import QQ
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from src.domain.exceptions import InputError
from src.domain.quiver.entities import RationalMatrix, zero_matrix


def field_of(p: Optional[int] = None):
    """p 가 None 이면 QQ, 아니면 GF(p)"""
    return QQ if p is None else GF(p)


def reduce_mod(value: Fraction, p: int) -> int:
    """
    유리수를 F_p 원소로 환원

    Raises:
        InputError: 분모가 p 로 나누어짐
    """
    value = Fraction(value)
    if value.denominator % p == 0:
        raise InputError(f"entry {value} has a denominator divisible by {p}")
    return value.numerator * pow(value.denominator, -1, p) % p


def to_domain_matrix(
    matrix: Sequence[Sequence],
    rows: int,
    cols: int,
    p: Optional[int] = None,
) -> DomainMatrix:
    """Fraction / int 행렬을 DomainMatrix 로 변환"""
    K = field_of(p)
    if rows == 0 or cols == 0:
        return DomainMatrix.zeros((rows, cols), K, fmt="dense")
    if p is None:
        data = [[K(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in matrix]
    else:
        data = [[K(reduce_mod(Fraction(x), p)) for x in row] for row in matrix]
    return DomainMatrix(data, (rows, cols), K)


def to_fractions(dm: DomainMatrix) -> RationalMatrix:
    """QQ 위의 DomainMatrix 를 Fraction 튜플로 변환"""
    rows, cols = dm.shape
    if rows == 0 or cols == 0:
        return zero_matrix(rows, cols)
    return tuple(
        tuple(Fraction(int(x.numerator), int(x.denominator)) for x in row)
        for row in dm.to_list()
    )


def rank(dm: DomainMatrix) -> int:
    rows, cols = dm.shape
    if rows == 0 or cols == 0:
        return 0
    return dm.rank()


def matmul(left: DomainMatrix, right: DomainMatrix) -> DomainMatrix:
    """크기 0 차원을 허용하는 행렬 곱"""
    rows, inner = left.shape
    inner2, cols = right.shape
    if inner != inner2:
        raise InputError(f"cannot multiply {left.shape} by {right.shape}")
    if rows == 0 or cols == 0 or inner == 0:
        return DomainMatrix.zeros((rows, cols), left.domain, fmt="dense")
    return left.matmul(right)


def zeros(rows: int, cols: int, p: Optional[int] = None) -> DomainMatrix:
    return DomainMatrix.zeros((rows, cols), field_of(p), fmt="dense")


def add(left: DomainMatrix, right: DomainMatrix, sign: int = 1) -> DomainMatrix:
    """left + sign * right (크기 0 허용)"""
    if left.shape != right.shape:
        raise InputError(f"cannot add {left.shape} and {right.shape}")
    rows, cols = left.shape
    if rows == 0 or cols == 0:
        return left
    return left + right if sign > 0 else left - right


def hstack(blocks: List[DomainMatrix], rows: int, domain) -> DomainMatrix:
    """열 방향 이어붙이기 (빈 목록이면 rows x 0)"""
    nonempty = [b for b in blocks if b.shape[1] > 0]
    if not nonempty or rows == 0:
        total = sum(b.shape[1] for b in blocks)
        return DomainMatrix.zeros((rows, total), domain, fmt="dense")
    if len(nonempty) == 1:
        return nonempty[0]
    return nonempty[0].hstack(*nonempty[1:])


def vstack(blocks: List[DomainMatrix], cols: int, domain) -> DomainMatrix:
    """행 방향 이어붙이기 (빈 목록이면 0 x cols)"""
    nonempty = [b for b in blocks if b.shape[0] > 0]
    if not nonempty or cols == 0:
        total = sum(b.shape[0] for b in blocks)
        return DomainMatrix.zeros((total, cols), domain, fmt="dense")
    if len(nonempty) == 1:
        return nonempty[0]
    return nonempty[0].vstack(*nonempty[1:])


def block_diagonal(first: DomainMatrix, second: DomainMatrix) -> DomainMatrix:
    """[[first, 0], [0, second]]"""
    K = first.domain
    rows1, cols1 = first.shape
    rows2, cols2 = second.shape
    top = hstack([first, DomainMatrix.zeros((rows1, cols2), K, fmt="dense")], rows1, K)
    bottom = hstack([DomainMatrix.zeros((rows2, cols1), K, fmt="dense"), second], rows2, K)
    return vstack([top, bottom], cols1 + cols2, K)


def is_zero_matrix(dm: DomainMatrix) -> bool:
    rows, cols = dm.shape
    if rows == 0 or cols == 0:
        return True
    return all(not x for row in dm.to_list() for x in row)


def annihilator(basis: DomainMatrix) -> DomainMatrix:
    """
    열공간 N 의 소멸자: 행 y 들로 y·N = 0 을 만족하는 공간의 기저 (행렬의 행)

    Args:
        basis: n x k 열 기저 행렬

    Returns:
        (n - rank) x n 행렬
    """
    n = basis.shape[0]
    K = basis.domain
    if n == 0:
        return DomainMatrix.zeros((0, 0), K, fmt="dense")
    r = rank(basis)
    if r == 0:
        return DomainMatrix.eye(n, K).to_dense()
    if r == n:
        return DomainMatrix.zeros((0, n), K, fmt="dense")
    return basis.transpose().nullspace().to_dense()


def kernel_dimension(dm: DomainMatrix) -> int:
    """dim ker = 열 수 - rank"""
    return dm.shape[1] - rank(dm)


def contains(big: DomainMatrix, small: DomainMatrix) -> bool:
    """열공간 small ⊆ 열공간 big"""
    rows = big.shape[0]
    if small.shape[1] == 0 or rank(small) == 0:
        return True
    joined = hstack([big, small], rows, big.domain)
    return rank(joined) == rank(big)
