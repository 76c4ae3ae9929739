"""
Exact Linear Algebra Tests
크기 0 행렬, 유한체 환원, 소멸자, 열공간 포함
"""
from fractions import Fraction

import pytest

from src.domain.exceptions import InputError
from src.services import exact_linear_algebra as ela


class TestConversion:

    def test_round_trip_fractions(self):
        matrix = ((Fraction(1, 2), Fraction(0)), (Fraction(-3), Fraction(2, 3)))
        assert ela.to_fractions(ela.to_domain_matrix(matrix, 2, 2)) == matrix

    def test_zero_size(self):
        dm = ela.to_domain_matrix((), 0, 3)
        assert dm.shape == (0, 3)
        assert ela.rank(dm) == 0
        assert ela.kernel_dimension(dm) == 3

    def test_reduce_mod(self):
        assert ela.reduce_mod(Fraction(1, 2), 3) == 2
        with pytest.raises(InputError):
            ela.reduce_mod(Fraction(1, 2), 2)

    def test_finite_field_rank(self):
        # 행렬 [[1, 1], [1, -1]] 은 F_2 에서 rank 1
        matrix = ((1, 1), (1, -1))
        assert ela.rank(ela.to_domain_matrix(matrix, 2, 2)) == 2
        assert ela.rank(ela.to_domain_matrix(matrix, 2, 2, p=2)) == 1


class TestOperations:

    def test_matmul_with_empty_inner(self):
        left = ela.to_domain_matrix((), 2, 0)
        right = ela.to_domain_matrix((), 0, 3)
        product = ela.matmul(left, right)
        assert product.shape == (2, 3)
        assert ela.is_zero_matrix(product)

    def test_matmul_shape_mismatch(self):
        with pytest.raises(InputError):
            ela.matmul(ela.to_domain_matrix(((1,),), 1, 1), ela.to_domain_matrix(((1, 0),), 1, 2).transpose())

    def test_stacks_skip_empty_blocks(self):
        K = ela.field_of()
        block = ela.to_domain_matrix(((1,), (2,)), 2, 1)
        empty = ela.to_domain_matrix((), 2, 0)
        assert ela.hstack([empty, block], 2, K).shape == (2, 1)
        assert ela.vstack([ela.to_domain_matrix((), 0, 1), block], 1, K).shape == (2, 1)

    def test_annihilator(self):
        line = ela.to_domain_matrix(((1,), (1,)), 2, 1)
        ann = ela.annihilator(line)
        assert ann.shape == (1, 2)
        assert ela.is_zero_matrix(ela.matmul(ann, line))

    def test_annihilator_extremes(self):
        zero = ela.to_domain_matrix(((0,), (0,)), 2, 1)
        full = ela.to_domain_matrix(((1, 0), (0, 1)), 2, 2)
        assert ela.annihilator(zero).shape == (2, 2)
        assert ela.annihilator(full).shape == (0, 2)

    def test_contains(self):
        plane = ela.to_domain_matrix(((1, 0), (0, 1), (0, 0)), 3, 2)
        inside = ela.to_domain_matrix(((1,), (1,), (0,)), 3, 1)
        outside = ela.to_domain_matrix(((0,), (0,), (1,)), 3, 1)
        assert ela.contains(plane, inside)
        assert not ela.contains(plane, outside)
        assert ela.contains(plane, ela.to_domain_matrix((), 3, 0))

    def test_add_and_subtract(self):
        left = ela.to_domain_matrix(((1, 2),), 1, 2)
        right = ela.to_domain_matrix(((Fraction(1, 2), 1),), 1, 2)
        assert ela.to_fractions(ela.add(left, right)) == ((Fraction(3, 2), Fraction(3)),)
        assert ela.to_fractions(ela.add(left, right, sign=-1)) == ((Fraction(1, 2), Fraction(1)),)

    def test_add_zero_size(self):
        assert ela.add(ela.zeros(0, 2), ela.zeros(0, 2)).shape == (0, 2)

    def test_add_shape_mismatch(self):
        with pytest.raises(InputError):
            ela.add(ela.zeros(1, 2), ela.zeros(2, 1))

    def test_block_diagonal(self):
        first = ela.to_domain_matrix(((1,),), 1, 1)
        second = ela.to_domain_matrix(((2, 3),), 1, 2)
        assert ela.to_fractions(ela.block_diagonal(first, second)) == (
            (Fraction(1), Fraction(0), Fraction(0)),
            (Fraction(0), Fraction(2), Fraction(3)),
        )

    def test_block_diagonal_with_empty_block(self):
        block = ela.to_domain_matrix(((1,), (2,)), 2, 1)
        total = ela.block_diagonal(block, ela.zeros(0, 2))
        assert total.shape == (2, 3)
        assert ela.to_fractions(total)[1] == (Fraction(2), Fraction(0), Fraction(0))
