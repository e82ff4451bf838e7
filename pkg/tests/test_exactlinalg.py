from fractions import Fraction

import numpy as np
import pytest
import sympy

from src.core.errors import AmbientMismatchError
from src.core.exactlinalg import (
    RationalMatrix,
    compose_is_zero,
    kernel_dimension,
    multiply,
    rank,
    rank_by_fractions,
)


def sympy_rank(rows):
    return sympy.Matrix(rows).rank() if rows and rows[0] else 0


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[1, 2], [2, 4]], 1),
        ([[1, 0], [0, 1]], 2),
        ([[0, 0], [0, 0]], 0),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 2),
        ([[0, 1, 1], [0, 0, 1], [0, 0, 0]], 2),
        ([[Fraction(1, 2), Fraction(1, 3)], [3, 2]], 1),
    ],
)
def test_rank_small_matrices(rows, expected):
    m = RationalMatrix.from_rows(rows)
    assert rank(m) == expected
    assert rank_by_fractions(m) == expected
    assert sympy_rank(rows) == expected


def test_rank_agrees_with_sympy_on_integer_grid():
    rows = [[(3 * r + 5 * c) % 7 - 3 for c in range(6)] for r in range(5)]
    rows.append([a + b for a, b in zip(rows[0], rows[1])])
    m = RationalMatrix.from_rows(rows)
    assert rank(m) == sympy_rank(rows) == rank_by_fractions(m)


def test_bareiss_matches_fractions_on_random_low_rank_matrices():
    rng = np.random.default_rng(11)
    for k in range(7):
        left = rng.integers(-4, 5, size=(6, k))
        right = rng.integers(-4, 5, size=(k, 6))
        rows = (left @ right).tolist()
        m = RationalMatrix.from_rows(rows)
        assert rank(m) == rank_by_fractions(m) == sympy_rank(rows)
        assert rank(m) == rank(m.transpose())
        assert rank(m) <= k


def test_rank_is_invariant_under_transpose():
    m = RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6], [Fraction(1, 2), 0, 1], [0, 0, 0]])
    assert m.transpose().rows == 3
    assert rank(m) == rank(m.transpose()) == 2


def test_rank_needs_row_swaps_and_skipped_columns():
    rows = [[0, 0, 2, 4], [0, 3, 1, 0], [0, 6, 4, 4], [0, 0, 0, 0]]
    assert rank(RationalMatrix.from_rows(rows)) == sympy_rank(rows) == 2


def test_empty_shapes():
    assert rank(RationalMatrix.from_rows([], cols=3)) == 0
    one_by_zero = RationalMatrix.from_rows([[]])
    assert (one_by_zero.rows, one_by_zero.cols) == (1, 0)
    assert rank(one_by_zero) == 0
    assert kernel_dimension(RationalMatrix.from_rows([], cols=4)) == 4


def test_kernel_dimension_is_cols_minus_rank():
    m = RationalMatrix.from_rows([[1, 1, 1], [2, 2, 2]])
    assert kernel_dimension(m) == 2


def test_compose_is_zero():
    a = RationalMatrix.from_rows([[1, 1]])
    b = RationalMatrix.from_rows([[1], [-1]])
    assert compose_is_zero(a, b)
    assert not compose_is_zero(b, a)


def test_multiply_rejects_shape_mismatch():
    with pytest.raises(AmbientMismatchError):
        multiply(RationalMatrix.identity(2), RationalMatrix.identity(3))


def test_matmul_and_transpose():
    a = RationalMatrix.from_rows([[1, 2], [3, 4]])
    product = a @ RationalMatrix.identity(2)
    assert product == a
    assert a.transpose().to_rows() == [[1, 3], [2, 4]]


def test_from_rows_rejects_ragged_rows():
    with pytest.raises(ValueError):
        RationalMatrix.from_rows([[1, 2], [3]])
