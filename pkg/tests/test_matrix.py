from fractions import Fraction

import pytest
from hypothesis import given, settings

from semiring.assignment import solve_assignment
from semiring.errors import IndexOutOfRangeError, NotSquareError, ShapeMismatchError, SizeLimitError, TooSmallError
from semiring.matrix import (
    DetResult,
    TropMatrix,
    det,
    det_fast,
    det_naive,
    identity,
    is_all_real,
    mat_add,
    mat_mul,
    mat_pow,
    minor,
    permute_rows,
    pi_star,
    replace_row,
    scalar_mul,
    scale_col,
    scale_row,
    transpose,
    zero_matrix,
)
from semiring.scalar import NEG_INF, ZERO, Tag, nu, real, tsum
from tests.strategies import matrices, rationals, rectangular

A = TropMatrix.from_rows([[1, 1], [2, 3]])
B = TropMatrix.from_rows([[3, 1], [0, 2]])
SINGULAR = TropMatrix.from_rows([[1, 2], [2, 3]])


def test_identity():
    assert identity(2) == TropMatrix.from_rows([["0", "-inf"], ["-inf", "0"]])
    assert identity(1) == TropMatrix.from_rows([[0]])
    assert mat_mul(identity(2), A) == A
    with pytest.raises(ShapeMismatchError):
        identity(0)


def test_construction_checks_the_grid():
    with pytest.raises(ShapeMismatchError):
        TropMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ShapeMismatchError):
        TropMatrix.from_rows([])
    with pytest.raises(TypeError):
        TropMatrix(((1, 2),))


def test_accessors():
    m = TropMatrix.from_rows([["1v", "-inf", "1/2"]])
    assert m.shape == (1, 3)
    assert not m.is_square
    assert m[0, 0] == nu(1)
    assert m[0, 2] == real(Fraction(1, 2))
    assert not is_all_real(m)
    assert pi_star(m) == TropMatrix.from_rows([[1, "-inf", "1/2"]])


def test_mat_add():
    assert mat_add(TropMatrix.from_rows([[1]]), TropMatrix.from_rows([[1]])) == TropMatrix.from_rows([["1v"]])
    assert A + zero_matrix(2) == A
    assert TropMatrix.from_rows([[1, 2]]) + TropMatrix.from_rows([[2, 1]]) == TropMatrix.from_rows([[2, 2]])
    with pytest.raises(ShapeMismatchError):
        mat_add(A, identity(3))


def test_mat_mul():
    assert A @ A == TropMatrix.from_rows([[3, 4], [5, 6]])
    assert B @ B == TropMatrix.from_rows([[6, 4], [3, 4]])
    assert SINGULAR @ B == TropMatrix.from_rows([[4, 4], [5, 5]])
    assert mat_pow(A, 2) == A @ A
    assert mat_pow(A, 0) == identity(2)
    with pytest.raises(ShapeMismatchError):
        mat_mul(A, TropMatrix.from_rows([[1, 2]]))


def test_scalar_mul():
    m = TropMatrix.from_rows([[2, -1], [2, 1]])
    assert scalar_mul(real(-3), m) == TropMatrix.from_rows([[-1, -4], [-1, -2]])
    assert real(-3) * m == scalar_mul(real(-3), m)
    assert scalar_mul(NEG_INF, A) == zero_matrix(2)
    assert scalar_mul(ZERO, A) == A


def test_transpose():
    assert transpose(A) == TropMatrix.from_rows([[1, 2], [1, 3]])
    assert transpose(transpose(A)) == A
    assert transpose(SINGULAR @ B) == transpose(B) @ transpose(SINGULAR)
    assert transpose(TropMatrix.from_rows([[1, 2, 3]])).shape == (3, 1)


def test_minor():
    assert minor(A, 0, 0) == TropMatrix.from_rows([[3]])
    assert minor(A, 1, 1) == TropMatrix.from_rows([[1]])
    expansion = tsum(A[0, j] * det_naive(minor(A, 0, j)).value for j in range(2))
    assert expansion == real(4)


@pytest.mark.parametrize(
    ("matrix", "i", "j", "error"),
    [
        (A, 2, 0, IndexOutOfRangeError),
        (A, 0, -1, IndexOutOfRangeError),
        (TropMatrix.from_rows([[1]]), 0, 0, TooSmallError),
        (TropMatrix.from_rows([[1, 2]]), 0, 0, NotSquareError),
    ],
)
def test_minor_rejects(matrix, i, j, error):
    with pytest.raises(error):
        minor(matrix, i, j)


def test_row_operations():
    assert permute_rows(A, [1, 0]) == TropMatrix.from_rows([[2, 3], [1, 1]])
    assert scale_row(A, 0, real(2)) == TropMatrix.from_rows([[3, 3], [2, 3]])
    assert scale_col(A, 1, real(-1)) == TropMatrix.from_rows([[1, 0], [2, 2]])
    assert replace_row(A, 1, 0) == TropMatrix.from_rows([[1, 1], [1, 1]])
    with pytest.raises(ValueError, match="permutation"):
        permute_rows(A, [0, 0])


@pytest.mark.parametrize(
    ("rows", "expected"),
    [
        ([[1, 1], [2, 3]], DetResult(real(4), 1, False)),
        ([[1, 2], [2, 3]], DetResult(nu(4), 2, False)),
        ([[1, -1], [4, 2]], DetResult(nu(3), 2, False)),
        ([[3, 1], [0, 2]], DetResult(real(5), 1, False)),
        ([[6, 4], [3, 4]], DetResult(real(10), 1, False)),
        ([[3, 4], [5, 6]], DetResult(nu(9), 2, False)),
        ([[4, 4], [5, 5]], DetResult(nu(9), 2, False)),
        ([["2v", 0], [0, 1]], DetResult(nu(3), 1, True)),
        ([[0, -2, -1], [-2, 0, "-3v"], [-1, "-3v", 0]], DetResult(real(0), 1, False)),
        ([["-inf", "-inf"], [1, 2]], DetResult(NEG_INF, 0, False)),
        ([["1/2"]], DetResult(real(Fraction(1, 2)), 1, False)),
        ([["7v"]], DetResult(nu(7), 1, True)),
    ],
)
def test_det_golden(rows, expected):
    matrix = TropMatrix.from_rows(rows)
    assert det_naive(matrix) == expected
    assert det_fast(matrix) == expected
    assert det(matrix) == expected


def test_det_tag():
    assert det(A).tag is Tag.REAL
    assert det(SINGULAR).tag is Tag.NU


def test_det_fast_on_large_identity():
    assert det_fast(identity(5)) == DetResult(ZERO, 1, False)
    assert det(identity(12)) == DetResult(ZERO, 1, False)


def test_det_naive_is_capped():
    with pytest.raises(SizeLimitError):
        det_naive(identity(11))
    with pytest.raises(SizeLimitError):
        det(identity(4), method="naive", max_n=3)
    assert det(identity(4), method="fast", max_n=3).value == ZERO


def test_det_requires_square():
    with pytest.raises(NotSquareError):
        det_naive(TropMatrix.from_rows([[1, 2]]))
    with pytest.raises(NotSquareError):
        det_fast(TropMatrix.from_rows([[1, 2]]))


def test_det_fast_handles_values_beyond_float_precision():
    big = 10**18
    matrix = TropMatrix.from_rows([[big, 0, 0], [0, big, 1], [0, 1, big]])
    assert det_fast(matrix) == det_naive(matrix) == DetResult(real(3 * big), 1, False)
    tied = TropMatrix.from_rows([[big, big], [big, big]])
    assert det_fast(tied) == DetResult(nu(2 * big), 2, False)


def test_solve_assignment():
    assert solve_assignment([[1, 5], [4, 1]]) == (9, (1, 0))
    assert solve_assignment([[None, 5], [None, 1]]) is None
    assert solve_assignment([[None]]) is None
    assert solve_assignment([[10**20, None], [0, 10**20]]) == (2 * 10**20, (0, 1))
    assert solve_assignment([[None, 10**20], [10**20, None]]) == (2 * 10**20, (1, 0))


@settings(max_examples=200)
@given(matrices(1, 6))
def test_det_fast_agrees_with_brute_force(a):
    assert det_fast(a) == det_naive(a)


@given(matrices(1, 5, rationals(3, 2).map(real)))
def test_det_fast_agrees_on_real_matrices(a):
    assert det_fast(a) == det_naive(a)


@given(matrices(1, 5))
def test_det_is_transpose_invariant(a):
    assert det_naive(transpose(a)) == det_naive(a)


@given(matrices(2, 5))
def test_det_expands_along_the_first_row(a):
    expansion = tsum(a[0, j] * det_naive(minor(a, 0, j)).value for j in range(a.cols))
    assert expansion == det_naive(a).value


@given(rectangular(2, 3), rectangular(3, 2), rectangular(2, 4))
def test_product_transpose_and_distributivity(a, b, c):
    assert transpose(a @ b) == transpose(b) @ transpose(a)
    assert (a @ b) @ c == a @ (b @ c)


@given(matrices(2, 2), matrices(2, 2), matrices(2, 2))
def test_matrix_semiring_laws(a, b, c):
    assert a @ (b + c) == a @ b + a @ c
    assert a + b == b + a
    assert identity(2) @ a == a == a @ identity(2)
