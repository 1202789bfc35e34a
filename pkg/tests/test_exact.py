from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gdrazin import GaussianRational, Matrix, inverse, power, rref
from gdrazin.exact import ShapeError, SingularMatrixError, mat_arith, rank, scalar_arith
from gdrazin.generate import _unimodular

from oracles import adjugate_inverse, det_leibniz

import numpy as np

small = st.integers(-3, 3)


def square(n_min=1, n_max=4):
    return st.integers(n_min, n_max).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)
    )


def gq(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


# -- scalars ----------------------------------------------------------------


def test_scalar_add_halves():
    assert scalar_arith(gq("1/2"), gq("1/3"), "add") == gq("5/6")


def test_i_squared():
    assert scalar_arith(gq(0, 1), gq(0, 1), "mul") == gq(-1)


def test_division_against_conjugate_oracle():
    # (1+i)/(1-i) = (1+i)^2 / |1-i|^2 = 2i / 2
    num = gq(1, 1) * gq(1, 1)
    oracle = num / gq(2)
    assert oracle == gq(0, 1)
    assert scalar_arith(gq(1, 1), gq(1, -1), "div") == oracle


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError, match="scalar division by zero"):
        scalar_arith(gq(1), gq(0), "div")


@given(small, st.integers(1, 5), small, st.integers(1, 5), st.sampled_from(["add", "sub", "mul", "div"]))
def test_results_are_canonical(p, q, s, t, op):
    x = gq(Fraction(p, q), Fraction(s, t))
    y = gq(Fraction(s + 1, q), Fraction(p, t))
    if op == "div" and not y:
        return
    z = scalar_arith(x, y, op)
    for part in (z.re, z.im):
        assert part.denominator >= 1
        assert np.gcd(int(part.numerator), int(part.denominator)) == 1


# -- matrix arithmetic ------------------------------------------------------


def test_additive_and_multiplicative_identity():
    A = Matrix([[1, "2/3"], [complex(0, 1), -4]])
    assert mat_arith(A, Matrix.zeros(2), "add") == A
    assert mat_arith(Matrix.identity(2), A, "mul") == A


def test_example_product_b_times_a(ex21):
    a, b = ex21
    assert b @ a == Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])


def test_shape_mismatch_names_both_shapes():
    with pytest.raises(ShapeError, match="2x3.*3x2"):
        Matrix.zeros(2, 3) + Matrix.zeros(3, 2)
    with pytest.raises(ShapeError, match="2x3.*2x3"):
        Matrix.zeros(2, 3) @ Matrix.zeros(2, 3)


def test_scale_complex():
    A = Matrix([[1, 2]])
    assert A.scale(complex(0, 1)) == Matrix([[complex(0, 1), complex(0, 2)]])
    assert (A * 2) == Matrix([[2, 4]])


def test_complex_product_matches_scalar_route():
    A = Matrix([[complex(1, 1), 2], [0, complex(0, -1)]])
    B = Matrix([[3, complex(0, 1)], [complex(2, -1), 1]])
    C = A @ B
    for i in range(2):
        for j in range(2):
            assert C[i, j] == sum((A[i, k] * B[k, j] for k in range(2)), GaussianRational())


@settings(max_examples=40, deadline=None)
@given(square(1, 4), square(1, 4), square(1, 4))
def test_associativity(x, y, z):
    n = min(len(x), len(y), len(z))
    A, B, C = (Matrix([r[:n] for r in m[:n]]) for m in (x, y, z))
    assert (A @ B) @ C == A @ (B @ C)


# -- elimination ------------------------------------------------------------


def test_rref_zero():
    red = rref(Matrix.zeros(3))
    assert red.rank == 0
    assert red.kernel_basis == Matrix.identity(3)


def test_rref_identity():
    red = rref(Matrix.identity(3))
    assert red.rank == 3
    assert red.kernel_basis.cols == 0


def test_rank_of_shift(ex22):
    a, _ = ex22
    rows = [[Fraction(str(a[i, j].re)) for j in range(3)] for i in range(3)]
    # independent oracle: det = 0 and a nonzero 2x2 minor
    assert det_leibniz(rows) == 0
    assert det_leibniz([[rows[1][0], rows[1][1]], [rows[2][0], rows[2][1]]]) != 0
    assert rref(a).rank == 2


def test_rref_is_reduced():
    A = Matrix([[0, 2, 4, 1], [0, 1, 2, 0], [1, 1, 1, 1]])
    red = rref(A)
    assert red.pivot_cols == (0, 1, 3)
    assert red.R == Matrix([[1, 0, -1, 0], [0, 1, 2, 0], [0, 0, 0, 1]])


@settings(max_examples=60, deadline=None)
@given(square(1, 5))
def test_rank_nullity_and_kernel(rows):
    A = Matrix(rows)
    red = rref(A)
    assert red.rank == rank(red.R) == rank(A)
    assert red.rank + red.kernel_basis.cols == A.cols
    assert (A @ red.kernel_basis).is_zero()
    assert red.colspace_basis.cols == red.rank
    assert rank(red.colspace_basis) == red.rank


def test_rref_complex():
    A = Matrix([[1, complex(0, 1)], [complex(0, 1), -1]])
    red = rref(A)
    assert red.rank == 1
    assert (A @ red.kernel_basis).is_zero()


# -- inverse and power ------------------------------------------------------


def test_inverse_identity():
    assert inverse(Matrix.identity(4)) == Matrix.identity(4)


def test_inverse_diagonal():
    D = Matrix.diag([2, complex(1, 1)])
    assert inverse(D) == Matrix.diag([Fraction(1, 2), gq("1/2", "-1/2")])


@pytest.mark.parametrize("seed", range(5))
def test_inverse_unimodular_against_adjugate(seed):
    S, _ = _unimodular(np.random.default_rng(seed), 4)
    rows = [[Fraction(str(S[i, j].re)) for j in range(4)] for i in range(4)]
    assert abs(det_leibniz(rows)) == 1
    Sinv = inverse(S)
    assert Sinv.is_integral()
    assert Sinv == Matrix(adjugate_inverse(rows))
    assert S @ Sinv == Matrix.identity(4) == Sinv @ S


def test_inverse_singular():
    with pytest.raises(SingularMatrixError, match="matrix not invertible"):
        inverse(Matrix([[1, 2], [2, 4]]))


def test_inverse_rejects_rectangular():
    with pytest.raises(ShapeError):
        inverse(Matrix.zeros(2, 3))


@settings(max_examples=40, deadline=None)
@given(square(1, 4))
def test_inverse_property(rows):
    A = Matrix(rows)
    try:
        X = inverse(A)
    except SingularMatrixError:
        assert rank(A) < A.rows
        return
    assert X @ A == Matrix.identity(A.rows)


def test_power_zero_is_identity():
    A = Matrix([[1, 2], [3, 4]])
    assert power(A, 0) == Matrix.identity(2)
    assert A ** 3 == A @ A @ A


def test_shift_powers(ex22):
    a, _ = ex22
    assert a ** 2 == Matrix([[0, 0, 0], [0, 0, 0], [1, 0, 0]])
    assert (a ** 3).is_zero()


def test_transpose_and_conjugate_transpose():
    A = Matrix([[1, complex(2, 3)], [0, 4]])
    assert A.T == Matrix([[1, 0], [complex(2, 3), 4]])
    assert A.H == Matrix([[1, 0], [complex(2, -3), 4]])
    assert Matrix.zeros(2, 0).T.shape == (0, 2)
