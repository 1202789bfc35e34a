"""Exact dense linear algebra over the Gaussian rationals Q(i).

Scalars are :class:`GaussianRational` values whose real and imaginary parts
are ``gmpy2.mpq`` rationals (always stored in lowest terms).  Matrices are
immutable; a matrix whose imaginary part vanishes is stored with no
imaginary array at all, so the common all-real case runs on plain rational
arithmetic.

>>> A = Matrix([[1, 2], [3, 4]])
>>> (A @ inverse(A)) == Matrix.identity(2)
True
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from operator import mul
from typing import Iterable, Sequence

from gmpy2 import mpq

__all__ = [
    "GaussianRational",
    "Matrix",
    "RREF",
    "ShapeError",
    "SingularMatrixError",
    "as_scalar",
    "inverse",
    "power",
    "rref",
    "scalar_arith",
    "mat_arith",
]

_ZERO = mpq(0)
_ONE = mpq(1)


class ShapeError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


def _q(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, (int, Rational)) or type(x).__name__ == "mpq":
        return mpq(x)
    if isinstance(x, str):
        return mpq(Fraction(x))
    raise TypeError(f"cannot convert {x!r} to an exact rational")


class GaussianRational:
    """An element ``re + im*i`` of Q(i), with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _q(re)
        self.im = _q(im)

    @classmethod
    def _raw(cls, re: mpq, im: mpq) -> "GaussianRational":
        z = object.__new__(cls)
        z.re = re
        z.im = im
        return z

    def __add__(self, other):
        other = as_scalar(other)
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_scalar(other)
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __mul__(self, other):
        other = as_scalar(other)
        if not self.im and not other.im:
            return GaussianRational._raw(self.re * other.re, _ZERO)
        return GaussianRational._raw(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_scalar(other)
        if not other:
            raise ZeroDivisionError("scalar division by zero")
        if not other.im:
            return GaussianRational._raw(self.re / other.re, self.im / other.re)
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def reciprocal(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("scalar division by zero")
        return GaussianRational._raw(self.re / norm, -self.im / norm)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"GaussianRational({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self):
        from .io import format_scalar

        return format_scalar(self)


def as_scalar(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, complex):
        return GaussianRational(Fraction(x.real), Fraction(x.imag))
    return GaussianRational._raw(_q(x), _ZERO)


def scalar_arith(x, y, op: str) -> GaussianRational:
    """Exact field operation ``op`` in {'add', 'sub', 'mul', 'div'}."""
    x, y = as_scalar(x), as_scalar(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown scalar operation {op!r}")


# -- matrices ---------------------------------------------------------------

_Rows = tuple  # tuple[tuple[mpq, ...], ...]


def _zero_rows(r: int, c: int) -> _Rows:
    row = (_ZERO,) * c
    return (row,) * r


def _all_zero(rows: _Rows) -> bool:
    return not any(any(row) for row in rows)


def _add(X: _Rows, Y: _Rows) -> _Rows:
    return tuple(tuple(x + y for x, y in zip(rx, ry)) for rx, ry in zip(X, Y))


def _sub(X: _Rows, Y: _Rows) -> _Rows:
    return tuple(tuple(x - y for x, y in zip(rx, ry)) for rx, ry in zip(X, Y))


def _matmul(X: _Rows, Y: _Rows, inner: int, ncols: int) -> _Rows:
    if inner == 0:
        return _zero_rows(len(X), ncols)
    Yt = tuple(zip(*Y))
    return tuple(
        tuple(sum(map(mul, row, col), _ZERO) for col in Yt) for row in X
    )


class Matrix:
    """Immutable dense matrix over Q(i).

    Construct from nested rows of ints, ``Fraction``/``mpq``, strings such as
    ``"-1/2"``, Python ``complex`` with integral parts, or
    :class:`GaussianRational`.
    """

    __slots__ = ("rows", "cols", "_re", "_im", "_hash")

    def __init__(self, entries: Sequence[Sequence] | None = None):
        entries = [list(r) for r in (entries or [])]
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        if any(len(r) != cols for r in entries):
            raise ShapeError("ragged rows")
        zs = [[as_scalar(x) for x in r] for r in entries]
        re = tuple(tuple(z.re for z in r) for r in zs)
        im = tuple(tuple(z.im for z in r) for r in zs)
        self._set(rows, cols, re, im)

    def _set(self, rows, cols, re, im):
        self.rows = rows
        self.cols = cols
        self._re = re
        self._im = None if im is None or _all_zero(im) else im
        self._hash = None

    @classmethod
    def _from_parts(cls, rows: int, cols: int, re: _Rows, im: _Rows | None) -> "Matrix":
        m = object.__new__(cls)
        m._set(rows, cols, re, im)
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        re = tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n))
        return cls._from_parts(n, n, re, None)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls._from_parts(rows, cols, _zero_rows(rows, cols), None)

    @classmethod
    def from_flat(cls, rows: int, cols: int, data: Iterable) -> "Matrix":
        data = list(data)
        if len(data) != rows * cols:
            raise ShapeError(f"expected {rows * cols} entries, got {len(data)}")
        return cls([data[i * cols:(i + 1) * cols] for i in range(rows)])

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, *blocks: "Matrix") -> "Matrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[GaussianRational() for _ in range(m)] for _ in range(n)]
        i0 = j0 = 0
        for blk in blocks:
            for i in range(blk.rows):
                for j in range(blk.cols):
                    out[i0 + i][j0 + j] = blk[i, j]
            i0 += blk.rows
            j0 += blk.cols
        return cls._from_rows_checked(out, n, m)

    @classmethod
    def _from_rows_checked(cls, rows, n, m) -> "Matrix":
        if n == 0 or m == 0:
            return cls.zeros(n, m)
        return cls(rows)

    @classmethod
    def blocks(cls, grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a matrix from a 2-D grid of conforming blocks."""
        row_parts = [hstack(*r) for r in grid]
        return vstack(*row_parts)

    # -- basic accessors ----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_real(self) -> bool:
        return self._im is None

    def _imag(self) -> _Rows:
        return self._im if self._im is not None else _zero_rows(self.rows, self.cols)

    def __getitem__(self, ij) -> GaussianRational:
        i, j = ij
        im = self._im[i][j] if self._im is not None else _ZERO
        return GaussianRational._raw(self._re[i][j], im)

    @property
    def data(self) -> tuple[GaussianRational, ...]:
        """Row-major entries."""
        return tuple(self[i, j] for i in range(self.rows) for j in range(self.cols))

    def tolist(self) -> list[list[GaussianRational]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def row(self, i: int) -> list[GaussianRational]:
        return [self[i, j] for j in range(self.cols)]

    def column(self, j: int) -> "Matrix":
        return self.submatrix(range(self.rows), [j])

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "Matrix":
        rows, cols = list(rows), list(cols)
        re = tuple(tuple(self._re[i][j] for j in cols) for i in rows)
        im = None
        if self._im is not None:
            im = tuple(tuple(self._im[i][j] for j in cols) for i in rows)
        return Matrix._from_parts(len(rows), len(cols), re, im)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self._re == other._re
            and self._im == other._im
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._re, self._im))
        return self._hash

    def is_zero(self) -> bool:
        return self._im is None and _all_zero(self._re)

    def __repr__(self):
        body = ", ".join(
            "[" + ", ".join(str(self[i, j]) for j in range(self.cols)) + "]"
            for i in range(self.rows)
        )
        return f"Matrix([{body}])"

    # -- arithmetic ---------------------------------------------------------

    def _check_same_shape(self, other: "Matrix", what: str):
        if self.shape != other.shape:
            raise ShapeError(
                f"cannot {what} matrices of shapes {self.rows}x{self.cols} "
                f"and {other.rows}x{other.cols}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other, "add")
        re = _add(self._re, other._re)
        if self._im is None and other._im is None:
            im = None
        else:
            im = _add(self._imag(), other._imag())
        return Matrix._from_parts(self.rows, self.cols, re, im)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other, "subtract")
        re = _sub(self._re, other._re)
        if self._im is None and other._im is None:
            im = None
        else:
            im = _sub(self._imag(), other._imag())
        return Matrix._from_parts(self.rows, self.cols, re, im)

    def __neg__(self) -> "Matrix":
        re = tuple(tuple(-x for x in r) for r in self._re)
        im = None if self._im is None else tuple(tuple(-x for x in r) for r in self._im)
        return Matrix._from_parts(self.rows, self.cols, re, im)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply matrices of shapes {self.rows}x{self.cols} "
                f"and {other.rows}x{other.cols}"
            )
        k, m = self.cols, other.cols
        Ar, Br = self._re, other._re
        rr = _matmul(Ar, Br, k, m)
        if self._im is None and other._im is None:
            return Matrix._from_parts(self.rows, m, rr, None)
        if self._im is None:
            return Matrix._from_parts(self.rows, m, rr, _matmul(Ar, other._im, k, m))
        if other._im is None:
            return Matrix._from_parts(self.rows, m, rr, _matmul(self._im, Br, k, m))
        Ai, Bi = self._im, other._im
        re = _sub(rr, _matmul(Ai, Bi, k, m))
        im = _add(_matmul(Ar, Bi, k, m), _matmul(Ai, Br, k, m))
        return Matrix._from_parts(self.rows, m, re, im)

    def scale(self, lam) -> "Matrix":
        lam = as_scalar(lam)
        re = tuple(tuple(x * lam.re for x in r) for r in self._re)
        if not lam.im:
            im = None if self._im is None else tuple(tuple(x * lam.re for x in r) for r in self._im)
            return Matrix._from_parts(self.rows, self.cols, re, im)
        im = tuple(tuple(x * lam.im for x in r) for r in self._re)
        if self._im is not None:
            re = _sub(re, tuple(tuple(x * lam.im for x in r) for r in self._im))
            im = _add(im, tuple(tuple(x * lam.re for x in r) for r in self._im))
        return Matrix._from_parts(self.rows, self.cols, re, im)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return NotImplemented
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Matrix":
        return power(self, n)

    @property
    def T(self) -> "Matrix":
        re = tuple(zip(*self._re)) if self.rows else ()
        im = None if self._im is None else tuple(zip(*self._im))
        if self.rows == 0:
            re = _zero_rows(self.cols, 0)
        return Matrix._from_parts(self.cols, self.rows, re, im)

    @property
    def H(self) -> "Matrix":
        """Conjugate transpose."""
        t = self.T
        if t._im is None:
            return t
        return Matrix._from_parts(
            t.rows, t.cols, t._re, tuple(tuple(-x for x in r) for r in t._im)
        )

    def max_abs_entry(self) -> mpq:
        """Largest absolute value among real and imaginary parts."""
        vals = [abs(x) for r in self._re for x in r]
        if self._im is not None:
            vals += [abs(x) for r in self._im for x in r]
        return max(vals, default=_ZERO)

    def is_integral(self) -> bool:
        parts = [self._re] if self._im is None else [self._re, self._im]
        return all(x.denominator == 1 for p in parts for r in p for x in r)


def hstack(*mats: Matrix) -> Matrix:
    mats = [m for m in mats]
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ShapeError("hstack: row counts differ: " + ", ".join(f"{m.rows}x{m.cols}" for m in mats))
    cols = sum(m.cols for m in mats)
    re = tuple(sum((m._re[i] for m in mats), ()) for i in range(rows))
    if all(m._im is None for m in mats):
        im = None
    else:
        im = tuple(sum((m._imag()[i] for m in mats), ()) for i in range(rows))
    return Matrix._from_parts(rows, cols, re, im)


def vstack(*mats: Matrix) -> Matrix:
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise ShapeError("vstack: column counts differ: " + ", ".join(f"{m.rows}x{m.cols}" for m in mats))
    rows = sum(m.rows for m in mats)
    re = sum((m._re for m in mats), ())
    if all(m._im is None for m in mats):
        im = None
    else:
        im = sum((m._imag() for m in mats), ())
    return Matrix._from_parts(rows, cols, re, im)


def mat_arith(A: Matrix, B, op: str) -> Matrix:
    """Dispatch ``op`` in {'add', 'sub', 'mul', 'scale'}; for 'scale' B is the scalar."""
    if op == "add":
        return A + B
    if op == "sub":
        return A - B
    if op == "mul":
        return A @ B
    if op == "scale":
        return A.scale(B)
    raise ValueError(f"unknown matrix operation {op!r}")


def _require_square(A: Matrix, what: str):
    if not A.is_square:
        raise ShapeError(f"{what} requires a square matrix, got {A.rows}x{A.cols}")


def power(A: Matrix, n: int) -> Matrix:
    """``A**n`` by repeated squaring; ``A**0`` is the identity."""
    _require_square(A, "matrix power")
    if n < 0:
        raise ValueError("negative matrix power")
    result = Matrix.identity(A.rows)
    base = A
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


# -- elimination ------------------------------------------------------------


@dataclass(frozen=True)
class RREF:
    R: Matrix
    rank: int
    pivot_cols: tuple[int, ...]
    kernel_basis: Matrix
    colspace_basis: Matrix


def _eliminate(rows: list[list], ncols: int) -> list[int]:
    """In-place Gauss-Jordan to reduced row-echelon form; returns pivot columns.

    Pivot is the first nonzero entry at or below the current row, scanning
    columns left to right.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        inv = 1 / pr[c]
        if pr[c] != 1:
            rows[r] = pr = [x * inv for x in pr]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    rows[i] = [x - f * y for x, y in zip(ri, pr)]
        pivots.append(c)
        r += 1
    return pivots


def _work_rows(A: Matrix) -> tuple[list[list], bool]:
    if A._im is None:
        return [list(r) for r in A._re], True
    return [list(r) for r in A.tolist()], False


def _rows_to_matrix(rows: list[list], real: bool, nrows: int, ncols: int) -> Matrix:
    if real:
        return Matrix._from_parts(nrows, ncols, tuple(tuple(r) for r in rows), None)
    re = tuple(tuple(z.re for z in r) for r in rows)
    im = tuple(tuple(z.im for z in r) for r in rows)
    return Matrix._from_parts(nrows, ncols, re, im)


def rref(A: Matrix) -> RREF:
    """Reduced row-echelon form with rank, pivots, kernel and column-space bases.

    ``kernel_basis`` is ``cols x (cols - rank)`` and ``colspace_basis`` is
    ``rows x rank`` (the pivot columns of ``A``); either may have zero columns.
    """
    rows, real = _work_rows(A)
    pivots = _eliminate(rows, A.cols)
    R = _rows_to_matrix(rows, real, A.rows, A.cols)
    rank = len(pivots)
    free = [j for j in range(A.cols) if j not in pivots]
    kernel_cols = []
    for f in free:
        v = [_ZERO] * A.cols if real else [GaussianRational() for _ in range(A.cols)]
        v[f] = _ONE if real else GaussianRational(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        kernel_cols.append(v)
    if kernel_cols:
        K = _rows_to_matrix(kernel_cols, real, len(free), A.cols).T
    else:
        K = Matrix.zeros(A.cols, 0)
    C = A.submatrix(range(A.rows), pivots)
    return RREF(R, rank, tuple(pivots), K, C)


def rank(A: Matrix) -> int:
    rows, _ = _work_rows(A)
    return len(_eliminate(rows, A.cols))


def inverse(A: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan on ``[A | I]``."""
    _require_square(A, "inverse")
    n = A.rows
    aug = hstack(A, Matrix.identity(n))
    rows, real = _work_rows(aug)
    pivots = _eliminate(rows, n)
    if len(pivots) != n:
        raise SingularMatrixError("matrix not invertible")
    out = _rows_to_matrix(rows, real, n, 2 * n)
    return out.submatrix(range(n), range(n, 2 * n))


def solve_left(B: Matrix, P: Matrix) -> Matrix:
    """Unique ``L`` with ``B @ L == P`` for full-column-rank ``B``.

    Raises :class:`SingularMatrixError` if no exact solution exists.
    """
    if B.rows != P.rows:
        raise ShapeError(f"shapes {B.rows}x{B.cols} and {P.rows}x{P.cols} do not conform")
    aug = hstack(B, P)
    rows, real = _work_rows(aug)
    pivots = _eliminate(rows, B.cols)
    if len(pivots) != B.cols:
        raise SingularMatrixError("basis is not of full column rank")
    out = _rows_to_matrix(rows, real, B.rows, B.cols + P.cols)
    tail = out.submatrix(range(B.cols, B.rows), range(B.cols, B.cols + P.cols))
    if not tail.is_zero():
        raise SingularMatrixError("right-hand side not in the column space")
    return out.submatrix(range(B.cols), range(B.cols, B.cols + P.cols))
