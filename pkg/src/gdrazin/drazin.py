"""Index, Drazin inverse and spectral idempotent of a square matrix.

The Drazin inverse is built from the core-nilpotent splitting: with ``k`` the
index of ``A``, the columns of ``A**k`` span the core part and its kernel the
nilpotent part.  In that basis ``A = diag(C, N)`` with ``C`` invertible, and
``A^D = S diag(C^-1, 0) S^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact import Matrix, ShapeError, hstack, inverse, rank, rref

__all__ = [
    "DrazinTriple",
    "index",
    "drazin",
    "verify_drazin",
    "spectral_idempotent",
    "is_nilpotent",
]


@dataclass(frozen=True)
class DrazinTriple:
    """Drazin inverse ``ad``, index, and spectral idempotent ``api = I - A ad``."""

    ad: Matrix
    index: int
    api: Matrix


def _require_square(A: Matrix):
    if not A.is_square:
        raise ShapeError(f"expected a square matrix, got {A.rows}x{A.cols}")


def _rank_stable_power(A: Matrix) -> tuple[int, Matrix]:
    n = A.rows
    k, Ak, r = 0, Matrix.identity(n), n
    while True:
        nxt = Ak @ A
        rn = rank(nxt)
        if rn == r:
            return k, Ak
        k, Ak, r = k + 1, nxt, rn


def index(A: Matrix) -> int:
    """Smallest ``k >= 0`` with ``rank(A**(k+1)) == rank(A**k)``."""
    _require_square(A)
    return _rank_stable_power(A)[0]


@lru_cache(maxsize=4096)
def drazin(A: Matrix) -> DrazinTriple:
    _require_square(A)
    n = A.rows
    k, Ak = _rank_stable_power(A)
    if k == 0:
        ad = inverse(A)
    else:
        red = rref(Ak)
        r = red.rank
        if r == 0:
            ad = Matrix.zeros(n)
        else:
            S = hstack(red.colspace_basis, red.kernel_basis)
            Sinv = inverse(S)
            left = S.submatrix(range(n), range(r))
            right = Sinv.submatrix(range(r), range(n))
            core = right @ A @ left
            ad = left @ inverse(core) @ right
    return DrazinTriple(ad, k, Matrix.identity(n) - A @ ad)


def spectral_idempotent(A: Matrix) -> Matrix:
    return drazin(A).api


def is_nilpotent(A: Matrix) -> bool:
    _require_square(A)
    return (A ** A.rows).is_zero()


def verify_drazin(A: Matrix, X: Matrix) -> bool:
    """Check the three defining equations directly.

    ``XAX = X``, ``AX = XA`` and ``(A - A^2 X)^n = 0`` with ``n`` the
    dimension, which bounds the nilpotency order of any ``n x n`` matrix.
    """
    _require_square(A)
    if A.shape != X.shape:
        raise ShapeError(
            f"shape mismatch: {A.rows}x{A.cols} and {X.rows}x{X.cols}"
        )
    AX = A @ X
    if X @ AX != X:
        return False
    if AX != X @ A:
        return False
    return ((A - A @ AX) ** A.rows).is_zero()
