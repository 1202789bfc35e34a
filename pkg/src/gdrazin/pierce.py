"""Corner decomposition relative to an idempotent and corner-algebra inverses.

All corner elements stay full size (``n x n`` with support inside the
corner), so that identities such as ``a = a11 + a12 + a21 + a22`` can be
written literally.  Only :func:`corner_drazin` compresses, internally, to
coordinates on ``range(p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .drazin import DrazinTriple, drazin
from .exact import Matrix, ShapeError, rref, solve_left

__all__ = [
    "PierceBlocks",
    "CornerError",
    "NotIdempotentError",
    "decompose",
    "corner_drazin",
    "corner_index",
    "in_corner",
    "lemma11_triangular_drazin",
]


class NotIdempotentError(ValueError):
    pass


class CornerError(ValueError):
    pass


@dataclass(frozen=True)
class PierceBlocks:
    p: Matrix
    a11: Matrix
    a12: Matrix
    a21: Matrix
    a22: Matrix

    def recompose(self) -> Matrix:
        return self.a11 + self.a12 + self.a21 + self.a22


def _check_idempotent(p: Matrix):
    if not p.is_square:
        raise ShapeError(f"idempotent must be square, got {p.rows}x{p.cols}")
    if p @ p != p:
        raise NotIdempotentError("p is not idempotent")


def decompose(a: Matrix, p: Matrix) -> PierceBlocks:
    _check_idempotent(p)
    if a.shape != p.shape:
        raise ShapeError(f"shape mismatch: {a.rows}x{a.cols} and {p.rows}x{p.cols}")
    q = Matrix.identity(p.rows) - p
    pa, qa = p @ a, q @ a
    return PierceBlocks(p, pa @ p, pa @ q, qa @ p, qa @ q)


def in_corner(x: Matrix, p: Matrix) -> bool:
    return p @ x @ p == x


@lru_cache(maxsize=1024)
def _coordinates(p: Matrix) -> tuple[Matrix, Matrix]:
    """Basis ``B`` of range(p) and ``L`` with ``B @ L == p`` (so ``L @ B == I``)."""
    B = rref(p).colspace_basis
    return B, solve_left(B, p)


def _compress(x: Matrix, p: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    B, L = _coordinates(p)
    return L @ x @ B, B, L


def corner_drazin(x: Matrix, p: Matrix) -> DrazinTriple:
    """Drazin inverse of ``x`` inside the corner algebra ``p A p`` (unit ``p``).

    The returned triple's ``api`` is the corner spectral idempotent
    ``p - x y``, not ``I - x y``.
    """
    _check_idempotent(p)
    if x.shape != p.shape:
        raise ShapeError(f"shape mismatch: {x.rows}x{x.cols} and {p.rows}x{p.cols}")
    if not in_corner(x, p):
        raise CornerError("element not in corner algebra")
    if p.is_zero():
        return DrazinTriple(p, 0, p)
    xc, B, L = _compress(x, p)
    t = drazin(xc)
    y = B @ t.ad @ L
    return DrazinTriple(y, t.index, p - x @ y)


def corner_index(x: Matrix, p: Matrix) -> int:
    return corner_drazin(x, p).index


def _geometric_terms(base: Matrix, count: int) -> list[Matrix]:
    """``[base**0, ..., base**(count-1)]`` with ``base**0`` the identity."""
    out = []
    cur = Matrix.identity(base.rows)
    for _ in range(count):
        out.append(cur)
        cur = cur @ base
    return out


def lemma11_triangular_drazin(
    a_blk: Matrix,
    b_blk: Matrix,
    c_blk: Matrix,
    p: Matrix,
    *,
    extra_terms: int = 0,
) -> Matrix:
    """Drazin inverse of the block lower-triangular ``x = a_blk + c_blk + b_blk``.

    ``a_blk`` lives in ``pAp``, ``b_blk`` in ``qAq`` (``q = I - p``) and
    ``c_blk = q c_blk p``.  The result is ``a^D + b^D + u`` with

        u = sum_n (b^D)^(n+2) c a^n a^pi + sum_n b^pi b^n c (a^D)^(n+2) - b^D c a^D

    where inverses and idempotents are taken in the respective corners.  The
    first sum stops at the corner index of ``a_blk`` (``a^n a^pi`` vanishes
    from there on), the second at the corner index of ``b_blk``.
    ``extra_terms`` appends that many further terms to each sum; they are
    exactly zero.
    """
    _check_idempotent(p)
    n = p.rows
    q = Matrix.identity(n) - p
    if not in_corner(a_blk, p):
        raise CornerError("a_blk is not in the corner p A p")
    if not in_corner(b_blk, q):
        raise CornerError("b_blk is not in the corner (1-p) A (1-p)")
    if q @ c_blk @ p != c_blk:
        raise CornerError("c_blk is not of the form (1-p) c p")
    A = corner_drazin(a_blk, p)
    B = corner_drazin(b_blk, q)
    u = -(B.ad @ c_blk @ A.ad)
    ka = A.index + extra_terms
    kb = B.index + extra_terms
    bd2 = B.ad @ B.ad
    for m, a_pow in enumerate(_geometric_terms(a_blk, ka)):
        u = u + (bd2 @ (B.ad ** m)) @ c_blk @ a_pow @ A.api
    ad2 = A.ad @ A.ad
    for m, b_pow in enumerate(_geometric_terms(b_blk, kb)):
        u = u + B.api @ b_pow @ c_blk @ (ad2 @ (A.ad ** m))
    return A.ad + B.ad + u
