"""Seeded generators of matrix pairs that satisfy a chosen hypothesis.

Pairs are built in block coordinates relative to ``p = a a^D`` and moved to
the standard basis by an integer unimodular similarity ``S`` (so ``S^-1`` is
integral too and all data stays integral).  In those coordinates

    a = diag(A1, N2),      b = [[B1, 0], [B3, B4]]

with ``A1`` invertible and ``N2`` nilpotent.  Each family then only has to
pick the ``(N2, B4)`` pair and ``B1`` correctly; see :func:`gen_pair` for the
constructions.  Every emitted pair is re-checked with
:func:`~gdrazin.formulas.check_condition`.

Entries of generated matrices never exceed :func:`entry_limit`; samples
that would are discarded and redrawn.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact import Matrix, inverse, rank
from .formulas import Condition, check_condition

__all__ = [
    "GenSpec",
    "GeneratedPair",
    "GenerationError",
    "entry_limit",
    "gen_drazin_matrix",
    "gen_pair",
    "gen_pair_info",
    "gen_triangular",
    "NILPOTENT_FAMILIES",
]

MAX_ATTEMPTS = 50

# Families whose hypothesis makes ``a`` nilpotent; they need r == 0.
NILPOTENT_FAMILIES = frozenset({Condition.COR22, Condition.LEM12})


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class GenSpec:
    n: int
    r: int
    seed: int
    family: Condition = Condition.THM21
    entry_bound: int = 3
    complex_entries: bool = False

    def __post_init__(self):
        object.__setattr__(self, "family", Condition(self.family))
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0 <= self.r <= self.n:
            raise ValueError(f"core rank r={self.r} must lie in [0, {self.n}]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.entry_bound < 1:
            raise ValueError("entry_bound must be positive")
        if self.family in NILPOTENT_FAMILIES and self.r != 0:
            raise ValueError(f"family {self.family.value} needs a nilpotent a, i.e. r = 0")


@dataclass(frozen=True)
class GeneratedPair:
    a: Matrix
    b: Matrix
    subfamily: str
    spec: GenSpec


def entry_limit(n: int, entry_bound: int) -> int:
    """Upper bound on the absolute value of any generated entry."""
    return entry_bound ** 3 * n ** 2 * 4 ** n


# -- random building blocks -------------------------------------------------


def _ints(rng, lo, hi, size=None):
    return rng.integers(lo, hi + 1, size=size).tolist()


def _rand(rng, r: int, c: int, eb: int) -> Matrix:
    if r == 0 or c == 0:
        return Matrix.zeros(r, c)
    return Matrix(_ints(rng, -eb, eb, (r, c)))


def _rand_invertible(rng, m: int, eb: int) -> Matrix:
    for _ in range(MAX_ATTEMPTS):
        X = _rand(rng, m, m, eb)
        if rank(X) == m:
            return X
    raise GenerationError("could not sample an invertible block")


def _strict_upper(rng, m: int, eb: int) -> Matrix:
    X = _rand(rng, m, m, eb)
    return Matrix([[X[i, j] if j > i else 0 for j in range(m)] for i in range(m)])


def _unimodular(rng, m: int) -> tuple[Matrix, Matrix]:
    """Random ``S = P L U`` with unit triangular ``L, U`` (entries in {-1, 0, 1})."""
    if m == 0:
        return Matrix.zeros(0), Matrix.zeros(0)
    L = [[1 if i == j else (_ints(rng, -1, 1) if j < i else 0) for j in range(m)] for i in range(m)]
    U = [[1 if i == j else (_ints(rng, -1, 1) if j > i else 0) for j in range(m)] for i in range(m)]
    perm = rng.permutation(m).tolist()
    P = [[1 if perm[i] == j else 0 for j in range(m)] for i in range(m)]
    S = Matrix(P) @ Matrix(L) @ Matrix(U)
    return S, inverse(S)


def _poly(rng, X: Matrix, eb: int, *, constant: bool) -> Matrix:
    """Random integer polynomial in ``X`` of degree <= 2."""
    c0, c1, c2 = _ints(rng, -eb, eb, 3)
    out = X.scale(c1) + (X @ X).scale(c2)
    if constant:
        out = out + Matrix.identity(X.rows).scale(c0)
    return out


def _split_size(rng, m: int) -> int:
    """Size of the invertible part; interior splits are favoured."""
    if m <= 1:
        return _ints(rng, 0, m)
    u = rng.random()
    if u < 0.15:
        return 0
    if u < 0.30:
        return m
    return _ints(rng, 1, m - 1)


def _nonzero(rng, eb: int) -> int:
    v = _ints(rng, 1, eb)
    return v if rng.random() < 0.5 else -v


def _conj(S: Matrix, Sinv: Matrix, X: Matrix) -> Matrix:
    return S @ X @ Sinv


def _annihilating_split(rng, m: int, eb: int) -> tuple[Matrix, Matrix, str]:
    """Nilpotent ``N`` and ``B`` with ``N B = B^pi B N B^pi``.

    In a basis adapted to ``B = diag(G, M)`` (``G`` invertible, ``M``
    nilpotent) this forces ``N = [[0, Q], [0, U]]`` with ``Q M = 0`` and
    ``U M = M U``.  Here ``M = q(U)`` with ``U`` strictly upper triangular
    and ``q(0) = 0``, so ``M`` has a zero last row, and ``Q`` is supported
    on its last column.
    """
    if m == 0:
        return Matrix.zeros(0), Matrix.zeros(0), "empty"
    m1 = _split_size(rng, m)
    m2 = m - m1
    U = _strict_upper(rng, m2, eb)
    M = _poly(rng, U, eb, constant=False)
    G = _rand_invertible(rng, m1, eb)
    Q = Matrix([[(_ints(rng, -eb, eb) if j == m2 - 1 else 0) for j in range(m2)] for _ in range(m1)]) if m1 and m2 else Matrix.zeros(m1, m2)
    N = Matrix.blocks([[Matrix.zeros(m1), Q], [Matrix.zeros(m2, m1), U]])
    B = Matrix.block_diag(G, M)
    T, Tinv = _unimodular(rng, m)
    sub = "nilpotent-commuting" if m1 == 0 else ("invertible-annihilating" if m2 == 0 else "split")
    return _conj(T, Tinv, N), _conj(T, Tinv, B), sub


def _commuting_split(rng, m: int, eb: int) -> tuple[Matrix, Matrix, str]:
    """Nilpotent ``N`` and ``B`` with ``N B = B N``.

    ``N = diag(N1, N2)`` and ``B = diag(l I + q1(N1), q2(N2))`` with
    ``l != 0`` and ``q1(0) = q2(0) = 0``, then conjugated.
    """
    if m == 0:
        return Matrix.zeros(0), Matrix.zeros(0), "empty"
    m1 = _split_size(rng, m)
    m2 = m - m1
    N1 = _strict_upper(rng, m1, eb)
    N2 = _strict_upper(rng, m2, eb)
    G = Matrix.identity(m1).scale(_nonzero(rng, eb)) + _poly(rng, N1, eb, constant=False)
    M = _poly(rng, N2, eb, constant=False)
    T, Tinv = _unimodular(rng, m)
    sub = "commuting-nilpotent" if m1 == 0 else ("commuting-invertible" if m2 == 0 else "commuting-split")
    N = Matrix.block_diag(N1, N2)
    B = Matrix.block_diag(G, M)
    return _conj(T, Tinv, N), _conj(T, Tinv, B), sub


def _annihilator_pair(rng, m: int, eb: int) -> tuple[Matrix, Matrix, str]:
    """Nilpotent ``N`` and ``B`` with ``N B = 0``: ``N = [[0, X], [0, 0]]``, ``B = [[Y, Z], [0, 0]]``."""
    if m == 0:
        return Matrix.zeros(0), Matrix.zeros(0), "empty"
    m1 = _split_size(rng, m)
    m2 = m - m1
    N = Matrix.blocks([[Matrix.zeros(m1), _rand(rng, m1, m2, eb)], [Matrix.zeros(m2, m1), Matrix.zeros(m2)]])
    B = Matrix.blocks([[_rand(rng, m1, m1, eb), _rand(rng, m1, m2, eb)], [Matrix.zeros(m2, m1), Matrix.zeros(m2)]])
    T, Tinv = _unimodular(rng, m)
    return _conj(T, Tinv, N), _conj(T, Tinv, B), "annihilator"


def _gaussian_twist(rng, n: int) -> tuple[Matrix, Matrix]:
    """Unimodular transvection over Z[i] with a non-real multiplier."""
    i, j = rng.choice(n, size=2, replace=False).tolist() if n > 1 else (0, 0)
    lam = complex(_ints(rng, -1, 1), _nonzero(rng, 1))
    if n == 1:
        return Matrix([[1]]), Matrix([[1]])
    E = [[0] * n for _ in range(n)]
    E[i][j] = 1
    W = Matrix.identity(n) + Matrix(E).scale(lam)
    Winv = Matrix.identity(n) - Matrix(E).scale(lam)
    return W, Winv


# -- public generators ------------------------------------------------------


def _rng(spec: GenSpec, stream: int):
    return np.random.default_rng(np.random.SeedSequence(spec.seed, spawn_key=(stream,)))


def _drazin_parts(rng, spec: GenSpec):
    n, r, eb = spec.n, spec.r, spec.entry_bound
    A1 = _rand_invertible(rng, r, eb)
    S, Sinv = _unimodular(rng, n)
    return A1, S, Sinv


def gen_drazin_matrix(spec: GenSpec) -> tuple[Matrix, Matrix]:
    """``a = S diag(A1, N2) S^-1`` with ``A1`` invertible and ``N2`` strictly upper.

    Returns ``(a, S)``; ``a a^D = S diag(I_r, 0) S^-1`` and the index of
    ``a`` equals the nilpotency order of ``N2`` (0 when ``r = n``).
    """
    limit = entry_limit(spec.n, spec.entry_bound)
    for attempt in range(MAX_ATTEMPTS):
        rng = _rng(spec, attempt)
        A1, S, Sinv = _drazin_parts(rng, spec)
        N2 = _strict_upper(rng, spec.n - spec.r, spec.entry_bound)
        if spec.complex_entries:
            W, Winv = _gaussian_twist(rng, spec.n)
            S, Sinv = W @ S, Sinv @ Winv
        a = _conj(S, Sinv, Matrix.block_diag(A1, N2))
        if a.max_abs_entry() <= limit:
            return a, S
    raise GenerationError(f"generation failed after max attempts (n={spec.n}, r={spec.r})")


def _build(rng, spec: GenSpec) -> tuple[Matrix, Matrix, str]:
    fam, n, r, eb = spec.family, spec.n, spec.r, spec.entry_bound
    m = n - r
    if fam is Condition.LEM12:
        a, b, sub = _annihilating_split(rng, n, eb)
        return a, b, sub
    if fam is Condition.COR22:
        return _commuting_split(rng, n, eb)
    A1, S, Sinv = _drazin_parts(rng, spec)
    if fam is Condition.LEM13:
        N2 = _strict_upper(rng, m, eb)
        M = _conj(S, Sinv, Matrix.block_diag(A1, N2))
        return _poly(rng, M, eb, constant=False), _poly(rng, M, eb, constant=False), "polynomials"
    if fam is Condition.COR23:
        N2 = _strict_upper(rng, m, eb)
        B4 = Matrix.zeros(m)
        sub = "right-annihilated"
    elif fam in (Condition.THM21, Condition.THM22, Condition.COR21, Condition.COR26):
        N2, B4, sub = _annihilating_split(rng, m, eb)
    elif fam is Condition.LIU:
        N2, B4, sub = _annihilator_pair(rng, m, eb)
    else:  # THM23, COR24, COR25, COR27
        N2, B4, sub = _commuting_split(rng, m, eb)
    if fam in (Condition.COR21, Condition.COR24):
        B1 = Matrix.zeros(r)
    elif fam in (Condition.THM22, Condition.COR25):
        B1 = _poly(rng, A1, eb, constant=True)
    else:
        B1 = _rand(rng, r, r, eb)
    B3 = _rand(rng, m, r, eb)
    a_blk = Matrix.block_diag(A1, N2)
    b_blk = Matrix.blocks([[B1, Matrix.zeros(r, m)], [B3, B4]])
    a, b = _conj(S, Sinv, a_blk), _conj(S, Sinv, b_blk)
    if fam in (Condition.COR26, Condition.COR27):
        a, b = a.T, b.T
    return a, b, sub


def gen_pair_info(spec: GenSpec) -> GeneratedPair:
    """Like :func:`gen_pair` but also names the structural sub-family used."""
    limit = entry_limit(spec.n, spec.entry_bound)
    for attempt in range(MAX_ATTEMPTS):
        rng = _rng(spec, attempt)
        a, b, sub = _build(rng, spec)
        if spec.complex_entries:
            W, Winv = _gaussian_twist(rng, spec.n)
            a, b = _conj(W, Winv, a), _conj(W, Winv, b)
        if max(a.max_abs_entry(), b.max_abs_entry()) > limit:
            continue
        if check_condition(a, b, spec.family):
            return GeneratedPair(a, b, sub, spec)
    raise GenerationError(f"generation failed after max attempts: family {spec.family.value}")


def gen_pair(spec: GenSpec) -> tuple[Matrix, Matrix]:
    """A certified pair ``(a, b)`` for ``spec.family``.

    Block constructions (``B2 = 0`` always):

    * THM21, THM22, COR21, LEM12: ``N2, B4`` from an annihilating split
      (``N2 B4 = B4^pi B4 N2 B4^pi``); THM22 takes ``B1`` a polynomial in
      ``A1``, COR21 takes ``B1 = 0``.  LEM12 uses the split on the whole
      space, so ``a`` is nilpotent.
    * THM23, COR24, COR25, COR22: commuting ``N2, B4``; COR25 takes ``B1``
      polynomial in ``A1``, COR24 ``B1 = 0``; COR22 works on the whole space.
    * COR23: ``B4 = 0``.
    * LIU: ``N2 B4 = 0``.
    * LEM13: ``a, b`` polynomials in one random matrix.
    * COR26, COR27: transposes of THM21, THM23 pairs.
    """
    g = gen_pair_info(spec)
    return g.a, g.b


def gen_triangular(n: int, r: int, seed: int, entry_bound: int = 3) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """Random ``(a_blk, b_blk, c_blk, p)`` for the block lower-triangular inverse.

    ``p = S diag(I_r, 0) S^-1``; the diagonal blocks are general singular
    or invertible matrices (a random mix of core and nilpotent parts).
    """
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(n, r)))
    m = n - r
    S, Sinv = _unimodular(rng, n)

    def mixed(k):
        if k == 0:
            return Matrix.zeros(0)
        k1 = _split_size(rng, k)
        T, Tinv = _unimodular(rng, k)
        X = Matrix.block_diag(_rand_invertible(rng, k1, entry_bound), _strict_upper(rng, k - k1, entry_bound))
        return _conj(T, Tinv, X)

    X, Y = mixed(r), mixed(m)
    C = _rand(rng, m, r, entry_bound)
    p = _conj(S, Sinv, Matrix.block_diag(Matrix.identity(r), Matrix.zeros(m)))
    a_blk = _conj(S, Sinv, Matrix.block_diag(X, Matrix.zeros(m)))
    b_blk = _conj(S, Sinv, Matrix.block_diag(Matrix.zeros(r), Y))
    c_blk = _conj(S, Sinv, Matrix.blocks([[Matrix.zeros(r), Matrix.zeros(r, m)], [C, Matrix.zeros(m)]]))
    return a_blk, b_blk, c_blk, p
