"""
Idempotent blocks and corner inverses
=====================================

An idempotent p splits any matrix into four blocks
p x p, p x (1-p), (1-p) x p, (1-p) x (1-p).  A block-lower-triangular
matrix has a Drazin inverse built from the Drazin inverses of its two
diagonal corners.
"""

from gdrazin import Matrix, corner_drazin, decompose, drazin, gen_triangular
from gdrazin.io import matrix_to_obj
from gdrazin.pierce import lemma11_triangular_drazin

a_blk, b_blk, c_blk, p = gen_triangular(6, 3, seed=2)
x = a_blk + b_blk + c_blk

blk = decompose(x, p)
print("upper-right block is zero:", blk.a12.is_zero())
print("blocks add back up:", blk.recompose() == x)

# the corner inverse of a_blk lives inside p M p and differs from the
# Drazin inverse of a_blk in the full algebra only by where the unit sits
ca = corner_drazin(a_blk, p)
print("corner index of a_blk:", ca.index)
print("corner unit minus a a^D:", ca.api == p - a_blk @ ca.ad)

y = lemma11_triangular_drazin(a_blk, b_blk, c_blk, p)
print("triangular formula equals x^D:", y == drazin(x).ad)

# series are truncated by nilpotency indices, so extra terms add exactly zero
print("one more term changes nothing:", lemma11_triangular_drazin(a_blk, b_blk, c_blk, p, extra_terms=1) == y)

# a smaller check by hand: p = diag(1, 0), x = [[2, 0], [1, 0]]
p2 = Matrix.diag([1, 0])
x2 = Matrix([[2, 0], [1, 0]])
b2 = decompose(x2, p2)
print("\nhand example x^D =", matrix_to_obj(drazin(x2).ad)["data"])
print("via blocks       =", matrix_to_obj(lemma11_triangular_drazin(b2.a11, b2.a22, b2.a21, p2))["data"])
