"""
Drazin inverses with exact arithmetic
=====================================

Index, Drazin inverse and spectral idempotent of a few small matrices.
Everything is an exact rational (or Gaussian rational) so equality checks
are plain ``==``.
"""

from gdrazin import GenSpec, Matrix, drazin, gen_drazin_matrix, index, verify_drazin
from gdrazin.io import format_scalar


def show(name, M):
    print(f"{name} =")
    for i in range(M.rows):
        print("   ", "  ".join(f"{format_scalar(M[i, j]):>6}" for j in range(M.cols)))


# an invertible matrix: index 0, a^D is the ordinary inverse
a = Matrix([[2, 1], [1, 1]])
t = drazin(a)
show("a^D", t.ad)
print("index", t.index)

# the subdiagonal shift is nilpotent: a^D = 0, a^pi = I
shift = Matrix([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
print("\nshift index:", index(shift))
show("shift^pi", drazin(shift).api)

# a diagonal matrix mixes both behaviours
d = Matrix.diag([3, 0, "1/2"])
show("\ndiag^D", drazin(d).ad)

# a random matrix with a 3-dimensional core and a nilpotent part of size 3
a, S = gen_drazin_matrix(GenSpec(6, 3, seed=5))
t = drazin(a)
show("\na", a)
show("a^D", t.ad)
print("index:", t.index, " axioms hold:", verify_drazin(a, t.ad))

# complex entries work the same way
z = Matrix([[complex(1, 1), 1], [0, 0]])
show("\nz^D", drazin(z).ad)
