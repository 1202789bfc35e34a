"""
Random pairs and reversed products
==================================

Generators are seeded and deterministic.  Transposing a pair swaps the
order of every product, which turns one family of hypotheses into its
mirror image; the mirrored formulas are evaluated through that transpose.
"""

from gdrazin import Condition, GenSpec, check_condition, drazin, gen_pair, sum_dual, sum_thm21
from gdrazin.generate import entry_limit, gen_pair_info

spec = GenSpec(6, 3, seed=42, family=Condition.THM21)
print("same seed, same pair:", gen_pair(spec) == gen_pair(spec))

g = gen_pair_info(spec)
print("sub-family:", g.subfamily)
print("largest entry:", max(g.a.max_abs_entry(), g.b.max_abs_entry()), "limit:", entry_limit(6, 3))

# how often is a+b neither invertible nor nilpotent?
hits = 0
for seed in range(50):
    a, b = gen_pair(GenSpec(5, 2, seed, Condition.THM23))
    t = drazin(a + b)
    hits += t.index > 0 and not t.ad.is_zero()
print(f"non-trivial sums: {hits}/50")

a, b = g.a, g.b
at, bt = a.T, b.T
print("\ntransposed pair satisfies COR26:", check_condition(at, bt, "COR26"))
val, rep = sum_dual(at, bt, "COR26")
print("dual formula matches oracle:", rep.exact_match)
print("and is the transpose of the THM21 value:", val == sum_thm21(a, b)[0].T)
