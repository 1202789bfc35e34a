"""
Drazin inverse of a sum
=======================

For each hypothesis there is a closed formula for (a+b)^D in terms of
a^D, b^D and the spectral idempotents.  Here we generate pairs that
satisfy a hypothesis, evaluate the formula and compare against computing
(a+b)^D directly.
"""

from gdrazin import Condition, GenSpec, Matrix, check_condition, drazin, full_report, gen_pair
from gdrazin.formulas import evaluate

# the two small 3x3 pairs shipped as fixtures
a1 = Matrix([[0, 0, 0], [0, 0, 0], [0, 1, 0]])
b1 = Matrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
shift = Matrix([[0, 0, 0], [1, 0, 0], [0, 1, 0]])

print("pair 1:  LIU", check_condition(a1, b1, "LIU"), " THM21", check_condition(a1, b1, "THM21"))
print("pair 2:  LIU", check_condition(shift, shift, "LIU"), " THM21", check_condition(shift, shift, "THM21"))
print("pair 2 (a+b)^D by formula is zero:", evaluate(shift, shift, "THM21").is_zero())

for cond in (Condition.THM21, Condition.THM23, Condition.COR23):
    a, b = gen_pair(GenSpec(6, 3, seed=11, family=cond))
    val = evaluate(a, b, cond)
    print(f"\n{cond.value}: formula == direct Drazin inverse: {val == drazin(a + b).ad}")

# every condition at once, with the oracle attached
a, b = gen_pair(GenSpec(5, 2, seed=3, family="THM22"))
print()
for rep in full_report(a, b):
    status = "n/a" if rep.formula_result is None else ("match" if rep.exact_match else "MISMATCH")
    print(f"{rep.condition.value:6} holds={rep.condition_holds!s:5} {status}")
