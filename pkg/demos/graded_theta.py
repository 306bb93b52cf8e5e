"""The graded map of Theta into the Kohno Lie algebra.

Computes a few images, checks them against the Lambda/gamma formulas,
tabulates injectivity ranks, and reproduces the sample values for n = 3.
The third printed sample value carries coefficients (-2, +2); the
computation below gives (-4, +4), which the group-level leading terms
confirm independently.
"""

from braidlab.gradedlie import (
    admissible_bracket_check,
    appendix_check,
    injectivity_divisors,
    injectivity_rank,
    kohno_dim,
    kohno_normalize,
    lambda_gamma_bracket,
    left_normed_x,
    theta_graded,
)
from braidlab.lie import witt_number

print("[B12, B13 + B23] =", kohno_normalize("[B12, B13 + B23]", 3))
print("kohno_dim(4, d), d = 1..5:", [kohno_dim(4, d) for d in range(1, 6)])

x = left_normed_x(3, (1, 2, 2, 3))
print("Theta_3", x, "=", theta_graded(3, x))
print("equals [[[Lambda,g3],g2],g2]:", theta_graded(3, x) == lambda_gamma_bracket(3, [3, 2, 2]))
print("admissible (2,3,3) at n=4:", admissible_bracket_check(4, [2, 3, 3]))

print("\n n  d  W(n,d)  rank  unit divisors")
for n in range(1, 5):
    for d in range(1, 6):
        dim, r = injectivity_rank(n, d)
        units = all(v == 1 for v in injectivity_divisors(n, d))
        print(f"{n:2d} {d:2d} {dim:6d} {r:5d}  {units}")

rep = appendix_check()
for rec in rep.records:
    print(rec["check"], "->", "holds" if rec["pass"] else "does not hold")
print("computed third value (word -> coefficient):", rep.info["item 3 computed"])
