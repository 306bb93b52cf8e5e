"""The simplicial map from F[S^1] to the pure braid groups.

x_q(n) is built from x_1(1) by degeneracies; Theta does the same starting
from A[1,2].  The commutator [x_1, x_2] has trivial faces, and so does its
image, which is the braid-level cycle behind the homotopy of the 2-sphere.
"""

import random

from braidlab.braid import random_pure_braid
from braidlab.simplicial import (
    ap_face,
    fs1_face,
    fs1_generator,
    is_moore_cycle,
    moore_project,
    psi_check,
    theta,
    theta_generator,
    theta_morphism_check,
)
from braidlab.words import Word, commutator

for n in (1, 2, 3):
    print(f"degree {n}:", "; ".join(f"Theta(x{q}) = {theta_generator(q, n)}" for q in range(1, n + 1)))

c = commutator(Word.gen(1), Word.gen(2))
tc = theta(2, c)
print("[x1,x2] faces:", [str(fs1_face(2, t, c)) for t in range(3)])
print("Theta[x1,x2] =", tc)
print("its faces are trivial:", is_moore_cycle("AP", 2, tc))

rep = theta_morphism_check(4)
print("Theta commutes with faces and degeneracies up to degree 4:", rep.ok, f"({len(rep)} checks)")

# any pure braid can be pushed into the Moore chains
g = random_pure_braid(random.Random(2), 4, 6)
mc = moore_project(3, g)
print("projected", g, "->", mc.element)
print("faces d_1..d_3 of the projection:", [str(ap_face(t, mc.element)) for t in (1, 2, 3)])

print("loop group of AP matches F[Delta[1]] up to degree 3:", psi_check(3).ok)
