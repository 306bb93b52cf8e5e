"""Braids acting on a free group.

Walks through Artin's action, the pure braid generators and their
relations, and the way conjugation by a braid on n+1 strands reproduces
the action on F_n.
"""

from braidlab.braid import (
    BraidWord,
    artin_action,
    braids_equal,
    conjugation_formula_check,
    parse_braid,
    verify_pn_relations,
)
from braidlab.words import parse_word

# sigma_1 swaps the first two punctures
f = artin_action(parse_braid("s1", 3))
print("sigma_1:", ", ".join(f"x{i} -> {w}" for i, w in enumerate(f.images, 1)))

# the braid relation is decided by comparing actions
print("s1 s2 s1 == s2 s1 s2:", braids_equal(parse_braid("s1 s2 s1", 3), parse_braid("s2 s1 s2", 3)))

# A[1,3] drags strand 3 around strand 1
a13 = BraidWord.agen(1, 3, 3)
print("A[1,3](x2) =", artin_action(a13)(parse_word("x2")))

# Artin's presentation of P_n.  The third family has a free index in
# print; read with s = k every instance holds, the literal reading never does.
for n in (4, 5, 6):
    rep = verify_pn_relations(n)
    print(f"P_{n}: {len(rep)} relation instances, all hold: {rep.ok};",
          "literal family 3:", rep.info["literal relation 3"])

# b^-1 A[j,n+1] b is the image of x_j under the action of b^-1
rep = conjugation_formula_check(4)
print("conjugation formula, n = 4:", rep.counts())
