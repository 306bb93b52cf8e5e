from itertools import combinations_with_replacement, product

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Poly as SPoly
from sympy import prod, series, symbols

from braidlab.braid import comb
from braidlab.gradedlie import (
    KohnoElement,
    admissible_bracket_check,
    appendix_check,
    degeneracy_check,
    filtration_D,
    filtration_Delta,
    gamma,
    graded_face_check,
    injectivity_divisors,
    injectivity_rank,
    kohno_bracket,
    kohno_dim,
    kohno_normalize,
    kohno_rank_check,
    kohno_relation_check,
    lambda_gamma_bracket,
    lambda_gamma_coefficients,
    lambda_n,
    leading_coefficient_check,
    left_normed_x,
    p_theta_check,
    parse_lie,
    theta_bracket,
    theta_graded,
    theta_identities_check,
)
from braidlab.lie import LieElement, lyndon_words, substitute, witt_number
from braidlab.linalg import rank, vectorize
from braidlab.simplicial import theta
from braidlab.words import Word, lcs_degree, left_normed, magnus_expand

T = symbols("t")


def lcs_dims(k, D):
    """Graded ranks from prod (1 - j t) = prod (1 - t^d)^phi_d."""
    target = SPoly(series(prod([1 - j * T for j in range(1, k)]), T, 0, D + 1).removeO(), T)
    phis = []
    for d in range(1, D + 1):
        cur = prod([(1 - T ** e) ** phi for e, phi in enumerate(phis, 1)])
        cur = SPoly(series(cur, T, 0, D + 1).removeO(), T)
        phis.append(int(cur.coeff_monomial(T ** d) - target.coeff_monomial(T ** d)))
    return phis


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_kohno_dim_matches_lcs_formula(k):
    assert [kohno_dim(k, d) for d in range(1, 6)] == lcs_dims(k, 5)


def test_kohno_dim_pin():
    assert kohno_dim(4, 2) == 4


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_relations_vanish(k):
    assert kohno_relation_check(k).ok
    assert kohno_relation_check(k, 2).ok


@pytest.mark.parametrize("k", [3, 4, 5])
def test_rank_of_normal_form(k):
    assert kohno_rank_check(k, 4).ok


def gens(k):
    return [KohnoElement.generator(i, j, k) for j in range(2, k + 1) for i in range(1, j)]


def test_quotient_of_free_lie_algebra():
    # Free Lie algebra on the B_ij modulo the ideal of relations, degree 3, k = 4:
    # the ideal is spanned by [relation, generator]; the normal form must kill it
    # and the quotient dimension must be kohno_dim.
    k = 4
    pairs = [(i, j) for j in range(2, k + 1) for i in range(1, j)]
    alpha = tuple(pairs)
    g = [LieElement.generator(alpha, a) for a in range(len(pairs))]
    idx = {p: a for a, p in enumerate(pairs)}
    B = lambda i, j: g[idx[(i, j)]]  # noqa: E731
    rels = []
    for (i, j), (s, t) in product(pairs, pairs):
        if not {i, j} & {s, t}:
            rels.append(B(i, j).bracket(B(s, t)))
    for i, t, j in [(a, b, c) for a in range(1, 5) for b in range(a + 1, 5) for c in range(b + 1, 5)]:
        rels.append(B(i, j).bracket(B(i, t) + B(t, j)))
        rels.append(B(t, j).bracket(B(i, j) + B(i, t)))
    ideal = [r.bracket(x) for r in rels for x in g]
    _, rows = vectorize([e.terms for e in ideal])
    free_dim = witt_number(len(pairs), 3)
    assert free_dim - rank(rows) == kohno_dim(4, 3)
    images = gens(k)
    for e in ideal:
        assert substitute(e, images, kohno_bracket, KohnoElement.zero(k)).is_zero()


def kohno_elements(k=4):
    g = gens(k)
    lin = st.lists(st.tuples(st.sampled_from(g), st.integers(-2, 2)), min_size=1, max_size=3)

    def build(terms):
        out = KohnoElement.zero(k)
        for x, c in terms:
            out = out + c * x
        return out

    lin = lin.map(build)
    return st.one_of(lin, st.tuples(lin, lin).map(lambda ab: kohno_bracket(*ab)))


@given(kohno_elements(), kohno_elements(), kohno_elements())
def test_jacobi(a, b, c):
    s = kohno_bracket(a, kohno_bracket(b, c)) + kohno_bracket(b, kohno_bracket(c, a)) + kohno_bracket(c, kohno_bracket(a, b))
    assert s.is_zero()


@given(kohno_elements(), kohno_elements())
def test_antisymmetry_and_json(a, b):
    assert kohno_bracket(a, b) == -kohno_bracket(b, a)
    assert KohnoElement.from_json(a.to_json()) == a


def test_normalize_parser():
    x = kohno_normalize("[B12, B13 + B23]", 3)
    assert x.is_zero()
    y = kohno_normalize("2*[B[1,3],B[2,3]] - [B13,B23]", 3)
    assert y == kohno_normalize("[B13,B23]", 3)
    assert kohno_normalize("Lambda", 4) == lambda_n(3)
    assert kohno_normalize("gamma[2]", 4) == gamma(2, 3)
    with pytest.raises(ValueError):
        kohno_normalize("[B12,", 3)
    with pytest.raises(ValueError):
        kohno_normalize("B34", 3)


def test_mod_reduction_keeps_lie_form():
    x = kohno_normalize("-[B13,B23]", 3).mod(2)
    assert x == kohno_normalize("[B13,B23]", 3)


# --- graded Theta --------------------------------------------------------------


def graded_from_group(n, w):
    """Leading term of Theta(w) read off the combed pure braid."""
    d, _ = lcs_degree(w, n)
    comps = {}
    for m, u in enumerate(comb(theta(n, w)), 2):
        part = magnus_expand(u, m - 1, d).homogeneous(d)
        if part:
            comps[m] = {tuple(i - 1 for i in key): v for key, v in part.items()}
    return KohnoElement(n + 1, comps)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_graded_theta_matches_group_level(n):
    for seq in product(range(1, n + 1), repeat=3):
        if len(set(seq[:2])) < 2:
            continue
        w = left_normed([Word.gen(i) for i in seq])
        _, lead = lcs_degree(w, n)
        assert theta_graded(n, lead) == graded_from_group(n, w)


def test_graded_theta_matches_group_level_appendix_words():
    for seq in [(1, 2, 2, 3), (1, 2, 3, 2), (1, 3, 2, 2)]:
        w = left_normed([Word.gen(i) for i in seq])
        assert theta_graded(3, left_normed_x(3, seq)) == graded_from_group(3, w)


def test_theta_bracket_agrees_with_substitution():
    for seq in [(1, 2), (2, 1, 3), (1, 3, 2, 2)]:
        assert theta_bracket(3, seq) == theta_graded(3, left_normed_x(3, seq))


def test_parse_lie():
    assert parse_lie("[x1,x2]", 2) == left_normed_x(2, (1, 2))
    with pytest.raises(ValueError):
        parse_lie("x3", 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_theta_identities(n):
    assert theta_identities_check(n).ok


@pytest.mark.parametrize("n", [2, 3, 4])
def test_admissible(n):
    for q in range(1, 5):
        for seq in combinations_with_replacement(range(2, n + 1), q):
            assert admissible_bracket_check(n, seq)


def test_admissible_rejects_decreasing():
    with pytest.raises(ValueError):
        admissible_bracket_check(3, [3, 2])


@pytest.mark.parametrize("n", [2, 3])
def test_leading_coefficients(n):
    assert leading_coefficient_check(n, 3).ok


def test_lambda_gamma_alphabet_change():
    # Lambda and gamma_q are sent back to single letters
    assert lambda_gamma_coefficients(lambda_n(3), 3) == {(0,): 1}
    assert lambda_gamma_coefficients(gamma(3, 3), 3) == {(2,): 1}
    x = lambda_gamma_bracket(3, [3, 2])
    assert lambda_gamma_coefficients(x, 3)[(0, 2, 1)] == 1


def test_filtrations():
    assert filtration_D([3, 2]) == 1
    assert filtration_D([2, 2, 3]) == 0
    assert filtration_Delta([2, 3]) == 1
    assert filtration_Delta([3, 2]) == 0
    for seq in product(range(2, 5), repeat=3):
        ties = sum(1 for i in range(3) for k in range(i + 1, 3) if seq[i] == seq[k])
        assert filtration_D(seq) + filtration_Delta(seq) + ties == 3


@pytest.mark.parametrize("n", [2, 3, 4])
def test_graded_face_and_p(n):
    assert graded_face_check(n, 4).ok
    assert p_theta_check(n, 3).ok


def test_degeneracies_of_lambda():
    rep = degeneracy_check(3)
    assert rep.ok
    assert rep.info["s_n Lambda_n == Lambda_(n+1)"] is False


@pytest.mark.parametrize("n,d", [(1, 1), (2, 2), (2, 4), (3, 3), (3, 4), (4, 3)])
def test_injectivity_small(n, d):
    dim, r = injectivity_rank(n, d)
    assert dim == r == witt_number(n, d)
    for p in (2, 3, 5):
        assert injectivity_rank(n, d, p) == (dim, dim)
    assert injectivity_divisors(n, d) == [1] * dim


def test_injectivity_pins():
    assert injectivity_rank(3, 3) == (8, 8)
    assert injectivity_rank(2, 2, 0) == (1, 1)


def test_injectivity_budget():
    with pytest.raises(OverflowError):
        injectivity_rank(4, 5, budget=10)


def test_appendix():
    rep = appendix_check()
    counts = rep.counts()
    assert counts["item 1 exact"] == [1, 1]
    assert counts["item 2 modulo decomposables"] == [1, 1]
    # the printed third value has coefficients -2, +2; the computation gives -4, +4
    assert counts["item 3 modulo decomposables"] == [0, 1]
    assert rep.info["item 3 computed"] == {"223": 1, "232": -4, "322": 4}
