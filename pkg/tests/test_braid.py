import random

import pytest
from hypothesis import given
from sympy import Matrix, eye, symbols, zeros

from braidlab.braid import (
    BraidWord,
    artin_action,
    braids_equal,
    comb,
    conjugation_formula_check,
    is_pure,
    parse_braid,
    permutation,
    pn_relation_instances,
    pure_braids_equal,
    random_pure_braid,
    verify_braid_relations,
    verify_pn_relations,
)
from braidlab.words import Word, parse_word

from conftest import braids, pure_braids

t = symbols("t")


def burau_sigma(i, n, e):
    m = eye(n)
    m[i - 1, i - 1] = 1 - t
    m[i - 1, i] = t
    m[i, i - 1] = 1
    m[i, i] = 0
    return m if e > 0 else m.inv()


def burau(b):
    """Unreduced Burau matrix: an invariant that equal braids must share."""
    b = b.expand()
    m = eye(b.strands)
    for (kind, i), e in b.letters:
        for _ in range(abs(e)):
            m = m * burau_sigma(i, b.strands, e)
    return m.applyfunc(lambda x: x.cancel())


def test_parse_braid():
    b = parse_braid("s1 S2^-1 a[1,3]^2", 3)
    assert str(b) == "s1 s2^-1 A[1,3]^2"
    with pytest.raises(ValueError):
        parse_braid("s3", 3)
    with pytest.raises(ValueError):
        parse_braid("A[2,2]", 3)


def test_sigma_action():
    f = artin_action(parse_braid("s1", 2))
    assert [str(w) for w in f.images] == ["x2", "x2^-1 x1 x2"]


def test_a13_on_x2():
    img = artin_action(BraidWord.agen(1, 3, 3))(Word.gen(2))
    assert str(img) == "x3^-1 x1^-1 x3 x1 x2 x1^-1 x3^-1 x1 x3"


def test_braid_relation_example():
    assert braids_equal(parse_braid("s1 s2 s1", 3), parse_braid("s2 s1 s2", 3))
    assert not braids_equal(parse_braid("s1 s2", 3), parse_braid("s2 s1", 3))
    with pytest.raises(ValueError):
        braids_equal(BraidWord(3), BraidWord(4))


@given(braids(), braids())
def test_action_is_homomorphism(u, v):
    assert artin_action(u * v) == artin_action(u) @ artin_action(v)


@given(braids(4, 5))
def test_action_preserves_boundary(b):
    # the product x1 x2 .. xn is fixed by every braid
    top = Word([(i, 1) for i in range(1, 5)])
    assert artin_action(b)(top) == top


@given(braids(3, 5), braids(3, 5))
def test_equality_agrees_with_burau(u, v):
    if braids_equal(u, v):
        assert burau(u) == burau(v)
    if burau(u) != burau(v):
        assert not braids_equal(u, v)


def test_inserting_trivial_words():
    rng = random.Random(0)
    for _ in range(10):
        b = BraidWord(3, [(("s", rng.randint(1, 2)), rng.choice((1, -1))) for _ in range(6)])
        assert braids_equal(b, b * b * b.inverse())


def test_a_generator_is_pure_and_expands():
    a = BraidWord.agen(1, 3, 4)
    assert is_pure(a)
    assert braids_equal(a, a.expand())
    assert permutation(BraidWord.sigma(1, 3)) != permutation(BraidWord(3))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_relations(n):
    assert verify_braid_relations(n).ok
    rep = verify_pn_relations(n)
    assert rep.ok
    assert (len(rep) > 0) == (n >= 3)  # P_2 is infinite cyclic


def test_literal_family_three_is_not_a_relation():
    info = verify_pn_relations(5).info["literal relation 3"]
    assert info == {"held": 0, "instances": 10}


def test_relation_instances_count_both_forms():
    checks = {c for c, *_ in pn_relation_instances(4)}
    assert {f"{kind} {k}" for kind in ("conjugation", "commutator") for k in range(1, 5)} <= checks


@pytest.mark.parametrize("n", [2, 3, 4])
def test_conjugation_formula(n):
    assert conjugation_formula_check(n).ok


@given(pure_braids(4, 6), pure_braids(4, 6))
def test_combing_agrees_with_action(u, v):
    assert pure_braids_equal(u, v) == braids_equal(u, v)


def test_comb_of_identity():
    assert all(w.is_identity() for w in comb(random_pure_braid(random.Random(1), 4, 0)))
