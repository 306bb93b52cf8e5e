import random

import pytest
from hypothesis import given
from sympy.combinatorics.free_groups import free_group

from braidlab.words import (
    Word,
    commutator,
    commutator_identity_holds,
    conj,
    hall_witt_check,
    lcs_degree,
    left_normed,
    magnus_expand,
    parse_word,
    random_word,
)

from conftest import words

F, X1, X2, X3 = free_group("x1 x2 x3")
SYM = {1: X1, 2: X2, 3: X3}


def to_sympy(w):
    out = F.identity
    for g, e in w.letters:
        out = out * SYM[g] ** e
    return out


def test_parse_and_print():
    w = parse_word("x3^-2 x1 x2^4")
    assert w.letters == ((3, -2), (1, 1), (2, 4))
    assert str(w) == "x3^-2 x1 x2^4"
    assert parse_word("") == Word.identity() == parse_word("1")
    assert parse_word("x1 x1 x1^-2").is_identity()


@pytest.mark.parametrize("bad", ["y1", "x0", "x1^", "x1^a"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_word(bad)


@given(words(), words())
def test_product_matches_sympy(u, v):
    # sympy's free group reduces independently of our run-length code
    assert to_sympy(u * v) == to_sympy(u) * to_sympy(v)
    assert len(u * v) == len(to_sympy(u * v))


@given(words())
def test_inverse(w):
    assert (w * w.inverse()).is_identity()
    assert w.inverse().inverse() == w


def test_commutator_convention():
    a, b = Word.gen(1), Word.gen(2)
    assert str(commutator(a, b)) == "x1^-1 x2^-1 x1 x2"
    assert conj(a, b) == b.inverse() * a * b
    assert str(left_normed([a, b, a])) == str(commutator(commutator(a, b), a))


@given(words(), words(), words())
def test_hall_witt(a, b, c):
    assert all(hall_witt_check(a, b, c))


@given(words(), words(), words())
def test_commutator_identity(x, y, v):
    assert commutator_identity_holds(x, y, v)


def test_hall_witt_random_triples():
    rng = random.Random(1)
    for _ in range(100):
        a, b, c = (random_word(rng, 3, 7) for _ in range(3))
        assert all(hall_witt_check(a, b, c))
        assert commutator_identity_holds(a, b, c)


def test_substitute():
    w = parse_word("x1 x2^-1")
    img = w.substitute({1: parse_word("x2 x1"), 2: parse_word("x2")})
    assert str(img) == "x2 x1 x2^-1"


@given(words(), words())
def test_magnus_is_multiplicative(u, v):
    assert magnus_expand(u * v, 3, 4) == magnus_expand(u, 3, 4) * magnus_expand(v, 3, 4)


def test_lcs_degree_of_commutators():
    a, b, c = Word.gen(1), Word.gen(2), Word.gen(3)
    d, lead = lcs_degree(commutator(a, b), 3)
    assert d == 2 and repr(lead) == "[x1,x2]"
    d, _ = lcs_degree(left_normed([a, b, c]), 3)
    assert d == 3
    assert lcs_degree(a, 3)[0] == 1
    with pytest.raises(ValueError):
        lcs_degree(Word.identity(), 3)
