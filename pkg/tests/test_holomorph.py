from hypothesis import given

from braidlab.braid import BraidWord, artin_action
from braidlab.holomorph import (
    HolElement,
    chi,
    chi_e_exchange_check,
    e_embed,
    e_of,
    hol_homomorphism_check,
    pullback_check,
)
from braidlab.words import Word

from conftest import braids, words


@given(braids(3, 4), words(3, 5), braids(3, 4), words(3, 5), braids(3, 4), words(3, 5))
def test_associative(b1, w1, b2, w2, b3, w3):
    a, b, c = (HolElement.from_braid(x, y) for x, y in ((b1, w1), (b2, w2), (b3, w3)))
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == HolElement.identity(3)


@given(braids(3, 4), words(3, 5), braids(3, 4), words(3, 5))
def test_embedding_is_homomorphism(b1, w1, b2, w2):
    a, b = HolElement.from_braid(b1, w1), HolElement.from_braid(b2, w2)
    assert e_embed(a * b) == e_embed(a) @ e_embed(b)


def test_embedding_on_translation():
    h = HolElement.translation(2, Word.gen(1))
    z = Word.gen(3)
    # z -> f(h)^-1 z f(h) with f the identity
    assert e_embed(h)(z) == Word.gen(1, -1) * z * Word.gen(1)


def test_printed_chi_is_anti_homomorphism():
    g, h = Word.gen(1), Word.gen(2)
    assert chi(g * h, 2) == chi(h, 2) @ chi(g, 2)
    assert chi(g * h, 2) != chi(g, 2) @ chi(h, 2)


def test_e_of_fixes_second_factor():
    f = artin_action(BraidWord.sigma(1, 2))
    assert e_of(f, 2)(Word.gen(4)) == Word.gen(4)


def test_checks():
    assert chi_e_exchange_check(30).ok
    assert hol_homomorphism_check(3, 20).ok
    for n in (2, 3, 4):
        rep = pullback_check(n)
        assert rep.ok and len(rep) == 2 * n * n * (n - 1) // 2
