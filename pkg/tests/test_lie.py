from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import divisors, mobius

from braidlab.lie import (
    LieElement,
    is_lyndon,
    left_normed_word_bracket,
    lyndon_poly,
    lyndon_words,
    standard_factorization,
    witt_number,
)


def necklace(k, d):
    return sum(mobius(d // e) * k ** e for e in divisors(d)) // d


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_witt_matches_necklace_formula(k, d):
    assert witt_number(k, d) == necklace(k, d)


def test_lyndon_by_brute_force():
    for k, d in [(2, 5), (3, 4)]:
        brute = [w for w in product(range(k), repeat=d) if is_lyndon(w)]
        assert list(lyndon_words(k, d)) == brute


def test_witt_pins():
    assert witt_number(3, 3) == 8
    assert witt_number(4, 5) == 204


def test_lyndon_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("BRAIDLAB_CACHE", str(tmp_path))
    lyndon_words.cache_clear()
    try:
        first = lyndon_words(3, 4)
        assert (tmp_path / "lyndon_3_4.json").exists()
        lyndon_words.cache_clear()
        assert lyndon_words(3, 4) == first
    finally:
        lyndon_words.cache_clear()


def test_standard_factorization():
    assert standard_factorization((0, 0, 1)) == ((0,), (0, 1))
    assert standard_factorization((0, 1, 1)) == ((0, 1), (1,))


def test_lyndon_poly_is_triangular():
    for w in lyndon_words(3, 4):
        p = lyndon_poly(w)
        assert p[w] == 1
        assert all(u >= w for u in p)


ALPHA = ("x1", "x2", "x3")


def elements():
    return st.dictionaries(st.sampled_from(lyndon_words(3, 1) + lyndon_words(3, 2) + lyndon_words(3, 3)),
                           st.integers(-3, 3), max_size=4).map(lambda t: LieElement(ALPHA, t))


@given(elements(), elements(), elements())
def test_jacobi(a, b, c):
    s = a.bracket(b.bracket(c)) + b.bracket(c.bracket(a)) + c.bracket(a.bracket(b))
    assert s.is_zero()


@given(elements(), elements())
def test_antisymmetry(a, b):
    assert a.bracket(b) == -b.bracket(a)
    assert a.bracket(a).is_zero()


@given(elements())
def test_json_roundtrip(a):
    assert LieElement.from_json(a.to_json()) == a


def test_from_assoc_rejects_non_lie():
    with pytest.raises(ValueError):
        LieElement.from_assoc(ALPHA, {(1, 0): 1})


def test_left_normed():
    x = LieElement.from_assoc(ALPHA, left_normed_word_bracket([0, 1, 1]))
    assert repr(x) == "[[x1,x2],x2]"
