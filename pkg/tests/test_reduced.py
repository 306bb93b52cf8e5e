import random
from math import factorial

import pytest
from hypothesis import given

from braidlab.braid import BraidWord, braids_equal
from braidlab.reduced import (
    SquareFreeSeries,
    expected_kn_rank,
    kn_bracket_basis,
    kn_embed,
    kn_equal,
    kn_graded_rank,
    reduced_braid_action,
    relation_word,
)
from braidlab.words import Word, commutator, parse_word, random_word

from conftest import braids, words


def test_embed_commutator():
    s = kn_embed(commutator(Word.gen(1), Word.gen(2)), 2)
    assert repr(s) == "1 + X1X2 - X2X1"
    assert SquareFreeSeries.from_json(2, s.to_json()) == s


def test_embed_rejects_large_index():
    with pytest.raises(ValueError):
        kn_embed(Word.gen(3), 2)


@given(words(3, 6), words(3, 6))
def test_embed_is_multiplicative(u, v):
    assert kn_embed(u * v, 3) == kn_embed(u, 3) * kn_embed(v, 3)


def test_relation_words_die():
    rng = random.Random(0)
    for _ in range(500):
        n = rng.randint(1, 4)
        w = relation_word(rng.randint(1, n), random_word(rng, n, 6))
        assert kn_embed(w, n).is_one()


def test_squares_survive():
    # x1^2 is not trivial in K_1 = Z
    assert not kn_equal(parse_word("x1^2"), Word.identity(), 1)


def test_pinned_ranks():
    assert kn_graded_rank(3, 2) == 3
    assert kn_graded_rank(3, 3) == 2
    assert kn_graded_rank(3, 4) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_top_rank(n):
    assert kn_graded_rank(n, n) == factorial(n - 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rank_table(n):
    for t in range(1, n + 1):
        assert kn_graded_rank(n, t) == expected_kn_rank(n, t) == len(kn_bracket_basis(n, t))


@given(braids(3, 4), words(3, 5))
def test_reduced_action_respects_braid_equality(b, w):
    c = b * BraidWord.sigma(1, 3) * BraidWord.sigma(1, 3, -1)
    assert braids_equal(b, c)
    assert reduced_braid_action(b, w) == reduced_braid_action(c, w)
