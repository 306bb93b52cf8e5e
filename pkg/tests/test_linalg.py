import random

from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from braidlab.linalg import in_span, rank, rank_mod_p, smith_invariants, vectorize

matrices = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=5)
)


@given(matrices)
def test_rank_matches_sympy(m):
    assert rank(m) == Matrix(m).rank()


@given(matrices, st.sampled_from([2, 3, 5]))
def test_rank_mod_p_matches_sympy(m, p):
    from sympy.polys.matrices import DomainMatrix
    from sympy import GF

    dm = DomainMatrix([[GF(p)(x) for x in r] for r in m], (len(m), len(m[0])), GF(p))
    assert rank_mod_p(m, p) == dm.rank()


@given(matrices)
def test_smith_matches_sympy(m):
    snf = smith_normal_form(Matrix(m), domain=ZZ)
    diag = [abs(snf[i, i]) for i in range(min(snf.shape)) if snf[i, i] != 0]
    assert smith_invariants(m) == sorted(diag)


def test_smith_divisibility():
    rng = random.Random(3)
    for _ in range(20):
        m = [[rng.randint(-6, 6) for _ in range(4)] for _ in range(4)]
        d = smith_invariants(m)
        assert all(b % a == 0 for a, b in zip(d, d[1:]))


def test_in_span_and_vectorize():
    keys, rows = vectorize([{"a": 1}, {"b": 2}])
    assert keys == ["a", "b"]
    assert in_span(rows, [3, 4])
    assert not in_span(rows[:1], [0, 1])
    assert in_span([], [0, 0])
