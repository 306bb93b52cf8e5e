"""The holomorph ``Hol(F_n)`` and its embedding into ``Aut(F_n * F_m)``.

Elements are pairs ``(f, x)`` with ``f`` an automorphism coming from a braid
(so an inverse is always available) and ``x`` a word.  The product is

    (f, x)(g, y) = (f o g, g^-1(x) y)

with ``f o g`` ordinary composition; this is the only reading under which
the law is associative.  The free product ``F_n * F_m`` is modelled as
``F_{n+m}`` with the second factor on generators ``n+1 .. n+m``.

``chi(h)`` follows the printed rule ``z -> h z h^-1`` on the second
factor.  That rule is an anti-homomorphism ``F_n -> Aut`` under ordinary
composition, so the embedding uses ``E(f, h) = e(f) o chi(h^-1)``, which
sends ``z`` to ``f(h)^-1 z f(h)`` and is a homomorphism.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .braid import (
    BraidWord,
    FreeAutomorphism,
    artin_action,
    braids_equal,
    random_braid,
    word_to_braid,
)
from .report import Report
from .words import Word, random_word

__all__ = [
    "HolElement",
    "hol_mul",
    "e_of",
    "chi",
    "e_embed",
    "pullback_check",
    "chi_e_exchange_check",
    "hol_homomorphism_check",
]


@dataclass(frozen=True)
class HolElement:
    auto: FreeAutomorphism
    auto_inverse: FreeAutomorphism
    elem: Word

    @property
    def rank(self) -> int:
        return self.auto.rank

    @classmethod
    def from_braid(cls, b: BraidWord, elem: Word | None = None) -> "HolElement":
        elem = Word.identity() if elem is None else elem
        if elem.max_index() > b.strands:
            raise ValueError("element outside F_n")
        return cls(artin_action(b), artin_action(b.inverse()), elem)

    @classmethod
    def identity(cls, rank: int) -> "HolElement":
        one = FreeAutomorphism.identity(rank)
        return cls(one, one, Word.identity())

    @classmethod
    def translation(cls, rank: int, elem: Word) -> "HolElement":
        one = FreeAutomorphism.identity(rank)
        return cls(one, one, elem)

    def __mul__(self, other: "HolElement") -> "HolElement":
        return hol_mul(self, other)

    def inverse(self) -> "HolElement":
        return HolElement(self.auto_inverse, self.auto, self.auto(self.elem).inverse())

    def __eq__(self, other) -> bool:
        return isinstance(other, HolElement) and self.auto == other.auto and self.elem == other.elem

    def __hash__(self):
        return hash((self.auto, self.elem))


def hol_mul(a: HolElement, b: HolElement) -> HolElement:
    if a.rank != b.rank:
        raise ValueError("rank mismatch")
    return HolElement(a.auto @ b.auto, b.auto_inverse @ a.auto_inverse, b.auto_inverse(a.elem) * b.elem)


def e_of(f: FreeAutomorphism, m: int = 1) -> FreeAutomorphism:
    """``e(f)``: act by ``f`` on the first factor, fix the second."""
    n = f.rank
    return FreeAutomorphism(list(f.images) + [Word.gen(n + j) for j in range(1, m + 1)])


def chi(h: Word, n: int, m: int = 1) -> FreeAutomorphism:
    """``chi(h)``: fix the first factor, ``z -> h z h^-1`` on the second."""
    hi = h.inverse()
    images = [Word.gen(i) for i in range(1, n + 1)]
    images += [h * Word.gen(n + j) * hi for j in range(1, m + 1)]
    return FreeAutomorphism(images)


def e_embed(h: HolElement, m: int = 1) -> FreeAutomorphism:
    return e_of(h.auto, m) @ chi(h.elem.inverse(), h.rank, m)


def _random_hol(rng, n: int, braid_len: int = 4, word_len: int = 4) -> HolElement:
    return HolElement.from_braid(random_braid(rng, n, braid_len), random_word(rng, n, word_len))


def hol_homomorphism_check(n: int, samples: int = 50, seed: int = 0, m: int = 1) -> Report:
    """Associativity of the Hol law and multiplicativity of ``E`` on random elements."""
    rep = Report(f"holomorph laws n={n}")
    rng = random.Random(seed)
    for k in range(samples):
        a, b, c = (_random_hol(rng, n) for _ in range(3))
        rep.add("associativity", k, (a * b) * c == a * (b * c))
        rep.add("E multiplicative", k, e_embed(a * b, m) == e_embed(a, m) @ e_embed(b, m))
        rep.add("inverse", k, a * a.inverse() == HolElement.identity(n))
    return rep


def pullback_check(n: int) -> Report:
    """The ``P_{n+1}``-conjugation action on ``A_{1,n+1} .. A_{n,n+1}`` is the holomorph action.

    For each ``A_{r,s}`` (``s <= n``) and each ``j`` two records are written:
    the braid identity in ``B_{n+1}`` obtained from conjugating ``(1, x_j)``
    by ``(A(A_{r,s}), 1)`` in ``Hol(F_n)``, and the same conjugation after
    applying ``E``.
    """
    rep = Report(f"pullback n={n}")
    N = n + 1
    top = [BraidWord.agen(i, N, N) for i in range(1, n + 1)]
    for s in range(2, n + 1):
        for r in range(1, s):
            f = HolElement.from_braid(BraidWord.agen(r, s, n))
            for j in range(1, n + 1):
                y = HolElement.translation(n, Word.gen(j))
                conj = f.inverse() * y * f
                expected = HolElement.translation(n, f.auto_inverse(Word.gen(j)))
                a = BraidWord.agen(r, s, N)
                lhs = a.inverse() * top[j - 1] * a
                rhs = word_to_braid(conj.elem, top, N)
                ok = conj == expected and braids_equal(lhs, rhs)
                rep.add("braid conjugation", [r, s, j], ok)
                e_side = e_embed(f.inverse()) @ e_embed(y) @ e_embed(f)
                rep.add("holomorph embedding", [r, s, j], e_side == e_embed(expected))
    return rep


def chi_e_exchange_check(samples: int = 50, n: int = 3, seed: int = 0, m: int = 1) -> Report:
    """``chi(h) o e(f) = e(f) o chi(f^-1(h))`` for braid automorphisms ``f`` and random ``h``."""
    rep = Report("chi/e exchange")
    rng = random.Random(seed)
    for k in range(samples):
        b = random_braid(rng, n, rng.randint(0, 5))
        h = random_word(rng, n, 5)
        f, fi = artin_action(b), artin_action(b.inverse())
        lhs = chi(h, n, m) @ e_of(f, m)
        rhs = e_of(f, m) @ chi(fi(h), n, m)
        rep.add("exchange", {"braid": str(b), "h": str(h)}, lhs == rhs)
    return rep
