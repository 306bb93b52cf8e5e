"""Milnor's reduced free group ``K_n`` via the square-free Magnus map.

``x_i -> 1 + X_i`` into ``Z<X_1..X_n>`` modulo every monomial with a
repeated index.  The image is the normal form used for equality in
``K_n``; its degree-``t`` part is the class in the associated graded.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import comb, factorial
from typing import Mapping

from .braid import BraidWord, artin_action
from .linalg import rank as matrix_rank
from .linalg import vectorize
from .words import Word, commutator, left_normed

__all__ = [
    "SquareFreeSeries",
    "sfs_mul",
    "kn_embed",
    "kn_equal",
    "kn_bracket_basis",
    "kn_graded_rank",
    "expected_kn_rank",
    "reduced_braid_action",
    "relation_word",
]


class SquareFreeSeries:
    """Element of ``Z<X_1..X_rank>`` modulo monomials with a repeated index."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[tuple, int] | None = None):
        self.rank = rank
        clean = {}
        for k, v in (terms or {}).items():
            k = tuple(k)
            if any(i < 1 or i > rank for i in k):
                raise ValueError(f"monomial {k} out of range for rank {rank}")
            if v and len(set(k)) == len(k):
                clean[k] = v
        self.terms = clean

    @classmethod
    def one(cls, rank: int) -> "SquareFreeSeries":
        return cls(rank, {(): 1})

    def __mul__(self, other: "SquareFreeSeries") -> "SquareFreeSeries":
        return sfs_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, SquareFreeSeries) and self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, tuple(sorted(self.terms.items()))))

    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def homogeneous(self, t: int) -> dict[tuple, int]:
        return {k: v for k, v in self.terms.items() if len(k) == t}

    def to_json(self) -> list[dict]:
        return [{"indices": list(k), "coeff": v} for k, v in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))]

    @classmethod
    def from_json(cls, rank: int, data) -> "SquareFreeSeries":
        return cls(rank, {tuple(r["indices"]): r["coeff"] for r in data})

    def __repr__(self) -> str:
        parts = []
        for k in sorted(self.terms, key=lambda t: (len(t), t)):
            v = self.terms[k]
            mono = "".join(f"X{i}" for i in k) or "1"
            if not parts:
                parts.append(mono if v == 1 else f"-{mono}" if v == -1 else f"{v}*{mono}")
            else:
                sign = "+" if v > 0 else "-"
                parts.append(f"{sign} {mono}" if abs(v) == 1 else f"{sign} {abs(v)}*{mono}")
        return " ".join(parts) or "0"


def sfs_mul(a: SquareFreeSeries, b: SquareFreeSeries) -> SquareFreeSeries:
    if a.rank != b.rank:
        raise ValueError("rank mismatch")
    out: dict[tuple, int] = {}
    for k1, v1 in a.terms.items():
        s1 = set(k1)
        for k2, v2 in b.terms.items():
            if s1.isdisjoint(k2):
                k = k1 + k2
                out[k] = out.get(k, 0) + v1 * v2
    return SquareFreeSeries(a.rank, out)


def _times_letter(terms: dict, i: int, e: int) -> dict:
    # right multiplication by (1 + X_i)^e = 1 + e X_i
    out = dict(terms)
    for k, v in terms.items():
        if i not in k:
            key = k + (i,)
            s = out.get(key, 0) + e * v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def kn_embed(w: Word, rank: int) -> SquareFreeSeries:
    if w.max_index() > rank:
        raise ValueError(f"word {w} uses generators beyond rank {rank}")
    terms = {(): 1}
    for g, e in w.letters:
        terms = _times_letter(terms, g, e)
    return SquareFreeSeries(rank, terms)


def kn_equal(u: Word, v: Word, rank: int) -> bool:
    return kn_embed(u, rank) == kn_embed(v, rank)


def relation_word(i: int, g: Word) -> Word:
    """``[x_i, g x_i g^-1]``, a defining relator of ``K_n``."""
    x = Word.gen(i)
    return commutator(x, g * x * g.inverse())


def kn_bracket_basis(n: int, t: int) -> list[tuple[int, ...]]:
    """Index sequences ``(i_1, i_tau(2), .., i_tau(t))`` for ``i_1 < .. < i_t`` and ``tau`` in ``S_{t-1}``."""
    out = []
    for idx in combinations(range(1, n + 1), t):
        for tail in permutations(idx[1:]):
            out.append((idx[0],) + tail)
    return out


def kn_graded_rank(n: int, t: int) -> int:
    """Rank of the degree-``t`` part of ``K_n`` spanned by the listed left-normed brackets."""
    if t > n or t < 1:
        return 0
    rows = []
    for seq in kn_bracket_basis(n, t):
        w = left_normed([Word.gen(i) for i in seq])
        rows.append(kn_embed(w, n).homogeneous(t))
    _, mat = vectorize(rows)
    return matrix_rank(mat)


def expected_kn_rank(n: int, t: int) -> int:
    if t > n or t < 1:
        return 0
    return comb(n, t) * factorial(t - 1)


def reduced_braid_action(b: BraidWord, w: Word) -> SquareFreeSeries:
    return kn_embed(artin_action(b)(w), b.strands)
