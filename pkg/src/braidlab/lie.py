"""Free Lie algebras over the integers in the Lyndon basis.

Letters are integers ``0..k-1`` ordered naturally; a :class:`LieElement`
carries an alphabet of display labels alongside.  Every Lie polynomial is
also kept as an element of the free associative algebra (``dict`` from
letter tuples to integers), which is where brackets are actually computed:
``[a, b] = ab - ba``.  Going back to the Lyndon basis is a triangular solve,
because the standard bracketing of a Lyndon word ``w`` expands to ``w`` plus
lexicographically larger words.
"""

from __future__ import annotations

import json
import os
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping, Sequence

Poly = dict  # tuple[int, ...] -> int


# ---------------------------------------------------------------------------
# Lyndon words


def is_lyndon(w: Sequence[int]) -> bool:
    w = tuple(w)
    if not w:
        return False
    return all(w < w[i:] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def lyndon_words(k: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All Lyndon words of length exactly ``d`` over ``0..k-1``, in lex order (Duval).

    If ``BRAIDLAB_CACHE`` names a directory, bases are also persisted there.
    """
    if k <= 0 or d <= 0:
        return ()
    cache = os.environ.get("BRAIDLAB_CACHE")
    if not cache:
        return _duval(k, d)
    path = Path(cache) / f"lyndon_{k}_{d}.json"
    try:
        return tuple(tuple(w) for w in json.loads(path.read_text()))
    except (OSError, ValueError):
        pass
    words = _duval(k, d)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(words))
    except OSError:
        pass  # a read-only cache is not an error
    return words


def _duval(k: int, d: int) -> tuple[tuple[int, ...], ...]:
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == d:
            out.append(tuple(w))
        m = len(w)
        while len(w) < d:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return tuple(out)


def witt_number(k: int, d: int) -> int:
    """Dimension of the degree-``d`` part of the free Lie algebra on ``k`` letters."""
    return len(lyndon_words(k, d))


def standard_factorization(w: tuple[int, ...]) -> tuple[tuple, tuple]:
    """``w = u v`` with ``v`` the longest proper Lyndon suffix."""
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w} has no standard factorization")


# ---------------------------------------------------------------------------
# associative polynomial helpers


def poly_add(a: Poly, b: Poly, scale: int = 1) -> Poly:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + scale * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def poly_scale(a: Poly, c: int) -> Poly:
    if c == 0:
        return {}
    return {k: c * v for k, v in a.items()}


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = k1 + k2
            s = out.get(k, 0) + v1 * v2
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def poly_bracket(a: Poly, b: Poly) -> Poly:
    return poly_add(poly_mul(a, b), poly_mul(b, a), -1)


def poly_mod(a: Poly, p: int) -> Poly:
    return {k: v % p for k, v in a.items() if v % p}


@lru_cache(maxsize=None)
def _lyndon_poly(w: tuple[int, ...]) -> tuple:
    if len(w) == 1:
        return ((w, 1),)
    u, v = standard_factorization(w)
    pu = dict(_lyndon_poly(u))
    pv = dict(_lyndon_poly(v))
    return tuple(sorted(poly_bracket(pu, pv).items()))


def lyndon_poly(w: tuple[int, ...]) -> Poly:
    """Associative expansion of the standard bracketing of the Lyndon word ``w``."""
    return dict(_lyndon_poly(tuple(w)))


def lyndon_coordinates(poly: Mapping[tuple, int]) -> dict[tuple, int]:
    """Coordinates of a Lie polynomial in the Lyndon basis.

    Raises ``ValueError`` if ``poly`` is not a Lie polynomial.
    """
    rest = {k: v for k, v in poly.items() if v}
    if () in rest:
        raise ValueError("constant term is not a Lie element")
    coords: dict[tuple, int] = {}
    while rest:
        w = min(rest)
        c = rest[w]
        if not is_lyndon(w):
            raise ValueError(f"not a Lie polynomial (minimal word {w} is not Lyndon)")
        coords[w] = c
        rest = poly_add(rest, lyndon_poly(w), -c)
    return coords


# ---------------------------------------------------------------------------


class LieElement:
    """Integer combination of Lyndon basis brackets over an ordered alphabet."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Sequence, terms: Mapping[tuple, int] | None = None):
        self.alphabet = tuple(alphabet)
        k = len(self.alphabet)
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if not c:
                continue
            if not is_lyndon(w) or any(i < 0 or i >= k for i in w):
                raise ValueError(f"{w} is not a Lyndon word over {k} letters")
            clean[w] = c
        self.terms = clean

    @classmethod
    def generator(cls, alphabet: Sequence, i: int) -> "LieElement":
        return cls(alphabet, {(i,): 1})

    @classmethod
    def from_assoc(cls, alphabet: Sequence, poly: Mapping[tuple, int]) -> "LieElement":
        return cls(alphabet, lyndon_coordinates(poly))

    def to_assoc(self) -> Poly:
        out: Poly = {}
        for w, c in self.terms.items():
            out = poly_add(out, lyndon_poly(w), c)
        return out

    def _check(self, other: "LieElement") -> None:
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        return LieElement(self.alphabet, poly_add(self.terms, other.terms))

    def __sub__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        return LieElement(self.alphabet, poly_add(self.terms, other.terms, -1))

    def __neg__(self) -> "LieElement":
        return LieElement(self.alphabet, poly_scale(self.terms, -1))

    def __rmul__(self, c: int) -> "LieElement":
        return LieElement(self.alphabet, poly_scale(self.terms, c))

    def bracket(self, other: "LieElement") -> "LieElement":
        self._check(other)
        return LieElement.from_assoc(self.alphabet, poly_bracket(self.to_assoc(), other.to_assoc()))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def homogeneous(self, d: int) -> "LieElement":
        return LieElement(self.alphabet, {w: c for w, c in self.terms.items() if len(w) == d})

    def __eq__(self, other) -> bool:
        return isinstance(other, LieElement) and self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        return hash((self.alphabet, tuple(sorted(self.terms.items()))))

    def bracket_string(self, w: tuple[int, ...]) -> str:
        if len(w) == 1:
            return str(self.alphabet[w[0]])
        u, v = standard_factorization(w)
        return f"[{self.bracket_string(u)},{self.bracket_string(v)}]"

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda t: (len(t), t)):
            c = self.terms[w]
            b = self.bracket_string(w)
            parts.append(b if c == 1 else f"-{b}" if c == -1 else f"{c}*{b}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "alphabet": [list(a) if isinstance(a, tuple) else a for a in self.alphabet],
            "terms": [{"lyndon": list(w), "coeff": c} for w, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "LieElement":
        alphabet = [tuple(a) if isinstance(a, list) else a for a in data["alphabet"]]
        return cls(alphabet, {tuple(t["lyndon"]): t["coeff"] for t in data["terms"]})


def free_lie_basis(k: int, d: int) -> list[tuple[int, ...]]:
    return list(lyndon_words(k, d))


def substitute(element: LieElement, images: Sequence, bracket, zero):
    """Evaluate a Lie homomorphism defined on generators.

    ``images[i]`` is the image of letter ``i``; ``bracket`` and ``zero``
    describe the target algebra, whose elements must support ``+`` and
    integer scaling by ``c * x``.
    """
    cache: dict[tuple, object] = {}

    def image(w):
        if w in cache:
            return cache[w]
        if len(w) == 1:
            r = images[w[0]]
        else:
            u, v = standard_factorization(w)
            r = bracket(image(u), image(v))
        cache[w] = r
        return r

    out = zero
    for w, c in element.terms.items():
        out = out + c * image(w)
    return out


def left_normed_word_bracket(letters: Iterable[int]) -> Poly:
    """Associative expansion of ``[...[a0, a1], a2] ... ]``."""
    it = iter(letters)
    acc: Poly = {(next(it),): 1}
    for a in it:
        acc = poly_bracket(acc, {(a,): 1})
    return acc


def lie_bracket(a: LieElement, b: LieElement) -> LieElement:
    return a.bracket(b)
