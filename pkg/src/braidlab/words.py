"""Free-group words, commutators and the Magnus expansion.

Words are stored run-length encoded as ``((generator, exponent), ...)`` and
are always freely reduced.  The commutator convention is
``[a, b] = a^-1 b^-1 a b`` throughout the package.
"""

from __future__ import annotations

import re
from math import comb
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Word",
    "parse_word",
    "commutator",
    "conj",
    "left_normed",
    "hall_witt_check",
    "commutator_identity_holds",
    "TensorSeries",
    "magnus_expand",
    "lcs_degree",
    "random_word",
]


def _push(out: list, gen: int, exp: int) -> None:
    if exp == 0:
        return
    if out and out[-1][0] == gen:
        e = out[-1][1] + exp
        if e:
            out[-1] = (gen, e)
        else:
            out.pop()
    else:
        out.append((gen, exp))


def _splice(out: list, img: tuple) -> None:
    # append a reduced word; cancellation can only happen at the seam
    k = 0
    n = len(img)
    while k < n and out:
        g, e = img[k]
        h, f = out[-1]
        if g != h:
            break
        k += 1
        if e + f:
            out[-1] = (g, e + f)
            break
        out.pop()
    out.extend(img[k:] if k else img)


class Word:
    """A freely reduced word in generators ``x_1, x_2, ...``.

    ``Word([(1, 2), (3, -1)])`` is ``x1^2 x3^-1``.  Input letters are reduced
    on construction, so any sequence of ``(index, exponent)`` pairs is
    accepted.
    """

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[tuple[int, int]] = ()):
        out: list[tuple[int, int]] = []
        for g, e in letters:
            if g < 1:
                raise ValueError(f"generator index must be positive, got {g}")
            _push(out, g, e)
        self.letters = tuple(out)
        self._hash = None

    @classmethod
    def _raw(cls, letters: tuple) -> "Word":
        w = object.__new__(cls)
        w.letters = letters
        w._hash = None
        return w

    @classmethod
    def gen(cls, i: int, exp: int = 1) -> "Word":
        return cls([(i, exp)])

    @classmethod
    def identity(cls) -> "Word":
        return _IDENTITY

    def is_identity(self) -> bool:
        return not self.letters

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __len__(self) -> int:
        """Length in letters (sum of absolute exponents)."""
        return sum(abs(e) for _, e in self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if not other.letters:
            return self
        if not self.letters:
            return other
        out = list(self.letters)
        rest = other.letters
        k = 0
        while k < len(rest) and out:
            g, e = rest[k]
            if out[-1][0] != g:
                break
            s = out[-1][1] + e
            if s:
                out[-1] = (g, s)
                k += 1
                break
            out.pop()
            k += 1
        out.extend(rest[k:])
        return Word._raw(tuple(out))

    def inverse(self) -> "Word":
        return Word._raw(tuple((g, -e) for g, e in reversed(self.letters)))

    __invert__ = inverse

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        result = _IDENTITY
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.letters)
        return self._hash

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in self.letters)

    def max_index(self) -> int:
        return max((g for g, _ in self.letters), default=0)

    def exponent_sum(self, i: int) -> int:
        return sum(e for g, e in self.letters if g == i)

    def substitute(self, images: Mapping[int, "Word"] | Sequence["Word"]) -> "Word":
        """Apply the homomorphism ``x_i -> images[i]``.

        A sequence is indexed from generator 1; a mapping may omit
        generators, which are then fixed.
        """
        if isinstance(images, Mapping):
            get = lambda g: images.get(g, Word.gen(g))  # noqa: E731
        else:
            get = lambda g: images[g - 1]  # noqa: E731
        out: list[tuple[int, int]] = []
        inverses: dict[int, tuple] = {}
        for g, e in self.letters:
            if e > 0:
                img = get(g).letters
            else:
                img = inverses.get(g)
                if img is None:
                    img = inverses[g] = get(g).inverse().letters
            for _ in range(abs(e)):
                _splice(out, img)
        return Word._raw(tuple(out))

    def map_generators(self, fn) -> "Word":
        """Relabel generators letterwise; ``fn(g)`` returns an index or ``None`` to delete."""
        out: list[tuple[int, int]] = []
        for g, e in self.letters:
            h = fn(g)
            if h is not None:
                _push(out, h, e)
        return Word._raw(tuple(out))


_IDENTITY = Word._raw(())

_TOKEN = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str) -> Word:
    """Parse ``"x3^-2 x1 x2^4"``; ``""`` and ``"1"`` are the identity."""
    text = text.strip()
    if text in ("", "1"):
        return _IDENTITY
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok.strip())
        if not m:
            raise ValueError(f"cannot parse word token {tok!r}")
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp == 0:
            raise ValueError(f"zero exponent in token {tok!r}")
        letters.append((int(m.group(1)), exp))
    return Word(letters)


def commutator(a: Word, b: Word) -> Word:
    return a.inverse() * b.inverse() * a * b


def conj(a: Word, b: Word) -> Word:
    """``a^b = b^-1 a b``."""
    return b.inverse() * a * b


def left_normed(elems: Sequence[Word]) -> Word:
    """``[...[[e0, e1], e2], ..., ek]``."""
    out = elems[0]
    for e in elems[1:]:
        out = commutator(out, e)
    return out


def hall_witt_check(a: Word, b: Word, c: Word, powers: Sequence[int] = (1, 2, 3, 4)) -> list[bool]:
    """Evaluate the six Hall identities on ``a, b, c``.

    Item 6, ``[a, b^n] = [a,b][a,b]^b ... [a,b]^(b^(n-1))``, is checked for
    every ``n`` in ``powers``.
    """
    C = commutator
    ab, ac, bc = C(a, b), C(a, c), C(b, c)
    ba, ca, cb = C(b, a), C(c, a), C(c, b)
    one = _IDENTITY
    i1 = ab * ba == one
    i2 = C(a, b * c) == ac * ab * C(ab, c)
    i3 = C(a * b, c) == ac * C(ac, b) * bc
    i4 = C(ab, conj(c, a)) * C(ca, conj(b, c)) * C(bc, conj(a, b)) == one
    lhs5 = C(ab, c) * C(bc, a) * C(ca, b)
    rhs5 = ba * ca * conj(cb, a) * ab * conj(ac, b) * conj(bc, a) * ac * conj(ca, b)
    i5 = lhs5 == rhs5
    i6 = True
    for n in powers:
        prod = one
        for k in range(n):
            prod = prod * conj(ab, b ** k)
        i6 = i6 and C(a, b ** n) == prod
    return [i1, i2, i3, i4, i5, i6]


def commutator_identity_holds(x: Word, y: Word, v: Word) -> bool:
    """``[x^-1 y x, v y v^-1] == x^-1 [y, (xv) y (xv)^-1] x``."""
    xv = x * v
    lhs = commutator(x.inverse() * y * x, v * y * v.inverse())
    rhs = x.inverse() * commutator(y, xv * y * xv.inverse()) * x
    return lhs == rhs


def random_word(rng, rank: int, max_len: int, min_len: int = 0) -> Word:
    """Uniform-ish random reduced word: random length, random signed letters."""
    length = rng.randint(min_len, max_len)
    letters = [(rng.randint(1, rank), rng.choice((1, -1))) for _ in range(length)]
    return Word(letters)


# ---------------------------------------------------------------------------
# Magnus expansion


class TensorSeries:
    """Truncated element of the power series ring ``Z<<X_1..X_rank>>``.

    ``terms`` maps index tuples (monomials) to nonzero integer coefficients;
    monomials longer than ``degree`` are dropped.
    """

    __slots__ = ("rank", "degree", "terms")

    def __init__(self, rank: int, degree: int, terms: Mapping[tuple, int] | None = None):
        self.rank = rank
        self.degree = degree
        clean = {}
        for k, v in (terms or {}).items():
            if v and len(k) <= degree:
                if any(i < 1 or i > rank for i in k):
                    raise ValueError(f"monomial {k} out of range for rank {rank}")
                clean[tuple(k)] = v
        self.terms = clean

    @classmethod
    def one(cls, rank: int, degree: int) -> "TensorSeries":
        return cls(rank, degree, {(): 1})

    def __mul__(self, other: "TensorSeries") -> "TensorSeries":
        if (self.rank, self.degree) != (other.rank, other.degree):
            raise ValueError("series must share rank and truncation degree")
        d = self.degree
        out: dict[tuple, int] = {}
        for k1, v1 in self.terms.items():
            room = d - len(k1)
            for k2, v2 in other.terms.items():
                if len(k2) <= room:
                    k = k1 + k2
                    out[k] = out.get(k, 0) + v1 * v2
        return TensorSeries(self.rank, d, out)

    def homogeneous(self, deg: int) -> dict[tuple, int]:
        return {k: v for k, v in self.terms.items() if len(k) == deg}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorSeries)
            and (self.rank, self.degree) == (other.rank, other.degree)
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda t: (len(t), t)):
            v = self.terms[k]
            mono = "".join(f"X{i}" for i in k) or "1"
            parts.append(f"{v:+d}*{mono}")
        return " ".join(parts)


def _letter_series(i: int, exp: int, rank: int, degree: int) -> TensorSeries:
    # (1 + X)^e, expanded as a binomial series; valid for negative e as well
    terms = {}
    for k in range(degree + 1):
        if exp >= 0:
            c = comb(exp, k)
        else:
            c = (-1) ** k * comb(-exp + k - 1, k)
        if c:
            terms[(i,) * k] = c
    return TensorSeries(rank, degree, terms)


def magnus_expand(w: Word, rank: int, degree: int = 6) -> TensorSeries:
    if w.max_index() > rank:
        raise ValueError(f"word {w} uses generators beyond rank {rank}")
    out = TensorSeries.one(rank, degree)
    for g, e in w.letters:
        out = out * _letter_series(g, e, rank, degree)
    return out


def lcs_degree(w: Word, rank: int, max_degree: int = 6):
    """Lower central series depth of ``w`` and its leading Lie term.

    Returns ``(d, leading)`` where ``leading`` is a
    :class:`braidlab.lie.LieElement` over ``x1..x_rank``, or ``None`` when
    ``w`` lies deeper than ``max_degree``.  The identity has no degree.
    """
    from .lie import LieElement

    if w.is_identity():
        raise ValueError("the identity has no lower central series degree")
    series = magnus_expand(w, rank, max_degree)
    for d in range(1, max_degree + 1):
        part = series.homogeneous(d)
        if part:
            shifted = {tuple(i - 1 for i in k): v for k, v in part.items()}
            alphabet = tuple(f"x{i}" for i in range(1, rank + 1))
            return d, LieElement.from_assoc(alphabet, shifted)
    return None
