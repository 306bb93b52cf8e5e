"""The Kohno Lie algebra of the pure braid group and the graded map of Theta.

The associated graded Lie algebra of ``P_k`` is free on ``B_{i,j}`` modulo
the infinitesimal braid relations.  It splits additively as
``L[B_{*,2}] + L[B_{*,3}] + ... + L[B_{*,k}]`` where each summand is a free
Lie algebra and ``L[B_{*,m}]`` is an ideal of the first ``m`` strands on
which the earlier summands act by derivations:

    [B_{s,t}, B_{s,m}] =  [B_{s,m}, B_{t,m}]
    [B_{s,t}, B_{t,m}] = -[B_{s,m}, B_{t,m}]
    [B_{s,t}, B_{j,m}] =  0                    (j not in {s, t})

A :class:`KohnoElement` stores one Lie polynomial per summand, in the free
associative algebra (letter ``i - 1`` stands for ``B_{i,m}``).  This is a
normal form: two bracket expressions are equal modulo the relations iff
their components agree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .lie import (
    LieElement,
    Poly,
    left_normed_word_bracket,
    lyndon_coordinates,
    lyndon_poly,
    lyndon_words,
    poly_add,
    poly_bracket,
    poly_mul,
    poly_scale,
    standard_factorization,
    witt_number,
)
from .linalg import in_span, rank, rank_mod_p, smith_invariants, vectorize
from .report import Report

__all__ = [
    "KohnoElement",
    "kohno_bracket",
    "kohno_normalize",
    "kohno_dim",
    "kohno_relation_check",
    "kohno_rank_check",
    "GammaSymbol",
    "gamma_expand",
    "lambda_n",
    "gamma",
    "theta_generator_graded",
    "theta_graded",
    "theta_bracket",
    "parse_lie",
    "left_normed_x",
    "theta_identities_check",
    "admissible_bracket_check",
    "lambda_gamma_bracket",
    "lambda_gamma_coefficients",
    "leading_coefficient",
    "leading_coefficient_check",
    "filtration_D",
    "filtration_Delta",
    "injectivity_rank",
    "injectivity_divisors",
    "injectivity_check",
    "appendix_check",
    "graded_face_check",
    "p_map",
    "p_theta_check",
    "degeneracy_graded",
    "degeneracy_check",
]


# ---------------------------------------------------------------------------
# derivation action of lower summands on L[B_{*,m}]


def _derive_letter(s: int, t: int, poly: Poly) -> Poly:
    """Apply ``ad B_{s,t}`` to a polynomial in the letters ``B_{*,m}`` (``t < m``)."""
    a, b = s - 1, t - 1
    ab = {(a, b): 1, (b, a): -1}  # [B_{s,m}, B_{t,m}]
    out: Poly = {}
    for w, c in poly.items():
        for pos, letter in enumerate(w):
            if letter == a:
                sign = c
            elif letter == b:
                sign = -c
            else:
                continue
            left, right = w[:pos], w[pos + 1:]
            for mid, v in ab.items():
                key = left + mid + right
                val = out.get(key, 0) + sign * v
                if val:
                    out[key] = val
                else:
                    del out[key]
    return out


def _act(x: Poly, m: int, y: Poly) -> Poly:
    """``[x, y]`` for ``x`` in summand ``m`` and ``y`` in a later summand.

    ``x`` is expanded into monomials ``w_1 .. w_r`` acting as
    ``D_{w_1} o .. o D_{w_r}``; shared suffixes are evaluated once.
    """
    memo: dict[tuple, Poly] = {(): y}

    def apply(w: tuple) -> Poly:
        got = memo.get(w)
        if got is None:
            inner = apply(w[1:])
            got = _derive_letter(w[0] + 1, m, inner) if inner else {}
            memo[w] = got
        return got

    out: Poly = {}
    for w, c in x.items():
        out = poly_add(out, apply(w), c)
    return out


class KohnoElement:
    """Element of the graded Lie algebra of ``P_k`` in split normal form."""

    __slots__ = ("strands", "components")

    def __init__(self, strands: int, components: Mapping[int, Poly] | None = None):
        if strands < 1:
            raise ValueError("need at least one strand")
        comps = {}
        for m, p in (components or {}).items():
            if not 2 <= m <= strands:
                raise ValueError(f"component {m} out of range for {strands} strands")
            p = {tuple(w): c for w, c in p.items() if c}
            if any(not w or max(w) > m - 2 for w in p):
                raise ValueError(f"component {m} uses letters outside B_(*,{m})")
            if p:
                comps[m] = p
        self.strands = strands
        self.components = comps

    # construction -----------------------------------------------------------

    @classmethod
    def zero(cls, k: int) -> "KohnoElement":
        return cls(k)

    @classmethod
    def generator(cls, i: int, j: int, k: int) -> "KohnoElement":
        if not 1 <= i < j <= k:
            raise ValueError(f"B[{i},{j}] out of range for {k} strands")
        return cls(k, {j: {(i - 1,): 1}})

    @classmethod
    def from_coordinates(cls, k: int, coords: Mapping[tuple, int]) -> "KohnoElement":
        """Inverse of :meth:`coordinates`."""
        comps: dict[int, Poly] = {}
        for (m, w), c in coords.items():
            comps[m] = poly_add(comps.get(m, {}), lyndon_poly(w), c)
        return cls(k, comps)

    # arithmetic ---------------------------------------------------------------

    def _check(self, other: "KohnoElement") -> None:
        if not isinstance(other, KohnoElement) or other.strands != self.strands:
            raise ValueError("strand-count mismatch")

    def __add__(self, other: "KohnoElement") -> "KohnoElement":
        self._check(other)
        comps = dict(self.components)
        for m, p in other.components.items():
            comps[m] = poly_add(comps.get(m, {}), p)
        return KohnoElement(self.strands, comps)

    def __sub__(self, other: "KohnoElement") -> "KohnoElement":
        return self + (-1) * other

    def __neg__(self) -> "KohnoElement":
        return (-1) * self

    def __rmul__(self, c: int) -> "KohnoElement":
        return KohnoElement(self.strands, {m: poly_scale(p, c) for m, p in self.components.items()})

    def bracket(self, other: "KohnoElement") -> "KohnoElement":
        return kohno_bracket(self, other)

    def mod(self, p: int) -> "KohnoElement":
        """Reduce the Lyndon coordinates into ``0..p-1``.

        Reducing the associative expansion instead would not stay a Lie
        polynomial over the integers (``-1 = 1`` mod 2).
        """
        coords = {key: c % p for key, c in self.coordinates().items()}
        return KohnoElement.from_coordinates(self.strands, {key: c for key, c in coords.items() if c})

    def is_zero(self) -> bool:
        return not self.components

    def __eq__(self, other) -> bool:
        return isinstance(other, KohnoElement) and self.strands == other.strands and self.components == other.components

    def __hash__(self):
        return hash((self.strands, tuple(sorted((m, tuple(sorted(p.items()))) for m, p in self.components.items()))))

    def embed(self, k: int) -> "KohnoElement":
        """The same element in ``k >= strands`` strands."""
        if k < self.strands:
            raise ValueError("cannot embed into fewer strands")
        return KohnoElement(k, self.components)

    # coordinates --------------------------------------------------------------

    def coordinates(self) -> dict[tuple, int]:
        """``{(m, lyndon_word): coeff}`` in the Lyndon basis of each summand."""
        out = {}
        for m, p in sorted(self.components.items()):
            for w, c in lyndon_coordinates(p).items():
                out[(m, w)] = c
        return out

    def degrees(self) -> set[int]:
        return {len(w) for p in self.components.values() for w in p}

    def homogeneous(self, d: int) -> "KohnoElement":
        return KohnoElement(self.strands, {m: {w: c for w, c in p.items() if len(w) == d} for m, p in self.components.items()})

    def __repr__(self) -> str:
        if not self.components:
            return "0"
        parts = []
        for (m, w), c in self.coordinates().items():
            label = _bracket_label(m, w)
            parts.append(label if c == 1 else f"-{label}" if c == -1 else f"{c}*{label}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        alphabet = [[i, m] for m in range(2, self.strands + 1) for i in range(1, m)]
        offset = {m: (m - 1) * (m - 2) // 2 for m in range(2, self.strands + 1)}
        terms = [
            {"lyndon": [offset[m] + a for a in w], "coeff": c}
            for (m, w), c in self.coordinates().items()
        ]
        return {"alphabet": alphabet, "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> "KohnoElement":
        alphabet = [tuple(a) for a in data["alphabet"]]
        k = max((m for _, m in alphabet), default=1)
        coords = {}
        for t in data["terms"]:
            letters = [alphabet[a] for a in t["lyndon"]]
            ms = {m for _, m in letters}
            if len(ms) != 1:
                raise ValueError("a basis bracket must live in a single summand")
            m = ms.pop()
            coords[(m, tuple(i - 1 for i, _ in letters))] = t["coeff"]
        return cls.from_coordinates(k, coords)


def _bracket_label(m: int, w: tuple) -> str:
    if len(w) == 1:
        return f"B[{w[0] + 1},{m}]"
    u, v = standard_factorization(w)
    return f"[{_bracket_label(m, u)},{_bracket_label(m, v)}]"


def kohno_bracket(a: KohnoElement, b: KohnoElement) -> KohnoElement:
    a._check(b)
    comps: dict[int, Poly] = {}

    def put(m, p, sign=1):
        if p:
            comps[m] = poly_add(comps.get(m, {}), p, sign)

    for m, p in a.components.items():
        for m2, q in b.components.items():
            if m == m2:
                put(m, poly_bracket(p, q))
            elif m < m2:
                put(m2, _act(p, m, q))
            else:
                put(m, _act(q, m2, p), -1)
    return KohnoElement(a.strands, comps)


def kohno_dim(k: int, d: int) -> int:
    return sum(witt_number(m - 1, d) for m in range(2, k + 1))


# ---------------------------------------------------------------------------
# Lambda / gamma


def lambda_n(n: int) -> KohnoElement:
    """``Lambda_n = B_{1,n+1} + .. + B_{n,n+1}``."""
    return KohnoElement(n + 1, {n + 1: {(i,): 1 for i in range(n)}})


def gamma(q: int, n: int) -> KohnoElement:
    """``gamma_q(n) = -(B_{n-q+2,n+1} + .. + B_{n,n+1})`` for ``2 <= q <= n``."""
    if not 2 <= q <= n:
        raise ValueError(f"gamma_{q}({n}) needs 2 <= q <= n")
    return KohnoElement(n + 1, {n + 1: {(i - 1,): -1 for i in range(n - q + 2, n + 1)}})


@dataclass(frozen=True)
class GammaSymbol:
    n: int
    q: int | None = None  # None means Lambda

    def __str__(self) -> str:
        return f"Lambda_{self.n}" if self.q is None else f"gamma_{self.q}({self.n})"


def gamma_expand(g: GammaSymbol) -> KohnoElement:
    return lambda_n(g.n) if g.q is None else gamma(g.q, g.n)


def lambda_gamma_bracket(n: int, seq: Sequence[int]) -> KohnoElement:
    """Left-normed ``[..[[Lambda_n, gamma_{seq[0]}], gamma_{seq[1]}] ..]``."""
    out = lambda_n(n)
    for q in seq:
        out = kohno_bracket(out, gamma(q, n))
    return out


def _to_lambda_gamma(poly: Poly, n: int) -> Poly:
    # B_{1,n+1} = L + g_n, B_{n-q+2,n+1} = g_{q-1} - g_q (q >= 3), B_{n,n+1} = -g_2.
    # letters: 0 is Lambda, q - 1 is gamma_q
    linear: dict[int, dict[int, int]] = {}
    if n == 1:
        linear[0] = {0: 1}
    else:
        linear[0] = {0: 1, n - 1: 1}
        linear[n - 1] = {1: -1}
        for q in range(3, n + 1):
            linear[n - q + 1] = {q - 2: 1, q - 1: -1}
    out: Poly = {}
    for w, c in poly.items():
        for choice in product(*(linear[a].items() for a in w)):
            coeff = c
            for _, v in choice:
                coeff *= v
            key = tuple(x for x, _ in choice)
            out[key] = out.get(key, 0) + coeff
    return {k: v for k, v in out.items() if v}


def lambda_gamma_coefficients(x: KohnoElement, n: int) -> Poly:
    """Top summand of ``x`` rewritten in the letters ``Lambda = 0, gamma_q = q - 1``."""
    return _to_lambda_gamma(x.components.get(n + 1, {}), n)


def leading_coefficient(x: KohnoElement, n: int, seq: Sequence[int]) -> int:
    """Coefficient of the basis bracket ``[..[Lambda, gamma_{seq[0]}] ..]`` in ``x``.

    Within the part of Lambda-degree one, the left-normed brackets
    ``[Lambda, a_1, .., a_q]`` form a basis and each contains the monomial
    ``Lambda a_1 .. a_q`` exactly once, so the coefficient can be read off
    that monomial.
    """
    word = (0,) + tuple(q - 1 for q in seq)
    return lambda_gamma_coefficients(x, n).get(word, 0)


# ---------------------------------------------------------------------------
# normalization of bracket expressions


_TOKEN = re.compile(r"\s*(B\s*\[\s*\d+\s*,\s*\d+\s*\]|B\d\d|Lambda|gamma\s*\[\s*\d+\s*\]|g\d+|x\d+|L\b|\d+|[\[\](),+\-*])")


def _tokenize(text: str) -> list[str]:
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse bracket expression at {text[pos:]!r}")
        out.append(re.sub(r"\s+", "", m.group(1)))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    """Recursive descent over ``+``, ``-``, ``c*``, ``[a, b]`` and ``( )``.

    ``leaf`` turns a generator token into an element; ``bracket`` is the
    target Lie bracket.
    """

    def __init__(self, text: str, leaf, bracket):
        self.toks = _tokenize(text)
        self.i = 0
        self.leaf = leaf
        self.bracket = bracket

    def parse(self):
        out = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input {self.toks[self.i:]}")
        return out

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expect=None):
        tok = self.peek()
        if tok is None or (expect is not None and tok != expect):
            raise ValueError(f"expected {expect or 'a token'}, got {tok!r}")
        self.i += 1
        return tok

    def expr(self) -> KohnoElement:
        out = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def term(self) -> KohnoElement:
        tok = self.peek()
        if tok == "-":
            self.take()
            return -self.term()
        if tok is not None and tok.isdigit():
            c = int(self.take())
            self.take("*")
            return c * self.atom()
        return self.atom()

    def atom(self):
        tok = self.take()
        if tok == "[":
            a = self.expr()
            self.take(",")
            b = self.expr()
            self.take("]")
            return self.bracket(a, b)
        if tok == "(":
            a = self.expr()
            self.take(")")
            return a
        return self.leaf(tok)


def _kohno_leaf(k: int):
    def leaf(tok: str) -> KohnoElement:
        if tok.startswith("B"):
            i, j = map(int, re.findall(r"\d", tok) if "[" not in tok else re.findall(r"\d+", tok))
            return KohnoElement.generator(i, j, k)
        if tok in ("Lambda", "L"):
            return lambda_n(k - 1)
        if tok.startswith("g"):
            return gamma(int(re.findall(r"\d+", tok)[0]), k - 1)
        raise ValueError(f"unexpected token {tok!r}")

    return leaf


def parse_lie(text: str, n: int) -> LieElement:
    """Parse a bracket expression in ``x1 .. xn`` into the free Lie algebra."""
    alphabet = _x_alphabet(n)

    def leaf(tok: str) -> LieElement:
        if tok.startswith("x"):
            i = int(tok[1:])
            if not 1 <= i <= n:
                raise ValueError(f"{tok} outside x1..x{n}")
            return LieElement.generator(alphabet, i - 1)
        raise ValueError(f"unexpected token {tok!r}")

    return _Parser(text, leaf, lambda a, b: a.bracket(b)).parse()


def kohno_normalize(expr, k: int) -> KohnoElement:
    """Normal form of a bracket expression in ``B[i,j]`` (or ``Bij``), ``Lambda``, ``gamma[q]``.

    ``Lambda`` and ``gamma[q]`` refer to ``n = k - 1``.  A
    :class:`KohnoElement` is returned unchanged (after a strand check).
    """
    if isinstance(expr, KohnoElement):
        if expr.strands != k:
            raise ValueError("strand-count mismatch")
        return KohnoElement(k, expr.components)
    return _Parser(expr, _kohno_leaf(k), kohno_bracket).parse()


def _relation_instances(k: int):
    B = lambda i, j: KohnoElement.generator(i, j, k)  # noqa: E731
    pairs = [(i, j) for j in range(2, k + 1) for i in range(1, j)]
    for (i, j), (s, t) in product(pairs, pairs):
        if not {i, j} & {s, t} and (i, j) < (s, t):
            yield "(i) disjoint", [i, j, s, t], kohno_bracket(B(i, j), B(s, t))
    for i in range(1, k + 1):
        for t in range(i + 1, k + 1):
            for j in range(t + 1, k + 1):
                yield "(ii)", [i, t, j], kohno_bracket(B(i, j), B(i, t) + B(t, j))
                yield "(iii)", [i, t, j], kohno_bracket(B(t, j), B(i, j) + B(i, t))
                # the restated pair of identities
                yield "restated 1", [i, t, j], kohno_bracket(B(i, j) + B(t, j), B(i, t))
                yield "restated 2", [i, t, j], kohno_bracket(B(i, t), B(t, j)) - kohno_bracket(B(t, j), B(i, j))


def kohno_relation_check(k: int, modulus: int = 0) -> Report:
    """Every infinitesimal braid relation instance normalizes to zero (optionally mod ``p``)."""
    rep = Report(f"infinitesimal braid relations k={k}" + (f" mod {modulus}" if modulus else ""))
    for check, inst, val in _relation_instances(k):
        if modulus:
            val = val.mod(modulus)
        rep.add(check, inst, val.is_zero())
    return rep


def kohno_rank_check(k: int, max_degree: int) -> Report:
    """Brackets of generators span a space of dimension ``kohno_dim(k, d)`` in each degree."""
    rep = Report(f"Kohno ranks k={k}")
    gens = [KohnoElement.generator(i, j, k) for j in range(2, k + 1) for i in range(1, j)]
    layer = gens
    for d in range(1, max_degree + 1):
        if d > 1:
            layer = [kohno_bracket(x, g) for x in basis for g in gens]
        coords = [x.coordinates() for x in layer]
        keys, rows = vectorize(coords)
        r = rank(rows) if rows and keys else 0
        rep.add("rank = kohno_dim", [k, d, r, kohno_dim(k, d)], r == kohno_dim(k, d))
        # keep an independent subset for the next layer
        basis, acc = [], []
        for x, row in zip(layer, rows):
            if rank(acc + [row]) > len(acc):
                acc.append(row)
                basis.append(x)
    return rep


# ---------------------------------------------------------------------------
# the graded map of Theta


@lru_cache(maxsize=None)
def theta_generator_graded(q: int, n: int) -> KohnoElement:
    """``sum over i <= n-q+1 < j <= n+1 of B_{i,j}``."""
    if not 1 <= q <= n:
        raise ValueError(f"x_{q} out of range for n={n}")
    comps = {j: {(i - 1,): 1 for i in range(1, n - q + 2)} for j in range(n - q + 2, n + 2)}
    return KohnoElement(n + 1, comps)


@lru_cache(maxsize=None)
def _theta_lyndon(n: int, w: tuple) -> KohnoElement:
    if len(w) == 1:
        return theta_generator_graded(w[0] + 1, n)
    u, v = standard_factorization(w)
    return kohno_bracket(_theta_lyndon(n, u), _theta_lyndon(n, v))


def theta_graded(n: int, a: LieElement) -> KohnoElement:
    """Image of ``a`` (a Lie element over ``x_1 .. x_n``) in the graded algebra of ``P_{n+1}``."""
    if len(a.alphabet) > n:
        raise ValueError(f"alphabet larger than n={n}")
    out = KohnoElement.zero(n + 1)
    for w, c in a.terms.items():
        out = out + c * _theta_lyndon(n, w)
    return out


def theta_bracket(n: int, seq: Sequence[int]) -> KohnoElement:
    """Image of the left-normed bracket ``[..[x_{seq[0]}, x_{seq[1]}] ..]``."""
    out = theta_generator_graded(seq[0], n)
    for q in seq[1:]:
        out = kohno_bracket(out, theta_generator_graded(q, n))
    return out


def _x_alphabet(n: int) -> tuple:
    return tuple(f"x{i}" for i in range(1, n + 1))


def left_normed_x(n: int, seq: Sequence[int]) -> LieElement:
    return LieElement.from_assoc(_x_alphabet(n), left_normed_word_bracket(q - 1 for q in seq))


def theta_identities_check(n: int) -> Report:
    """Items (a)-(e) relating ``Lambda_n``, ``gamma_q(n)`` and the generator images."""
    rep = Report(f"theta identities n={n}")
    L = lambda_n(n)
    T = lambda q: theta_generator_graded(q, n)  # noqa: E731
    B = lambda i, j: KohnoElement.generator(i, j, n + 1)  # noqa: E731
    br = kohno_bracket
    for j in range(2, n + 1):
        for i in range(1, j):
            rep.add("(a) [Lambda, B_ij] = 0", [i, j], br(L, B(i, j)).is_zero())
    for q in range(2, n + 1):
        for p in range(2, q + 1):
            rep.add("(b) [gamma_p, Theta x_q] = 0", [p, q], br(gamma(p, n), T(q)).is_zero())
    for q in range(1, n + 1):
        rhs = L + (gamma(q, n) if q >= 2 else KohnoElement.zero(n + 1))
        for j in range(n - q + 2, n + 1):
            for i in range(1, n - q + 2):
                rhs = rhs + B(i, j)
        rep.add("(c) Theta x_q decomposition", [q], T(q) == rhs)
    for j in range(2, n + 1):
        for i in range(2, j):
            gi, gj = gamma(i, n), gamma(j, n)
            rhs = br(gj, L) + br(L, gi) + 2 * br(gj, gi)
            rep.add("(d) [gamma_j, Theta x_i]", [i, j], br(gj, T(i)) == rhs)
    for m in range(2, n + 1):
        for r in range(1, m):
            s = KohnoElement.zero(n + 1)
            for j in range(1, r + 1):
                s = s + B(j, m)
            rep.add("(e) [Lambda, sum B_jm] = 0", [r, m], br(L, s).is_zero())
    return rep


def admissible_bracket_check(n: int, seq: Sequence[int]) -> bool:
    """``Theta [..[x_1, x_{j_1}] .. x_{j_q}] == [..[Lambda, gamma_{j_q}] .. gamma_{j_1}]``."""
    seq = list(seq)
    if any(not 2 <= j <= n for j in seq) or seq != sorted(seq):
        raise ValueError("need a weakly increasing sequence in 2..n")
    lhs = theta_graded(n, left_normed_x(n, [1] + seq))
    return lhs == lambda_gamma_bracket(n, seq[::-1])


def leading_coefficient_check(n: int, max_q: int) -> Report:
    """The reversed Lambda/gamma bracket occurs with coefficient +-1 for every sequence."""
    rep = Report(f"leading coefficients n={n}")
    for q in range(1, max_q + 1):
        for seq in product(range(2, n + 1), repeat=q):
            img = theta_bracket(n, [1, *seq])
            c = leading_coefficient(img, n, seq[::-1])
            rep.add("leading coefficient is +-1", list(seq) + [c], abs(c) == 1)
    return rep


def filtration_D(seq: Sequence[int]) -> int:
    """Pairs ``i < k`` with ``seq[i] > seq[k]``."""
    return sum(1 for i in range(len(seq)) for k in range(i + 1, len(seq)) if seq[i] > seq[k])


def filtration_Delta(seq: Sequence[int]) -> int:
    """Pairs ``i < k`` with ``seq[i] < seq[k]``."""
    return sum(1 for i in range(len(seq)) for k in range(i + 1, len(seq)) if seq[i] < seq[k])


# ---------------------------------------------------------------------------
# injectivity


@lru_cache(maxsize=None)
def _injectivity_matrix(n: int, d: int) -> tuple:
    images = [_theta_lyndon(n, w).coordinates() for w in lyndon_words(n, d)]
    _, rows = vectorize(images)
    return tuple(tuple(r) for r in rows)


def injectivity_rank(n: int, d: int, modulus: int = 0, budget: int | None = None) -> tuple[int, int]:
    """``(domain dimension, rank of the image)`` of the graded Theta in degree ``d``."""
    dim = witt_number(n, d)
    if budget is not None and dim * kohno_dim(n + 1, d) > budget:
        raise OverflowError(f"matrix {dim}x{kohno_dim(n + 1, d)} exceeds budget {budget}")
    rows = [list(r) for r in _injectivity_matrix(n, d)]
    if not rows or not rows[0]:
        return dim, 0
    r = rank_mod_p(rows, modulus) if modulus else rank(rows)
    return dim, r


def injectivity_divisors(n: int, d: int) -> list[int]:
    """Elementary divisors of the integer matrix of the graded Theta in degree ``d``."""
    rows = [list(r) for r in _injectivity_matrix(n, d)]
    if not rows or not rows[0]:
        return []
    return smith_invariants(rows)


def injectivity_check(max_n: int, max_d: int, moduli: Iterable[int] = (0, 2, 3, 5)) -> Report:
    rep = Report("graded theta injective")
    moduli = list(moduli)
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            for p in moduli:
                dim, r = injectivity_rank(n, d, p)
                rep.add(f"full rank mod {p}" if p else "full rank over Q", [n, d, dim, r], dim == r)
            if 0 in moduli:
                divs = injectivity_divisors(n, d)
                rep.add("unit elementary divisors", [n, d], all(x == 1 for x in divs) and len(divs) == witt_number(n, d))
    return rep


# ---------------------------------------------------------------------------
# appendix


def _decomposables(n: int, d: int) -> list[KohnoElement]:
    # Lyndon brackets over Lambda, gamma_2..gamma_n with Lambda occurring twice or more
    gens = [lambda_n(n)] + [gamma(q, n) for q in range(2, n + 1)]
    out = []
    for w in lyndon_words(len(gens), d):
        if w.count(0) >= 2:
            out.append(_build(w, gens))
    return out


def _build(w: tuple, gens: list) -> KohnoElement:
    if len(w) == 1:
        return gens[w[0]]
    u, v = standard_factorization(w)
    return kohno_bracket(_build(u, gens), _build(v, gens))


def _congruent(x: KohnoElement, y: KohnoElement, span: list[KohnoElement]) -> bool:
    diff = (x - y).coordinates()
    keys = sorted(set(diff) | {k for s in span for k in s.coordinates()})
    _, rows = vectorize([s.coordinates() for s in span], keys)
    _, (target,) = vectorize([diff], keys)
    return in_span(rows, target)


def appendix_check() -> Report:
    """The three sample values of the graded ``Theta_3``.

    Item 1 is an exact equality; items 2 and 3 hold modulo the span of the
    degree-4 brackets in ``Lambda_3, gamma_2(3), gamma_3(3)`` with at least
    two ``Lambda`` entries.
    """
    n = 3
    rep = Report("appendix")
    LG = lambda *seq: lambda_gamma_bracket(n, seq)  # noqa: E731
    th = lambda *seq: theta_graded(n, left_normed_x(n, seq))  # noqa: E731
    dec = _decomposables(n, 4)
    item1 = th(1, 2, 2, 3) == LG(3, 2, 2)
    rep.add("item 1 exact", "[[[x1,x2],x2],x3] = [[[L,g3],g2],g2]", item1)
    rhs2 = -LG(2, 3, 2) + 2 * LG(3, 2, 2)
    rep.add("item 2 modulo decomposables", "[[[x1,x2],x3],x2]", _congruent(th(1, 2, 3, 2), rhs2, dec))
    rhs3 = LG(2, 2, 3) - 2 * LG(2, 3, 2) + 2 * LG(3, 2, 2)
    rep.add("item 3 modulo decomposables", "[[[x1,x3],x2],x2]", _congruent(th(1, 3, 2, 2), rhs3, dec))
    # coefficients of the basis brackets [..[Lambda, a], b], c] actually obtained
    for label, seq in (("item 2", (1, 2, 3, 2)), ("item 3", (1, 3, 2, 2))):
        img = th(*seq)
        rep.info[label + " computed"] = {
            "".join(map(str, s)): c
            for s in product((2, 3), repeat=3)
            if (c := leading_coefficient(img, n, s))
        }
    return rep


# ---------------------------------------------------------------------------
# further structure checks


def graded_face_check(n: int, max_degree: int) -> Report:
    """Dropping the last strand after Theta_n equals Theta_{n-1} after ``x_1 -> 0, x_q -> x_{q-1}``."""
    rep = Report(f"graded face square n={n}")
    for d in range(1, max_degree + 1):
        for w in lyndon_words(n, d):
            top = _theta_lyndon(n, w)
            lhs = KohnoElement(n, {m: p for m, p in top.components.items() if m <= n})
            if 0 in w:
                rhs = KohnoElement.zero(n)
            else:
                low = tuple(a - 1 for a in w)
                rhs = _theta_lyndon(n - 1, low) if n > 1 else KohnoElement.zero(n)
            rep.add("E0(d_n) Theta_n = Theta_(n-1) E0(d_n)", [n, list(w)], lhs == rhs)
    return rep


def p_map(x: KohnoElement, n: int) -> KohnoElement:
    """``B_{1,n+1} -> -(B_{2,n+1} + .. + B_{n,n+1})`` on the top summand, identity elsewhere."""
    top = x.components.get(n + 1, {})
    out: Poly = {}
    for w, c in top.items():
        terms = [{(a,): 1} if a else {(b,): -1 for b in range(1, n)} for a in w]
        acc = {(): c}
        for t in terms:
            acc = poly_mul(acc, t)
        out = poly_add(out, acc)
    comps = dict(x.components)
    comps[n + 1] = out
    return KohnoElement(x.strands, comps)


def p_theta_check(n: int, max_q: int) -> Report:
    """``p`` kills the image of every bracket ``[..[x_1, x_{j_1}] .. x_{j_q}]``."""
    rep = Report(f"p(theta) = 0, n={n}")
    rep.add("p(theta x_1) = 0", [n], p_map(theta_generator_graded(1, n), n).is_zero())
    for q in range(1, max_q + 1):
        for seq in product(range(2, n + 1), repeat=q):
            rep.add("p(theta bracket) = 0", list(seq), p_map(theta_bracket(n, [1, *seq]), n).is_zero())
    return rep


def degeneracy_graded(t: int, x: KohnoElement) -> KohnoElement:
    """Linear part of the AP degeneracy ``s_t`` on degree-one elements."""
    from .simplicial import _ap_degen_letter

    k = x.strands
    out = KohnoElement.zero(k + 1)
    for m, p in x.components.items():
        for w, c in p.items():
            if len(w) != 1:
                raise ValueError("only degree-one elements are supported")
            for i, j in _ap_degen_letter(t, w[0] + 1, m):
                out = out + c * KohnoElement.generator(i, j, k + 1)
    return out


def degeneracy_check(n: int) -> Report:
    """``s_j Lambda_n = Lambda_{n+1}`` for ``0 <= j < n``.

    The top degeneracy ``s_n`` is recorded in ``info``: it adds
    ``B_{1,n+1} + .. + B_{n,n+1}`` and so does not fix the family.
    """
    rep = Report(f"degeneracies of Lambda n={n}")
    for j in range(n):
        rep.add("s_j Lambda_n = Lambda_(n+1)", [n, j], degeneracy_graded(j, lambda_n(n)) == lambda_n(n + 1))
    rep.info["s_n Lambda_n == Lambda_(n+1)"] = degeneracy_graded(n, lambda_n(n)) == lambda_n(n + 1)
    return rep
