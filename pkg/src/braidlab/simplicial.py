"""Simplicial groups AP_*, F[S^1], F[Delta[1]], K[S^1] and the maps between them.

Degree conventions:

* ``AP`` in degree ``n`` is ``P_{n+1}``, elements are braid words in the
  letters ``A_{i,j}``.  Faces delete a strand, degeneracies double one.
* ``FS1`` in degree ``n`` is free on ``x_1(n) .. x_n(n)`` where
  ``x_q(n)`` is the Milnor generator ``<0^(n+1-q) 1^q>``.  Hence
  ``d_i(x_q) = x_q`` for ``i <= n-q`` (with ``x_n(n-1) = 1``) and
  ``x_{q-1}`` otherwise (with ``x_0 = 1``); ``s_i(x_q) = x_q`` for
  ``i <= n-q`` and ``x_{q+1}`` otherwise.
* ``FDELTA1`` in degree ``n`` is free on ``g_i = <0^i 1^(n+1-i)>``,
  ``i = 1..n+1``, with basepoint ``<1^(n+1)>``.
* ``KS1`` is ``FS1`` read in the reduced free group (equality by
  :func:`braidlab.reduced.kn_equal`).

The loop group of AP uses the decalage that drops the last face:
``(E AP)_n = P_{n+2}`` with faces ``d_0..d_n`` and degeneracies
``s_0..s_n``; ``d_{n+1}`` is the structure map, whose kernel is free on
``A_{1,n+2} .. A_{n+1,n+2}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .braid import (
    BraidWord,
    braids_equal,
    pn_relation_instances,
    pure_braids_equal,
    random_pure_braid,
    word_to_braid,
)
from .reduced import SquareFreeSeries, kn_embed, kn_equal
from .report import Report
from .words import Word, random_word

__all__ = [
    "ap_face",
    "ap_degeneracy",
    "fs1_face",
    "fs1_degeneracy",
    "fdelta1_face",
    "fdelta1_degeneracy",
    "fs1_generator",
    "theta_generator",
    "theta",
    "FAMILIES",
    "SimplicialFamily",
    "family",
    "is_moore_cycle",
    "MooreChain",
    "moore_project",
    "omega_ap_generators",
    "psi",
    "psi_check",
    "ks1_operators",
    "rho",
    "rho_check",
    "simplicial_identity_check",
    "theta_morphism_check",
    "ap_relation_check",
]


# ---------------------------------------------------------------------------
# AP_*


def _ap_face_letter(t: int, i: int, j: int) -> list[tuple[int, int]]:
    p = t + 1
    if p < i:
        return [(i - 1, j - 1)]
    if p == i or p == j:
        return []
    if i < p < j:
        return [(i, j - 1)]
    return [(i, j)]


def _ap_degen_letter(t: int, i: int, j: int) -> list[tuple[int, int]]:
    p = t + 1
    if p < i:
        return [(i + 1, j + 1)]
    if p == i:
        return [(i, j + 1), (i + 1, j + 1)]
    if i < p < j:
        return [(i, j + 1)]
    if p == j:
        return [(i, j), (i, j + 1)]
    return [(i, j)]


def _ap_apply(b: BraidWord, rule, strands: int) -> BraidWord:
    letters = []
    for letter, e in b.letters:
        if letter[0] != "A":
            raise ValueError("AP operators act on words in the A_{i,j} letters only")
        img = [(("A", r, s), 1) for r, s in rule(letter[1], letter[2])]
        if e < 0:
            img = [(l, -1) for l, _ in reversed(img)]
        letters.extend(img * abs(e))
    return BraidWord(strands, letters)


def ap_face(t: int, b: BraidWord) -> BraidWord:
    """``d_t: P_{n+1} -> P_n`` for ``0 <= t <= n``."""
    n = b.strands - 1
    if not 0 <= t <= n or n < 1:
        raise ValueError(f"face d_{t} undefined in degree {n}")
    return _ap_apply(b, lambda i, j: _ap_face_letter(t, i, j), n)


def ap_degeneracy(t: int, b: BraidWord) -> BraidWord:
    """``s_t: P_{n+1} -> P_{n+2}`` for ``0 <= t <= n``."""
    n = b.strands - 1
    if not 0 <= t <= n:
        raise ValueError(f"degeneracy s_{t} undefined in degree {n}")
    return _ap_apply(b, lambda i, j: _ap_degen_letter(t, i, j), n + 2)


# ---------------------------------------------------------------------------
# F[S^1] and F[Delta[1]]


def _check_op(t: int, n: int, face: bool) -> None:
    if not 0 <= t <= n or (face and n < 1):
        kind = "face d" if face else "degeneracy s"
        raise ValueError(f"{kind}_{t} undefined in degree {n}")


def fs1_face(n: int, t: int, w: Word) -> Word:
    _check_op(t, n, True)

    def f(q):
        if t <= n - q:
            return q if q < n else None
        return q - 1 if q > 1 else None

    return w.map_generators(f)


def fs1_degeneracy(n: int, t: int, w: Word) -> Word:
    _check_op(t, n, False)
    return w.map_generators(lambda q: q if t <= n - q else q + 1)


def fdelta1_face(n: int, t: int, w: Word) -> Word:
    _check_op(t, n, True)
    return w.map_generators(lambda i: (i - 1 or None) if t < i else i)


def fdelta1_degeneracy(n: int, t: int, w: Word) -> Word:
    _check_op(t, n, False)
    return w.map_generators(lambda i: i + 1 if t < i else i)


@lru_cache(maxsize=None)
def fs1_generator(q: int, n: int) -> Word:
    """``x_q(n)`` built by the degeneracy recursion from ``x_1(1)``."""
    if not 1 <= q <= n:
        raise ValueError(f"x_{q}({n}) out of range")
    if n == 1:
        return Word.gen(1)
    if q == 1:
        return fs1_degeneracy(n - 1, 0, fs1_generator(1, n - 1))
    return fs1_degeneracy(n - 1, n - 1, fs1_generator(q - 1, n - 1))


@lru_cache(maxsize=None)
def theta_generator(q: int, n: int) -> BraidWord:
    """``Theta(x_q(n))`` in ``P_{n+1}``, by the same recursion applied to ``A_{1,2}``."""
    if not 1 <= q <= n:
        raise ValueError(f"x_{q}({n}) out of range")
    if n == 1:
        return BraidWord.agen(1, 2, 2)
    if q == 1:
        return ap_degeneracy(0, theta_generator(1, n - 1))
    return ap_degeneracy(n - 1, theta_generator(q - 1, n - 1))


def theta(n: int, w: Word) -> BraidWord:
    if w.max_index() > n:
        raise ValueError(f"{w} is not in F[S^1]_{n}")
    return word_to_braid(w, [theta_generator(q, n) for q in range(1, n + 1)], n + 1)


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class SimplicialFamily:
    name: str
    face: Callable  # (n, t, x) -> x
    degeneracy: Callable
    generators: Callable  # n -> list
    equal: Callable  # (n, a, b) -> bool
    identity: Callable  # n -> element
    random_element: Callable  # (rng, n) -> element

    def is_identity(self, n: int, x) -> bool:
        return self.equal(n, x, self.identity(n))


def _words(rank_of: Callable[[int], int]):
    def gens(n):
        return [Word.gen(i) for i in range(1, rank_of(n) + 1)]

    def rnd(rng, n):
        k = rank_of(n)
        return random_word(rng, k, 8) if k else Word.identity()

    return gens, rnd


_fs1_gens, _fs1_rnd = _words(lambda n: n)
_fd_gens, _fd_rnd = _words(lambda n: n + 1)


def _ap_gens(n: int) -> list[BraidWord]:
    N = n + 1
    return [BraidWord.agen(i, j, N) for j in range(2, N + 1) for i in range(1, j)]


FAMILIES: dict[str, SimplicialFamily] = {
    "AP": SimplicialFamily(
        "AP",
        lambda n, t, b: ap_face(t, b),
        lambda n, t, b: ap_degeneracy(t, b),
        _ap_gens,
        lambda n, a, b: pure_braids_equal(a, b),
        lambda n: BraidWord(n + 1),
        lambda rng, n: random_pure_braid(rng, n + 1, rng.randint(1, 8)),
    ),
    "FS1": SimplicialFamily(
        "FS1", fs1_face, fs1_degeneracy, _fs1_gens,
        lambda n, a, b: a == b, lambda n: Word.identity(), _fs1_rnd,
    ),
    "FDELTA1": SimplicialFamily(
        "FDELTA1", fdelta1_face, fdelta1_degeneracy, _fd_gens,
        lambda n, a, b: a == b, lambda n: Word.identity(), _fd_rnd,
    ),
    "KS1": SimplicialFamily(
        "KS1", fs1_face, fs1_degeneracy, _fs1_gens,
        lambda n, a, b: kn_equal(a, b, max(n, 1)), lambda n: Word.identity(), _fs1_rnd,
    ),
}


def family(name: str) -> SimplicialFamily:
    try:
        return FAMILIES[name.upper()]
    except KeyError:
        raise ValueError(f"unknown simplicial family {name!r}") from None


def simplicial_identity_check(name: str, max_degree: int, samples: int = 100, seed: int = 0) -> Report:
    """All five simplicial identity families on generators and random elements.

    ``n`` runs over source degrees ``0..max_degree``.
    """
    fam = family(name)
    rep = Report(f"simplicial identities {fam.name}")
    rng = random.Random(seed)
    d, s, eq = fam.face, fam.degeneracy, fam.equal
    for n in range(max_degree + 1):
        elems = [("gen", g) for g in fam.generators(n)]
        elems += [("random", fam.random_element(rng, n)) for _ in range(samples)]
        for kind, x in elems:
            tag = lambda *ij: [n, *ij, kind]  # noqa: E731
            if n >= 2:
                for j in range(n + 1):
                    for i in range(j):
                        rep.add("d_i d_j = d_(j-1) d_i", tag(i, j), eq(n - 2, d(n - 1, i, d(n, j, x)), d(n - 1, j - 1, d(n, i, x))))
            for j in range(n + 1):
                sj = s(n, j, x)
                for i in range(j + 1):
                    rep.add("s_i s_j = s_(j+1) s_i", tag(i, j), eq(n + 2, s(n + 1, i, sj), s(n + 1, j + 1, s(n, i, x))))
                for i in range(n + 2):
                    lhs = d(n + 1, i, sj)
                    if i < j:
                        rep.add("d_i s_j = s_(j-1) d_i", tag(i, j), eq(n, lhs, s(n - 1, j - 1, d(n, i, x))))
                    elif i in (j, j + 1):
                        rep.add("d_j s_j = d_(j+1) s_j = id", tag(i, j), eq(n, lhs, x))
                    else:
                        rep.add("d_i s_j = s_j d_(i-1)", tag(i, j), eq(n, lhs, s(n - 1, j, d(n, i - 1, x))))
    return rep


def ap_relation_check(max_degree: int) -> Report:
    """Faces and degeneracies of AP send every P_n relation instance to a valid identity."""
    rep = Report("AP operators respect relations")
    for n in range(1, max_degree + 1):
        for check, inst, lhs, rhs in pn_relation_instances(n + 1):
            for t in range(n + 1):
                rep.add(f"d_t {check}", [n, t] + inst, braids_equal(ap_face(t, lhs), ap_face(t, rhs)))
                rep.add(f"s_t {check}", [n, t] + inst, braids_equal(ap_degeneracy(t, lhs), ap_degeneracy(t, rhs)))
    return rep


def theta_morphism_check(max_degree: int, samples: int = 0, seed: int = 0) -> Report:
    """``Theta d_t = d_t Theta`` and ``Theta s_t = s_t Theta`` on generators (plus random words)."""
    rep = Report("theta is simplicial")
    rng = random.Random(seed)
    for n in range(1, max_degree + 1):
        elems = [fs1_generator(q, n) for q in range(1, n + 1)]
        elems += [random_word(rng, n, 6) for _ in range(samples)]
        for x in elems:
            tx = theta(n, x)
            for t in range(n + 1):
                if n >= 2:
                    rep.add("theta d_t", [n, t, str(x)], braids_equal(theta(n - 1, fs1_face(n, t, x)), ap_face(t, tx)))
                else:
                    # degree 0 is the trivial group on both sides
                    rep.add("theta d_t", [n, t, str(x)], fs1_face(n, t, x).is_identity() and ap_face(t, tx).strands == 1)
                rep.add("theta s_t", [n, t, str(x)], braids_equal(theta(n + 1, fs1_degeneracy(n, t, x)), ap_degeneracy(t, tx)))
    return rep


# ---------------------------------------------------------------------------
# Moore chains


def is_moore_cycle(name: str, n: int, x, chain_only: bool = False) -> bool:
    """All faces trivial (``d_0..d_n``), or only ``d_1..d_n`` with ``chain_only``."""
    fam = family(name)
    if n < 1:
        return True
    start = 1 if chain_only else 0
    return all(fam.is_identity(n - 1, fam.face(n, t, x)) for t in range(start, n + 1))


@dataclass
class MooreChain:
    degree: int
    element: BraidWord
    corrections: list = field(default_factory=list)

    def __post_init__(self):
        if not is_moore_cycle("AP", self.degree, self.element, chain_only=True):
            raise ValueError("element is not a Moore chain")


def moore_project(n: int, gamma: BraidWord, side: str = "right") -> MooreChain:
    """Representative of ``gamma`` killed by ``d_1 .. d_n``.

    Faces are cleared from ``d_n`` down to ``d_1``: the correction
    ``s_(i-1) d_i c`` leaves every higher face trivial, while the ascending
    order would reintroduce ``d_(i-1)``.
    """
    if gamma.strands != n + 1:
        raise ValueError(f"expected a braid on {n + 1} strands")
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    c = gamma
    corrections = []
    for i in range(n, 0, -1):
        k = ap_degeneracy(i - 1, ap_face(i, c))
        corrections.append(k)
        c = c * k.inverse() if side == "right" else k.inverse() * c
    return MooreChain(n, c, corrections)


# ---------------------------------------------------------------------------
# loops


def omega_ap_generators(n: int) -> list[BraidWord]:
    """Free generators ``A_{1,n+2} .. A_{n+1,n+2}`` of the kernel of ``d_{n+1}: P_{n+2} -> P_{n+1}``."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    N = n + 2
    return [BraidWord.agen(j, N, N) for j in range(1, N)]


def psi(n: int, w: Word) -> BraidWord:
    """``Psi: F[Delta[1]]_n -> P_{n+2}``, ``g_i -> A_{1,n+2} A_{2,n+2} .. A_{i,n+2}``."""
    N = n + 2
    images = [BraidWord(N, [(("A", j, N), 1) for j in range(1, i + 1)]) for i in range(1, n + 2)]
    return word_to_braid(w, images, N)


def psi_check(n: int) -> Report:
    """Generator bijection and operator compatibility of ``Psi`` in degrees ``0..n``."""
    rep = Report(f"psi degrees <= {n}")
    for m in range(n + 1):
        gens = [Word.gen(i) for i in range(1, m + 2)]
        omega = omega_ap_generators(m)
        for i, g in enumerate(gens, 1):
            prev = psi(m, gens[i - 2]) if i > 1 else BraidWord(m + 2)
            rep.add("generator bijection", [m, i], braids_equal(prev.inverse() * psi(m, g), omega[i - 1]))
            rep.add("loop membership", [m, i], braids_equal(ap_face(m + 1, psi(m, g)), BraidWord(m + 1)))
            for t in range(m + 1):
                if m >= 1:
                    rep.add("face", [m, t, i], braids_equal(psi(m - 1, fdelta1_face(m, t, g)), ap_face(t, psi(m, g))))
                rep.add("degeneracy", [m, t, i], braids_equal(psi(m + 1, fdelta1_degeneracy(m, t, g)), ap_degeneracy(t, psi(m, g))))
        for r in omega:
            rep.add("kernel of structure map", [m, str(r)], braids_equal(ap_face(m + 1, r), BraidWord(m + 1)))
    return rep


# ---------------------------------------------------------------------------
# K[S^1]


def _fs1_label_map(kind: str, n: int, t: int) -> Callable[[int], int | None]:
    op = fs1_face if kind == "face" else fs1_degeneracy
    rank = n
    table = {}
    for q in range(1, rank + 1):
        img = op(n, t, Word.gen(q))
        table[q] = img.letters[0][0] if img.letters else None
    return table.get


def ks1_operators(kind: str, n: int, t: int, x: SquareFreeSeries) -> SquareFreeSeries:
    """Face or degeneracy of ``K[S^1]`` acting on normal forms.

    Generators are relabelled as in ``FS1``; a generator sent to the
    identity sends its ``X`` to zero, and merged indices vanish.
    """
    if kind not in ("face", "degeneracy"):
        raise ValueError("kind must be 'face' or 'degeneracy'")
    _check_op(t, n, kind == "face")
    f = _fs1_label_map(kind, n, t)
    target = n - 1 if kind == "face" else n + 1
    out: dict[tuple, int] = {}
    for key, v in x.terms.items():
        img = tuple(f(i) for i in key)
        if None in img or len(set(img)) < len(img):
            continue
        out[img] = out.get(img, 0) + v
    return SquareFreeSeries(max(target, 1), out)


def rho(n: int, w: Word) -> SquareFreeSeries:
    """The quotient ``F[S^1]_n -> K[S^1]_n`` in normal form."""
    return kn_embed(w, max(n, 1))


def rho_check(max_degree: int, samples: int = 50, seed: int = 0) -> Report:
    rep = Report("rho commutes with operators")
    rng = random.Random(seed)
    for n in range(1, max_degree + 1):
        words = [Word.gen(q) for q in range(1, n + 1)] + [random_word(rng, n, 8) for _ in range(samples)]
        for w in words:
            for t in range(n + 1):
                rep.add("face", [n, t, str(w)], rho(n - 1, fs1_face(n, t, w)) == ks1_operators("face", n, t, rho(n, w)))
                rep.add("degeneracy", [n, t, str(w)], rho(n + 1, fs1_degeneracy(n, t, w)) == ks1_operators("degeneracy", n, t, rho(n, w)))
    return rep
