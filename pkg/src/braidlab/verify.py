"""Suites that replay every checkable claim, grouped for ``verify all``.

Budgets bound the sizes swept.  ``standard`` is sized to cover the full
acceptance suite; ``smoke`` is for quick sanity runs, ``deep`` for long
ones.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement
from typing import Callable

from . import gradedlie as gl
from .braid import (
    BraidWord,
    conjugation_formula_check,
    random_pure_braid,
    verify_braid_relations,
    verify_pn_relations,
)
from .holomorph import chi_e_exchange_check, hol_homomorphism_check, pullback_check
from .reduced import expected_kn_rank, kn_embed, kn_graded_rank, relation_word
from .report import Report
from .simplicial import (
    ap_face,
    ap_relation_check,
    fs1_generator,
    is_moore_cycle,
    moore_project,
    psi_check,
    rho_check,
    simplicial_identity_check,
    theta,
    theta_generator,
    theta_morphism_check,
)
from .braid import braids_equal, pure_braids_equal
from .words import Word, commutator, commutator_identity_holds, hall_witt_check, random_word


class BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class Budget:
    name: str
    max_n: int  # graded theta / injectivity rank
    max_degree: int
    braid_n: int
    simp_degree: int  # AP
    word_degree: int  # FS1 / FDELTA1 / KS1
    kohno_k: int
    samples: int
    moduli: tuple = (0, 2, 3, 5)


BUDGETS = {
    "smoke": Budget("smoke", 3, 3, 4, 3, 3, 4, 20, (0, 2)),
    "standard": Budget("standard", 4, 5, 6, 5, 6, 6, 100),
    "deep": Budget("deep", 5, 6, 7, 6, 7, 7, 200),
}


def get_budget(name: str) -> Budget:
    try:
        return BUDGETS[name]
    except KeyError:
        raise ValueError(f"unknown budget {name!r}; choose from {sorted(BUDGETS)}") from None


def require(budget: Budget, n: int, d: int) -> None:
    if n > budget.max_n or d > budget.max_degree:
        raise BudgetExceeded(f"(n={n}, d={d}) exceeds budget {budget.name} (n<={budget.max_n}, d<={budget.max_degree})")


# ---------------------------------------------------------------------------
# small suites that do not live in a single module


def word_identity_suite(samples: int = 100, seed: int = 0) -> Report:
    rep = Report("commutator identities")
    rng = random.Random(seed)
    for k in range(samples):
        a, b, c = (random_word(rng, 3, 6) for _ in range(3))
        for idx, ok in enumerate(hall_witt_check(a, b, c), 1):
            rep.add(f"Hall-Witt {idx}", k, ok)
        rep.add("commutator identity", k, commutator_identity_holds(a, b, c))
    return rep


def kn_suite(max_n: int = 5, samples: int = 500, seed: int = 0) -> Report:
    rep = Report("reduced free groups")
    for n in range(1, max_n + 1):
        for t in range(1, n + 1):
            r = kn_graded_rank(n, t)
            rep.add("graded rank", [n, t, r], r == expected_kn_rank(n, t))
    rep.add("pinned rank", [3, 2], kn_graded_rank(3, 2) == 3)
    rep.add("pinned rank", [3, 3], kn_graded_rank(3, 3) == 2)
    rng = random.Random(seed)
    for k in range(samples):
        n = rng.randint(1, 4)
        w = relation_word(rng.randint(1, n), random_word(rng, n, 6))
        rep.add("relation word dies", [n, str(w)], kn_embed(w, n).is_one())
    return rep


def theta_pins() -> Report:
    rep = Report("theta generator values")
    A = lambda *pairs: BraidWord(len(pairs) and max(j for _, j in pairs), [(("A", i, j), 1) for i, j in pairs])  # noqa: E731
    rep.add("Theta x_1 in degree 1", "A[1,2]", braids_equal(theta_generator(1, 1), A((1, 2))))
    rep.add("Theta_2 x_1", "A[1,3] A[2,3]", braids_equal(theta_generator(1, 2), A((1, 3), (2, 3))))
    rep.add("Theta_2 x_2", "A[1,2] A[1,3]", braids_equal(theta_generator(2, 2), A((1, 2), (1, 3))))
    return rep


def moore_suite(max_degree: int = 4, samples: int = 100, seed: int = 0) -> Report:
    rep = Report("Moore chains")
    c = commutator(Word.gen(1), Word.gen(2))
    rep.add("[x1,x2] is a cycle in F[S^1]", 2, is_moore_cycle("FS1", 2, c))
    rep.add("theta [x1,x2] is a cycle in AP", 2, is_moore_cycle("AP", 2, theta(2, c)))
    rep.add("x1 is not a cycle", 2, not is_moore_cycle("FS1", 2, fs1_generator(1, 2)))
    rng = random.Random(seed)
    for n in range(1, max_degree + 1):
        for k in range(samples):
            g = random_pure_braid(rng, n + 1, rng.randint(1, 8))
            mc = moore_project(n, g)
            faces = all(pure_braids_equal(ap_face(t, mc.element), BraidWord(n)) for t in range(1, n + 1))
            again = moore_project(n, mc.element).element
            rep.add("project kills d_1..d_n", [n, k], faces)
            rep.add("project is idempotent", [n, k], pure_braids_equal(again, mc.element))
    return rep


def admissible_suite(max_n: int = 4, max_q: int = 4) -> Report:
    rep = Report("admissible brackets")
    for n in range(2, max_n + 1):
        for q in range(1, max_q + 1):
            for seq in combinations_with_replacement(range(2, n + 1), q):
                rep.add("theta bracket = Lambda/gamma bracket", [n, *seq], gl.admissible_bracket_check(n, seq))
    return rep


def kohno_suite(max_k: int = 6, rank_k: int = 5, rank_d: int = 4, moduli=(0, 2, 3, 5)) -> Report:
    rep = Report("Kohno algebra")
    for k in range(2, max_k + 1):
        for p in moduli:
            rep.extend(gl.kohno_relation_check(k, p))
    for k in range(2, rank_k + 1):
        rep.extend(gl.kohno_rank_check(k, rank_d))
    rep.add("pinned dimension", "kohno_dim(4,2) = 4", gl.kohno_dim(4, 2) == 4)
    return rep


def graded_theta_suite(max_n: int, max_degree: int) -> Report:
    rep = Report("graded theta")
    for n in range(1, max_n + 2):
        rep.extend(gl.theta_identities_check(n))
        rep.extend(gl.degeneracy_check(n))
    for n in range(1, max_n + 1):
        rep.extend(gl.graded_face_check(n, min(max_degree, 4)))
    for n in range(2, max_n + 1):
        rep.extend(gl.p_theta_check(n, 3))
    for n in range(2, 4):
        rep.extend(gl.leading_coefficient_check(n, 3))
    return rep


# ---------------------------------------------------------------------------
# orchestration


def suites(budget: Budget, seed: int = 0) -> list[tuple[str, Callable[[], Report]]]:
    b = budget
    out: list[tuple[str, Callable[[], Report]]] = []

    def braid():
        rep = Report("braid relations")
        for n in range(2, b.braid_n + 1):
            rep.extend(verify_braid_relations(n))
            r = verify_pn_relations(n)
            rep.extend(r)
            rep.info[f"literal relation 3, n={n}"] = r.info["literal relation 3"]
        return rep

    def faithful():
        rep = Report("conjugation and pullback")
        for n in range(2, min(b.max_n, 4) + 1):
            rep.extend(conjugation_formula_check(n))
            rep.extend(pullback_check(n))
        return rep

    def hol():
        rep = hol_homomorphism_check(3, b.samples // 2, seed)
        rep.extend(chi_e_exchange_check(b.samples // 2, 3, seed))
        return rep

    def simp():
        rep = Report("simplicial identities")
        rep.extend(simplicial_identity_check("AP", b.simp_degree, b.samples, seed))
        for name in ("FS1", "FDELTA1", "KS1"):
            rep.extend(simplicial_identity_check(name, b.word_degree, b.samples, seed))
        rep.extend(ap_relation_check(min(b.simp_degree, 3)))
        return rep

    def theta_simplicial():
        rep = theta_morphism_check(b.max_degree, 5, seed)
        rep.extend(theta_pins())
        rep.extend(psi_check(min(b.max_n, 4)))
        rep.extend(rho_check(3, b.samples // 2, seed))
        return rep

    def injectivity():
        return gl.injectivity_check(b.max_n, b.max_degree, b.moduli)

    out += [
        ("words", lambda: word_identity_suite(b.samples, seed)),
        ("braid", braid),
        ("faithfulness", faithful),
        ("holomorph", hol),
        ("reduced", lambda: kn_suite(5, 5 * b.samples, seed)),
        ("simplicial", simp),
        ("theta", theta_simplicial),
        ("moore", lambda: moore_suite(min(b.simp_degree, 4), b.samples, seed)),
        ("kohno", lambda: kohno_suite(b.kohno_k, min(b.kohno_k, 5), min(b.max_degree, 4), b.moduli)),
        ("graded theta", lambda: graded_theta_suite(b.max_n, b.max_degree)),
        ("admissible", lambda: admissible_suite(b.max_n, b.max_n)),
        ("injectivity", injectivity),
        ("appendix", gl.appendix_check),
    ]
    return out


def verify_all(budget: Budget, seed: int = 0, only=None, progress=None) -> dict:
    """Run every suite and assemble the machine-readable report."""
    report = {"config": {"budget": asdict(budget), "seed": seed}, "suites": []}
    for name, run in suites(budget, seed):
        if only and name not in only:
            continue
        start = time.perf_counter()
        rep = run()
        entry = rep.to_json()
        entry["name"] = name
        entry["seconds"] = round(time.perf_counter() - start, 3)
        report["suites"].append(entry)
        if progress:
            progress(entry)
    report["failures"] = sum(len(s["failures"]) for s in report["suites"])
    report["instances_checked"] = sum(s["instances_checked"] for s in report["suites"])
    return report
