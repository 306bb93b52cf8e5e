"""Command-line entry point: ``braidlab <group> <command> ...``.

Exit status: 0 success, 1 a verification found failures, 2 usage or parse
error, 3 the request exceeds the selected ``--budget``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gradedlie as gl
from .braid import artin_action, braids_equal, parse_braid, verify_braid_relations, verify_pn_relations
from .holomorph import HolElement, chi_e_exchange_check, hol_homomorphism_check, pullback_check
from .lie import LieElement
from .reduced import kn_embed, kn_equal, kn_graded_rank
from .report import Report
from .simplicial import (
    family,
    is_moore_cycle,
    ks1_operators,
    moore_project,
    rho,
    simplicial_identity_check,
    theta,
)
from .verify import BudgetExceeded, get_budget, require, verify_all
from .words import Word, parse_word


class Failed(Exception):
    pass


def _emit(out, value) -> None:
    if isinstance(value, bool):
        value = "true" if value else "false"
    if isinstance(value, (dict, list)):
        value = json.dumps(value, indent=2, sort_keys=False)
    print(value, file=out)


def _report(rep: Report) -> dict:
    data = rep.to_json()
    if data["failures"]:
        raise Failed(json.dumps(data, indent=2))
    return data


# ---------------------------------------------------------------------------
# handlers; each returns the value to print


def braid_eq(a):
    return braids_equal(parse_braid(a.u, a.n), parse_braid(a.v, a.n))


def braid_act(a):
    f = artin_action(parse_braid(a.braid, a.n))
    if a.word is not None:
        return str(f(parse_word(a.word)))
    return "\n".join(f"x{i} -> {img}" for i, img in enumerate(f.images, 1))


def braid_verify(a):
    if a.n > a.budget_obj.braid_n:
        raise BudgetExceeded(f"n={a.n} exceeds budget {a.budget_obj.name} (n<={a.budget_obj.braid_n})")
    rep = verify_braid_relations(a.n)
    pn = verify_pn_relations(a.n)
    rep.extend(pn)
    rep.info.update(pn.info)
    return _report(rep)


def _hol(braid: str, word: str, n: int) -> HolElement:
    return HolElement.from_braid(parse_braid(braid, n), parse_word(word))


def hol_mul(a):
    h = _hol(a.braid1, a.word1, a.n) * _hol(a.braid2, a.word2, a.n)
    return {"automorphism": [str(w) for w in h.auto.images], "element": str(h.elem)}


def hol_verify(a):
    rep = pullback_check(a.n)
    rep.extend(hol_homomorphism_check(a.n, 20, a.seed))
    rep.extend(chi_e_exchange_check(20, a.n, a.seed))
    return _report(rep)


def kn_embed_cmd(a):
    s = kn_embed(parse_word(a.word), a.n)
    return s.to_json() if a.json else repr(s)


def kn_eq(a):
    return kn_equal(parse_word(a.u), parse_word(a.v), a.n)


def kn_rank(a):
    return kn_graded_rank(a.n, a.t)


def _simp_element(name: str, n: int, text: str):
    if name == "AP":
        return parse_braid(text, n + 1)
    w = parse_word(text)
    if name == "KS1":
        return rho(n, w)
    return w


def _simp_show(x, as_json: bool):
    if hasattr(x, "to_json"):
        return x.to_json() if as_json else repr(x)
    return str(x)


def _simp_op(a, kind: str):
    name = family(a.family).name
    x = _simp_element(name, a.n, a.element)
    if name == "KS1":
        return _simp_show(ks1_operators(kind, a.n, a.t, x), a.json)
    fam = family(name)
    op = fam.face if kind == "face" else fam.degeneracy
    return _simp_show(op(a.n, a.t, x), a.json)


def simp_face(a):
    return _simp_op(a, "face")


def simp_degen(a):
    return _simp_op(a, "degeneracy")


def simp_theta(a):
    return str(theta(a.n, parse_word(a.word)))


def simp_cycle(a):
    name = family(a.family).name
    x = parse_braid(a.element, a.n + 1) if name == "AP" else parse_word(a.element)
    return is_moore_cycle(name, a.n, x, chain_only=a.chain)


def simp_project(a):
    mc = moore_project(a.n, parse_braid(a.braid, a.n + 1), a.side)
    return {"chain": str(mc.element), "corrections": [str(c) for c in mc.corrections]}


def simp_verify(a):
    name = family(a.family).name
    b = a.budget_obj
    limit = b.simp_degree if name == "AP" else b.word_degree
    if a.max_degree > limit:
        raise BudgetExceeded(f"degree {a.max_degree} exceeds budget {b.name} ({name} <= {limit})")
    return _report(simplicial_identity_check(name, a.max_degree, a.samples, a.seed))


def lie_bracket(a):
    x = gl.parse_lie(a.a, a.n).bracket(gl.parse_lie(a.b, a.n))
    return x.to_json() if a.json else repr(x)


def kohno_normalize(a):
    x = gl.kohno_normalize(a.expr, a.k)
    if a.mod:
        x = x.mod(a.mod)
    return x.to_json() if a.json else repr(x)


def kohno_dim(a):
    return gl.kohno_dim(a.k, a.deg)


def theta_graded(a):
    x = gl.theta_graded(a.n, gl.parse_lie(a.expr, a.n))
    if a.mod:
        x = x.mod(a.mod)
    return x.to_json() if a.json else repr(x)


def theta_verify(a):
    require(a.budget_obj, a.n, a.max_degree)
    moduli = (a.mod,) if a.mod else (0,)
    rep = gl.theta_identities_check(a.n)
    rep.extend(gl.graded_face_check(a.n, a.max_degree))
    rep.extend(gl.p_theta_check(a.n, max(a.max_degree - 1, 1)))
    for d in range(1, a.max_degree + 1):
        for p in moduli:
            dim, r = gl.injectivity_rank(a.n, d, p)
            rep.add(f"full rank mod {p}" if p else "full rank over Q", [a.n, d, dim, r], dim == r)
    return _report(rep)


def appendix_check(a):
    return _report(gl.appendix_check())


def verify_all_cmd(a):
    only = set(a.only.split(",")) if a.only else None
    progress = None
    if a.verbose:
        progress = lambda e: print(f"{e['name']}: {e['instances_checked']} checked, {len(e['failures'])} failed, {e['seconds']}s", file=sys.stderr)  # noqa: E731
    rep = verify_all(a.budget_obj, a.seed, only, progress)
    text = json.dumps(rep, indent=2)
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text + "\n")
    if rep["failures"]:
        raise Failed(text if not a.out else f"{rep['failures']} failures; report in {a.out}")
    return text if not a.out else f"0 failures; report in {a.out}"


# ---------------------------------------------------------------------------
# parser


def _common() -> argparse.ArgumentParser:
    # global flags are accepted both before and after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--mod", type=int, default=argparse.SUPPRESS, help="prime modulus (0 = integers)")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--budget", default=argparse.SUPPRESS, help="smoke, standard or deep")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="braidlab", description=__doc__.splitlines()[0])
    parser.add_argument("--mod", type=int, default=0)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--budget", default="standard")
    parser.add_argument("--json", action="store_true", default=False)
    groups = parser.add_subparsers(dest="group", required=True)

    def group(name, help_):
        g = groups.add_parser(name, help=help_)
        return g.add_subparsers(dest="command", required=True)

    def cmd(sub, name, fn, help_=None):
        c = sub.add_parser(name, parents=[common], help=help_)
        c.set_defaults(func=fn)
        return c

    b = group("braid", "braid groups and the Artin action")
    c = cmd(b, "eq", braid_eq, "decide equality of two braid words")
    c.add_argument("u")
    c.add_argument("v")
    c.add_argument("--n", type=int, required=True)
    c = cmd(b, "act", braid_act, "Artin action on a word (or on every generator)")
    c.add_argument("braid")
    c.add_argument("word", nargs="?")
    c.add_argument("--n", type=int, required=True)
    c = cmd(b, "verify-relations", braid_verify)
    c.add_argument("--n", type=int, required=True)

    h = group("hol", "the holomorph of a free group")
    c = cmd(h, "mul", hol_mul, "multiply (braid1, word1)(braid2, word2)")
    for arg in ("braid1", "word1", "braid2", "word2"):
        c.add_argument(arg)
    c.add_argument("--n", type=int, required=True)
    c = cmd(h, "verify", hol_verify)
    c.add_argument("--n", type=int, required=True)

    k = group("kn", "reduced free groups")
    c = cmd(k, "embed", kn_embed_cmd)
    c.add_argument("word")
    c.add_argument("--n", type=int, required=True)
    c = cmd(k, "eq", kn_eq)
    c.add_argument("u")
    c.add_argument("v")
    c.add_argument("--n", type=int, required=True)
    c = cmd(k, "rank", kn_rank)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--t", type=int, required=True)

    s = group("simp", "simplicial groups")
    for name, fn in (("face", simp_face), ("degen", simp_degen)):
        c = cmd(s, name, fn)
        c.add_argument("element")
        c.add_argument("--family", required=True)
        c.add_argument("--n", type=int, required=True, help="simplicial degree of the element")
        c.add_argument("--t", type=int, required=True)
    c = cmd(s, "theta", simp_theta)
    c.add_argument("word")
    c.add_argument("--n", type=int, required=True)
    c = cmd(s, "cycle", simp_cycle)
    c.add_argument("element")
    c.add_argument("--family", default="FS1")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--chain", action="store_true", help="only require d_1..d_n to vanish")
    c = cmd(s, "project", simp_project)
    c.add_argument("braid")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--side", choices=("right", "left"), default="right")
    c = cmd(s, "verify", simp_verify)
    c.add_argument("--family", required=True)
    c.add_argument("--max-degree", type=int, required=True)
    c.add_argument("--samples", type=int, default=100)

    li = group("lie", "free Lie algebras")
    c = cmd(li, "bracket", lie_bracket)
    c.add_argument("a")
    c.add_argument("b")
    c.add_argument("--n", type=int, required=True, help="number of generators x1..xn")

    ko = group("kohno", "the graded Lie algebra of the pure braid group")
    c = cmd(ko, "normalize", kohno_normalize)
    c.add_argument("expr")
    c.add_argument("--k", type=int, required=True, help="number of strands")
    c = cmd(ko, "dim", kohno_dim)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--deg", type=int, required=True)

    t = group("theta", "the graded map of Theta")
    c = cmd(t, "graded", theta_graded)
    c.add_argument("expr")
    c.add_argument("--n", type=int, required=True)
    c = cmd(t, "verify", theta_verify)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--max-degree", type=int, required=True)

    a = group("appendix", "sample values of the graded Theta_3")
    cmd(a, "check", appendix_check)

    v = group("verify", "replay every suite")
    c = cmd(v, "all", verify_all_cmd)
    c.add_argument("--out")
    c.add_argument("--only", help="comma-separated suite names")
    c.add_argument("--verbose", action="store_true")
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.budget_obj = get_budget(args.budget)
        value = args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=err)
        return 3
    except Failed as exc:
        print(str(exc), file=out)
        return 1
    except (ValueError, IndexError, KeyError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    _emit(out, value)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
