"""Command-line interface.

Every subcommand prints canonical sorted sums on standard output, or JSON
with ``--json``.  Exit status: 0 on success, 1 when a verification suite
fails, 2 on parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import cohomology as coh
from . import duality
from . import generators as gen
from . import homology as hom
from . import invariants as inv
from . import kudo_araki as ka
from . import verify
from .expr import ParseError, looks_like_cohomology, parse_cohomology, parse_homology, parse_words
from .f2 import F2Sum


class UsageError(Exception):
    pass


# -- JSON shapes -----------------------------------------------------------

def coh_json(a: F2Sum) -> list:
    return [coh.to_json(x) for x in a]


def hom_json(m: hom.NakaokaMonomial) -> dict:
    return {"factors": [list(f) for f in m.factors], "iota": m.iota}


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _note(msg: str) -> None:
    print("note: " + msg, file=sys.stderr)


def _components(a: F2Sum) -> set:
    return {x.component for x in a.terms}


# -- subcommands -----------------------------------------------------------

def cmd_cup(args) -> int:
    a, b = parse_cohomology(args.a), parse_cohomology(args.b)
    ca, cb = _components(a), _components(b)
    note = None
    if a and b and not ca & cb:
        note = ("classes live on components %s and %s; cup products across "
                "components vanish" % (sorted(ca), sorted(cb)))
    res = coh.cup_sum(a, b, method=args.method)
    if note:
        _note(note)
    payload = coh_json(res)
    if args.json and note:
        payload = {"class": payload, "note": note}
    _emit(args, coh.render_sum(res), payload)
    return 0


def cmd_odot(args) -> int:
    res = coh.transfer_sum(parse_cohomology(args.a), parse_cohomology(args.b))
    _emit(args, coh.render_sum(res), coh_json(res))
    return 0


def cmd_coprod(args) -> int:
    if looks_like_cohomology(args.a):
        if args.transfer or args.cup:
            raise UsageError("--transfer/--cup select a homology coproduct; cohomology has one coproduct")
        res = coh.coproduct_sum(parse_cohomology(args.a))
        _emit(args, coh.render_tensor_sum(res),
              [[coh.to_json(x), coh.to_json(y)] for x, y in res])
        return 0
    a = parse_homology(args.a)
    cop = hom.transfer_coproduct if args.transfer else hom.cup_coproduct
    acc: set = set()
    for m in a.terms:
        acc ^= cop(m).terms
    res = F2Sum.from_set(acc)
    _emit(args, hom.render_tensor_sum(res), [[hom_json(x), hom_json(y)] for x, y in res])
    return 0


def cmd_pair(args) -> int:
    v = duality.pair_sum(parse_cohomology(args.x), parse_homology(args.m))
    _emit(args, str(v), v)
    return 0


def cmd_basis(args) -> int:
    if args.component < 0 or args.degree < 0:
        raise UsageError("component and degree must be non-negative")
    if args.homology:
        b = hom.basis(args.component, args.degree)
        _emit(args, "\n".join(hom.render_monomial(m) for m in b), [hom_json(m) for m in b])
    else:
        b = coh.basis(args.component, args.degree)
        _emit(args, "\n".join(coh.render_monomial(x) for x in b), [coh.to_json(x) for x in b])
    return 0


def cmd_normalize(args) -> int:
    acc: set = set()
    for w in parse_words(args.q):
        if w is not None:
            acc ^= ka.normalize(w).terms
    res = F2Sum.from_set(acc)
    text = " + ".join(ka.render_qseq(s) for s in res) if res else "0"
    _emit(args, text, [list(s) for s in res])
    return 0


def cmd_feshbach(args) -> int:
    if args.component < 0:
        raise UsageError("component must be non-negative")
    rows = gen.feshbach_generators(args.component)
    lines = ["%d  %s  %s" % (lam.level, lam, coh.render_monomial(g)) for lam, g in rows]
    payload = [{"level": lam.level, "partition": str(lam), "coefficients": list(lam.t),
                "generator": coh.to_json(g)} for lam, g in rows]
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_sw(args) -> int:
    if args.k < 0 or args.l < 0:
        raise UsageError("k and l must be non-negative")
    res = gen.sw_class(args.k, args.l, args.component)
    _emit(args, coh.render_sum(res), coh_json(res))
    return 0


def cmd_sw_coprod(args) -> int:
    if args.k < 0 or args.l < 0:
        raise UsageError("k and l must be non-negative")
    res = gen.sw_coproduct(args.k, args.l)
    _emit(args, coh.render_tensor_sum(res), [[coh.to_json(x), coh.to_json(y)] for x, y in res])
    return 0


def cmd_invt_map(args) -> int:
    a = parse_cohomology(args.x)
    if args.scale is None:
        res = inv.to_invariant_sum(a)
        payload = []
        for key, rep in sorted(inv.orbit_decompose(res).items(), key=lambda kv: kv[1]):
            if isinstance(key, coh.GatheredMonomial):
                rep = inv.standard_monomial(key)
            payload.append({"ground": rep.m, "size": len(inv.set_orbit(rep)),
                            "representative": [[list(inv._members(A)), e] for A, e in rep.exps]})
        _emit(args, inv.render_invariant(res), payload)
        return 0
    if args.scale < 1:
        raise UsageError("--scale must be at least 1")
    comps = _components(a)
    if len(comps) > 1:
        raise UsageError("scale quotients need a class on a single component, got %s" % sorted(comps))
    m = comps.pop() if comps else 0
    res = inv.scale_quotient_sum(a, args.scale, m)
    payload = {"families": res.k, "subscripts": res.n,
               "orbits": [[list(c) for c in r] for r in res.orbits]}
    _emit(args, inv.render_multisym(res), payload)
    return 0


def cmd_verify(args) -> int:
    try:
        results = verify.run(args.suite, args.max_component, args.max_degree)
    except KeyError:
        raise UsageError("unknown suite %r; choose from %s"
                         % (args.suite, ", ".join(list(verify.SUITES) + ["all"])))
    lines = []
    for r in results:
        lines.append(("PASS " if r.ok else "FAIL ") + r.summary())
        lines.extend("  " + f for f in r.failures)
    _emit(args, "\n".join(lines), [r.to_json() for r in results])
    return 0 if all(r.ok for r in results) else 1


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # the subcommand copy of --json has its own dest so that it cannot reset
    # a flag given before the subcommand
    top = argparse.ArgumentParser(add_help=False)
    top.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", dest="json_here",
                        help="emit JSON instead of text")
    p = argparse.ArgumentParser(prog="symhopf", parents=[top],
                                description="Hopf ring computations in the mod 2 cohomology "
                                            "of symmetric groups.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cup", parents=[common], help="cup product of two cohomology classes")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--method", choices=["filter", "direct"], default="filter",
                   help="matching enumeration: refinement filter over all matchings (default) "
                        "or direct enumeration of transport matrices")
    s.set_defaults(fn=cmd_cup)

    s = sub.add_parser("odot", parents=[common], help="transfer product of two cohomology classes")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(fn=cmd_odot)

    s = sub.add_parser("coprod", parents=[common], help="coproduct of a cohomology or homology class")
    s.add_argument("a")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--transfer", action="store_true", help="homology: coproduct dual to transfer")
    g.add_argument("--cup", action="store_true", help="homology: coproduct dual to cup (default)")
    s.set_defaults(fn=cmd_coprod)

    s = sub.add_parser("pair", parents=[common], help="pairing of a cohomology and a homology class")
    s.add_argument("x")
    s.add_argument("m")
    s.set_defaults(fn=cmd_pair)

    s = sub.add_parser("basis", parents=[common], help="additive basis in one bidegree")
    s.add_argument("--component", type=int, required=True)
    s.add_argument("--degree", type=int, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--homology", action="store_true", help="Nakaoka monomials")
    g.add_argument("--cohomology", action="store_true", help="gathered monomials (default)")
    s.set_defaults(fn=cmd_basis)

    s = sub.add_parser("normalize", parents=[common], help="admissible form of Kudo-Araki words")
    s.add_argument("q")
    s.set_defaults(fn=cmd_normalize)

    s = sub.add_parser("feshbach", parents=[common], help="Feshbach generators on one component")
    s.add_argument("--component", type=int, required=True)
    s.set_defaults(fn=cmd_feshbach)

    s = sub.add_parser("sw", parents=[common], help="Stiefel-Whitney class w(k, l)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--component", type=int, default=None,
                   help="component m (default 2^(k+l))")
    s.set_defaults(fn=cmd_sw)

    s = sub.add_parser("sw-coprod", parents=[common], help="coproduct of w(k, l) from bi-partitions")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.set_defaults(fn=cmd_sw_coprod)

    s = sub.add_parser("invt-map", parents=[common], help="image in symmetric invariants")
    s.add_argument("x")
    s.add_argument("--scale", type=int, default=None,
                   help="map to the scale-K quotient instead of the x_A model")
    s.set_defaults(fn=cmd_invt_map)

    s = sub.add_parser("verify", parents=[common], help="run a property suite")
    s.add_argument("suite", help="one of: %s, all" % ", ".join(verify.SUITES))
    s.add_argument("--max-component", type=int, default=None)
    s.add_argument("--max-degree", type=int, default=None)
    s.set_defaults(fn=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = args.json or getattr(args, "json_here", False)
    try:
        return args.fn(args)
    except ParseError as exc:
        print("parse error " + str(exc), file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def run(argv: List[str]) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
