"""Command-line front end.

Exit codes: 0 success, 1 a checked identity failed, 2 bad parameters,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import degrees, finvec, frobchar, hecke_gl, hodge, motive_inv, redsim, siegel
from .finvec import DEFAULT_BUDGET, BudgetExceeded
from .verify import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _emit(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError("--%s is required for %s" % (name.replace("_", "-"), args.command))


# --- subcommands ------------------------------------------------------------


def cmd_hecke_poly(args) -> int:
    _need(args, "r", "n")
    poly = frobchar.hecke_charpoly(args.r, args.n)
    if args.format == "json":
        print(frobchar.charpoly_json(poly))
    else:
        print(poly.to_text())
    return EXIT_OK


def _gl_element(args, quotient=False):
    _need(args, "r")
    ctx = hecke_gl.GLContext(args.r, args.n if args.n is not None else 1, quotient)
    if args.element == "T":
        _need(args, "i")
        return hecke_gl.satake_T(ctx, args.i)
    if args.element == "Phi":
        _need(args, "i")
        return hecke_gl.satake_Phi(ctx, args.i)
    if args.element == "Psi":
        _need(args, "i")
        return hecke_gl.satake_Psi(ctx, args.i)
    if args.element == "fr":
        return hecke_gl.frobenius(ctx)
    raise UsageError("element %r is not available on the GL side" % args.element)


def cmd_satake(args) -> int:
    if args.g is not None:
        ctx = siegel.SiegelContext(args.g)
        if args.element == "Tp":
            e = siegel.satake_Tp(ctx)
        elif args.element in ("Phi", "fr"):
            e = siegel.satake_phi(ctx, args.g if args.element == "fr" else _req_i(args))
        else:
            raise UsageError("Siegel elements are Tp, Phi, fr")
        label = "%s g=%d" % (args.element, args.g)
    else:
        e = _gl_element(args, args.quotient)
        label = "%s r=%d n=%d" % (args.element, e.context.r, e.context.n)
    if args.format == "json":
        print(_emit({"element": label, "level": e.level, "image": e.image.to_json_obj()}))
    else:
        print("%s: %s" % (label, e.image.to_text()))
    return EXIT_OK


def _req_i(args) -> int:
    _need(args, "i")
    return args.i


def cmd_expand(args) -> int:
    _need(args, "r", "n")
    ctx = hecke_gl.GLContext(args.r, args.n)
    js = [args.j] if args.j is not None else range(args.r + 1)
    if args.format == "json":
        out = []
        for j in js:
            out.append({"j": j, "terms": [t._asdict() for t in hecke_gl.levi_expand(ctx, j)]})
        print(_emit(out))
    else:
        for j in js:
            print(hecke_gl.format_levi_expansion(ctx, j))
    return EXIT_OK


def cmd_dual(args) -> int:
    e = _gl_element(args, quotient=True)
    d = hecke_gl.dual(e)
    levi = hecke_gl.express_in_levi_generators(d) if d.level != "G" else hecke_gl.express_in_T_generators(d)
    if args.format == "json":
        print(_emit({"image": d.image.to_json_obj(), "generators": levi.to_json_obj()}))
    else:
        print("hat %s%d = %s" % (args.element, args.i if args.i is not None else e.context.n, levi.to_text()))
        print("image: %s" % d.image.to_text())
    return EXIT_OK


def cmd_degrees(args) -> int:
    if args.g is not None:
        rows = [("Phi%d" % i,) + siegel.siegel_degrees(args.g, i, args.q).row() for i in range(args.g + 1)]
        if args.format == "json":
            print(_emit([dict(zip(("element", "d1s", "d1ns", "d2s", "d2ns"), row)) for row in rows]))
        else:
            sep = "," if args.format == "csv" else "  "
            print(sep.join(("element", "d1s", "d1ns", "d2s", "d2ns")))
            for row in rows:
                print(sep.join(row))
        return EXIT_OK
    _need(args, "r", "n")
    if args.format == "json":
        text = degrees.degree_table(args.r, args.n, args.q, "csv").splitlines()
        head = text[0].split(",")
        print(_emit([dict(zip(head, line.split(","))) for line in text[1:]]))
    else:
        sys.stdout.write(degrees.degree_table(args.r, args.n, args.q, args.format))
    rep = degrees.consistency_report(args.r, args.n, args.q)
    if args.format == "text":
        print(rep.to_text())
    elif not rep.ok:
        print(rep.to_text(), file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_count(args) -> int:
    if args.lagrangian:
        _need(args, "g")
        p = args.q if args.q is not None else 2
        got = finvec.count_lagrangian(args.g, p, args.budget)
        expect = 1
        for i in range(1, args.g + 1):
            expect *= p ** i + 1
        print("lagrangians g=%d p=%d: %d (expected %d)" % (args.g, p, got, expect))
        return EXIT_OK if got == expect else EXIT_FAIL
    _need(args, "r")
    if args.q is None:
        js = [args.j] if args.j is not None else range(args.r + 1)
        for j in js:
            print("g(%d,%d) = %s" % (j, args.r, finvec.gaussian_binomial(j, args.r).to_text()))
        return EXIT_OK
    F = finvec.prime_field(args.q)
    if args.j is None:
        out = finvec.count_census_csv(args.r, F, args.budget)
        sys.stdout.write(out)
        return EXIT_OK if ",False" not in out else EXIT_FAIL
    got = sum(1 for _ in finvec.enumerate_subspaces(args.r, args.j, F, args.budget))
    expect = finvec.gaussian_binomial(args.j, args.r, args.q)
    if args.format == "json":
        print(_emit({"r": args.r, "j": args.j, "q": args.q, "count": got, "gaussian": expect}))
    else:
        print("subspaces r=%d j=%d q=%d: %d (g = %d)" % (args.r, args.j, args.q, got, expect))
    return EXIT_OK if got == expect else EXIT_FAIL


def _model_point(args) -> redsim.ModelPoint:
    if args.q is None:
        raise UsageError("census needs a numeric --q")
    flavor = args.flavor
    if flavor == "siegel":
        _need(args, "g")
        return redsim.ModelPoint.siegel(args.g, args.q)
    _need(args, "r")
    if flavor == "ordinary":
        _need(args, "n")
        return redsim.ModelPoint.ordinary(args.r, args.n, args.q)
    if flavor == "nonordinary":
        return redsim.ModelPoint.nonordinary(args.r, args.q)
    if flavor == "quadratic":
        return redsim.ModelPoint.quadratic(args.r, args.q)
    _need(args, "n")
    return redsim.ModelPoint.unitary(args.r, args.n, args.q)


def cmd_census(args) -> int:
    t = _model_point(args)
    j = args.j if args.j is not None else (t.g if t.flavor == "siegel" else None)
    if t.flavor in ("nonordinary", "quadratic") and args.nonordinary:
        rep = redsim.nonordinary_census(t, j or 1, args.budget)
        print(_emit(rep.to_json_obj()) if args.format == "json" else rep.to_text())
        return EXIT_OK
    if j is None:
        raise UsageError("--j is required for census")
    c = redsim.census(t, j, strict=False, budget=args.budget)
    if args.format == "csv":
        sys.stdout.write(c.to_csv())
    elif args.format == "json":
        print(_emit(c.to_json_obj()))
    else:
        print(c.to_text())
    if not c.ok:
        print("census does not match the closed forms", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_hodge(args) -> int:
    if args.g is not None:
        v = hodge.siegel_hodge(args.g)
    else:
        _need(args, "r", "n")
        v = hodge.unitary_hodge(args.r, args.n, functional=args.functional)
    print(hodge.hodge_json(v) if args.format == "json" else v.to_text())
    return EXIT_OK


def cmd_invariants(args) -> int:
    if args.k:
        nu = len(args.k) - 1
        v = motive_inv.validate(nu, args.k, args.r, args.n)
        if args.format == "json":
            print(_emit({"nu": nu, "k": args.k, "valid": v.ok, "diagnostics": list(v.diagnostics)}))
        else:
            print("nu=%d k=%s: %s" % (nu, tuple(args.k), "valid" if v.ok else "invalid"))
            for d in v.diagnostics:
                print("  " + d)
        return EXIT_OK
    _need(args, "r", "n")
    items = motive_inv.enumerate_invariants(args.r, args.n, args.nu_max)
    if args.format == "json":
        print(motive_inv.invariants_json(items))
        return EXIT_OK
    print("invariants r=%d n=%d nu<=%d: %d tuples (Levi blocks CONJECTURAL)" % (args.r, args.n, args.nu_max, len(items)))
    for inv in items:
        blocks = ",".join("%d%s" % (b.size, "*" if b.zero else "") for b in motive_inv.levi_blocks(inv))
        weights = ",".join(map(str, motive_inv.to_weights(inv)))
        print("  nu=%d k=%s weights=(%s) blocks=(%s)" % (inv.nu, ",".join(map(str, inv.k)), weights, blocks))
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = run_suites(args.suite, args.max_r, args.seed)
    sys.stdout.write(rep.to_text())
    return EXIT_OK if rep.ok else EXIT_FAIL


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hecke-reduction", description="Hecke algebra, Satake and reduction-type computations.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, formats=("text", "json"), help=None):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=fn)
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        return sp

    def rn(sp, j=False, i=False):
        sp.add_argument("--r", type=int)
        sp.add_argument("--n", type=int)
        if j:
            sp.add_argument("--j", type=int)
        if i:
            sp.add_argument("--i", type=int)

    sp = add("hecke-poly", cmd_hecke_poly, help="the Hecke polynomial P_{r,n}")
    rn(sp)
    sp = add("satake", cmd_satake, help="Satake images")
    rn(sp, i=True)
    sp.add_argument("--g", type=int)
    sp.add_argument("--element", choices=("T", "Phi", "Psi", "fr", "Tp"), default="T")
    sp.add_argument("--quotient", action="store_true")
    sp = add("expand", cmd_expand, help="Levi expansion of T_j")
    rn(sp, j=True)
    sp = add("dual", cmd_dual, help="hat involution")
    rn(sp, i=True)
    sp.add_argument("--element", choices=("T", "Phi", "Psi", "fr"), default="T")
    sp = add("degrees", cmd_degrees, ("text", "json", "csv"), help="bidegree table and consistency report")
    rn(sp)
    sp.add_argument("--g", type=int)
    sp.add_argument("--q", type=int)
    sp = add("count", cmd_count, help="subspace counts")
    rn(sp, j=True)
    sp.add_argument("--q", type=int)
    sp.add_argument("--g", type=int)
    sp.add_argument("--lagrangian", action="store_true")
    sp = add("census", cmd_census, ("text", "json", "csv"), help="reduction census")
    rn(sp, j=True)
    sp.add_argument("--g", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--flavor", choices=("ordinary", "siegel", "nonordinary", "quadratic", "unitary"), default="ordinary")
    sp.add_argument("--nonordinary", action="store_true", help="inside/outside-D report for j=1")
    sp = add("hodge", cmd_hodge, help="Hodge vectors")
    rn(sp)
    sp.add_argument("--g", type=int)
    sp.add_argument("--functional", action="store_true")
    sp = add("invariants", cmd_invariants, help="nilpotent invariants")
    rn(sp)
    sp.add_argument("--nu-max", type=int, default=3)
    sp.add_argument("--k", type=int, nargs="+")
    sp = add("verify", cmd_verify, formats=("text",), help="invariant suites")
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--max-r", type=int, default=5)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "q", None) is not None and args.q < 2:
        print("error: --q must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except AssertionError as exc:
        print("assertion failed: %s" % exc, file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
