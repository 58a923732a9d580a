"""Invariant suites behind ``verify``.  Output is plain deterministic text (no timings)."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterator, List, Tuple

from . import degrees, finvec, frobchar, hecke_gl, hodge, motive_inv, redsim, siegel
from .finvec import BudgetExceeded
from .poly import LaurentPoly, QONLY, VarSet, elementary_symmetric, sym_expand, sym_reduce

SUITES = ("poly", "hecke", "siegel", "geometry", "langlands")

Check = Tuple[str, Callable[[], object]]


@dataclass
class VerifyReport:
    lines: List[str] = field(default_factory=list)
    failed: int = 0
    passed: int = 0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_text(self) -> str:
        tail = "verify: %d checks, %d failed" % (self.passed + self.failed, self.failed)
        return "\n".join(self.lines + [tail]) + "\n"


def _run(report: VerifyReport, suite: str, checks: Iterator[Check]) -> None:
    for name, fn in checks:
        try:
            result = fn()
            ok, detail = (result if isinstance(result, tuple) else (result is not False, ""))
        except BudgetExceeded:
            raise
        except Exception as exc:  # reported, not raised: one failing identity should not hide the rest
            ok, detail = False, "%s: %s" % (type(exc).__name__, exc)
        if ok:
            report.passed += 1
            report.lines.append("PASS %s: %s" % (suite, name))
        else:
            report.failed += 1
            report.lines.append("FAIL %s: %s%s" % (suite, name, (": " + str(detail)) if detail else ""))


# --- poly -------------------------------------------------------------------


def _random_poly(rng: random.Random, vs: VarSet, terms: int = 4) -> LaurentPoly:
    d = {}
    for _ in range(terms):
        exps = tuple(rng.randint(-2, 2) for _ in range(vs.nvars))
        d[exps] = d.get(exps, 0) + Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return LaurentPoly(vs, d)


def poly_checks(max_r: int, seed: int) -> Iterator[Check]:
    rng = random.Random(seed)
    vs = VarSet.gl(3)

    def ring_axioms():
        for _ in range(40):
            a, b, c = (_random_poly(rng, vs) for _ in range(3))
            if (a + b) * c != a * c + b * c or a * b != b * a or (a * b) * c != a * (b * c):
                return False, "axiom failed for %s, %s, %s" % (a, b, c)
        return True

    def evaluate_hom():
        for _ in range(40):
            a, b = _random_poly(rng, vs), _random_poly(rng, vs)
            pt = {name: Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4)) for name in vs.names}
            if (a * b).evaluate(pt) != a.evaluate(pt) * b.evaluate(pt):
                return False, "evaluate is not multiplicative"
        return True

    yield "ring axioms (40 seeded triples)", ring_axioms
    yield "evaluate is a ring homomorphism", evaluate_hom
    for r in range(1, min(max_r, 4) + 1):
        def round_trip(r=r):
            v = VarSet.gl(r)
            names = v.names[:-1]
            sig = [elementary_symmetric(v, names, i) for i in range(r + 1)]
            for _ in range(10):
                p = LaurentPoly.q_power(v, rng.randint(-2, 2))
                for _ in range(rng.randint(0, 3)):
                    p = p * sig[rng.randint(1, r)] + LaurentPoly.const(v, rng.randint(-2, 2))
                if sym_expand(sym_reduce(p, names), v, names) != p:
                    return False, "round trip failed for %s" % p
            return True

        yield "sym_reduce round trip r=%d" % r, round_trip


# --- hecke (GL side) --------------------------------------------------------


def _table_226(r: int, j: int) -> str:
    if j == 1:
        return "T1 = fr + Phi1"
    if j < r:
        return "T%d = Q^-%d*fr*Phi%d + Phi%d" % (j, j - 1, j - 1, j)
    return "T%d = Q^-%d*fr*Phi%d" % (r, r - 1, r - 1)


def hecke_checks(max_r: int) -> Iterator[Check]:
    R = min(max_r, 6)
    for r in range(2, R + 1):
        def table(r=r):
            ctx = hecke_gl.GLContext(r, 1)
            for j in range(1, r + 1):
                got = hecke_gl.format_levi_expansion(ctx, j)
                if got != _table_226(r, j):
                    return False, "%r != %r" % (got, _table_226(r, j))
            return True

        yield "Levi expansion table n=1 r=%d" % r, table
    for r in range(1, R + 1):
        def levi_sums(r=r):
            for n in range(r + 1):
                ctx = hecke_gl.GLContext(r, n)
                for j in range(r + 1):
                    hecke_gl.levi_expand(ctx, j)  # asserts the sum
            return True

        yield "Levi expansion sums to T_j, r=%d, all n, j" % r, levi_sums

    for r in range(1, R + 1):
        for n in range(r + 1):
            ctx = hecke_gl.GLContext(r, n, quotient=True)
            Phi = lambda i, ctx=ctx: hecke_gl.satake_Phi(ctx, i)  # noqa: E731
            Psi = lambda i, ctx=ctx: hecke_gl.satake_Psi(ctx, i)  # noqa: E731
            T = lambda i, ctx=ctx: hecke_gl.satake_T(ctx, i)  # noqa: E731
            dual = hecke_gl.dual

            def d_T(r=r, T=T):
                return all(dual(T(i)).image == T(r - i).image for i in range(r + 1))

            def rel_a(r=r, n=n, Phi=Phi, Psi=Psi, ctx=ctx):
                lhs = (Psi(n) * Phi(r - n)).image
                return lhs == LaurentPoly.q_power(ctx.varset, n * (r - n))

            def d_Phi(r=r, n=n, Phi=Phi, Psi=Psi):
                return all(
                    dual(Phi(i)).image == (Psi(n) * Phi(r - n - i)).q_scale(-n * (r - n - i)).image
                    for i in range(r - n + 1))

            def d_Psi(r=r, n=n, Phi=Phi, Psi=Psi):
                return all(
                    dual(Psi(i)).image == (Psi(n - i) * Phi(r - n)).q_scale(-(n - i) * (r - n)).image
                    for i in range(n + 1))

            def involutive(r=r, n=n, Phi=Phi, Psi=Psi, T=T):
                elems = [T(i) for i in range(r + 1)] + [Phi(i) for i in range(r - n + 1)]
                elems += [Psi(i) for i in range(n + 1)]
                return all(dual(dual(e)).image == e.image for e in elems)

            tag = "r=%d n=%d" % (r, n)
            yield "hat T_i = T_{r-i} %s" % tag, d_T
            yield "Psi_n Phi_{r-n} = Q^{n(r-n)} %s" % tag, rel_a
            yield "hat Phi_i %s" % tag, d_Phi
            yield "hat Psi_i %s" % tag, d_Psi
            yield "hat is an involution %s" % tag, involutive

    for r in range(1, max(max_r, 1) + 1):
        yield "P_{%d,1} closed form" % r, lambda r=r: frobchar.hecke_charpoly(r, 1) == frobchar.closed_form_n1(r)
    for r in range(1, min(max_r, 5) + 1):
        def resub(r=r):
            for n in range(1, r + 1):
                poly = frobchar.hecke_charpoly(r, n)
                if frobchar.resubstitute(poly) != frobchar.orbit_product(r, n):
                    return False, "n=%d" % n
                if poly.degree != comb(r, n):
                    return False, "degree n=%d" % n
            return True

        yield "P_{%d,n} re-substitution and degree, all n" % r, resub
        yield "P_{%d,n} roots dualize to P_{%d,r-n}" % (r, r), \
            lambda r=r: all(frobchar.dual_root_check(r, n) for n in range(1, r + 1))
    for r in range(1, R + 1):
        for n in range(r + 1):
            def consistency(r=r, n=n):
                rep = degrees.consistency_report(r, n)
                return rep.ok, ", ".join(rep.failures)

            yield "degree consistency r=%d n=%d" % (r, n), consistency

    def vandermonde():
        for r in range(1, 7):
            for n in range(r + 1):
                for j in range(r + 1):
                    total = LaurentPoly.zero(QONLY)
                    for i in range(0, min(j, n) + 1):
                        total = total + (finvec.gaussian_binomial(i, n) * finvec.gaussian_binomial(j - i, r - n)
                                         * LaurentPoly.q_power(QONLY, (j - i) * (n - i)))
                    if total != finvec.gaussian_binomial(j, r):
                        return False, "r=%d n=%d j=%d" % (r, n, j)
        return True

    yield "q-Vandermonde symbolic r<=6", vandermonde


# --- siegel -----------------------------------------------------------------


def siegel_checks(max_r: int) -> Iterator[Check]:
    G = min(max(max_r - 1, 1), 4)
    for g in range(1, G + 1):
        ctx = siegel.SiegelContext(g)

        def tp_inv(ctx=ctx):
            return bool(siegel.is_weyl_invariant(siegel.satake_Tp(ctx)))

        def hats(g=g, ctx=ctx):
            return all(siegel.hat_siegel(siegel.satake_phi(ctx, i)) == siegel.satake_phi(ctx, g - i)
                       for i in range(g + 1))

        def charpoly(g=g, ctx=ctx):
            coeffs = siegel.siegel_frob_charpoly(g)
            return coeffs[-2] == -siegel.satake_Tp(ctx).image and len(coeffs) == 2 ** g + 1

        def orbit(g=g, ctx=ctx):
            return len(siegel.weyl_orbit(siegel.satake_phi(ctx, g))) == 2 ** g

        def levels(g=g, ctx=ctx):
            return all(siegel.is_levi_invariant(siegel.satake_phi(ctx, i)) for i in range(g + 1))

        yield "T_p is W_G-invariant g=%d" % g, tp_inv
        yield "hat Phi_i = Phi_{g-i} g=%d" % g, hats
        yield "Frobenius charpoly g=%d: degree 2^g, X^{2^g-1} coefficient -T_p" % g, charpoly
        yield "W_G-orbit of fr_M has 2^g elements g=%d" % g, orbit
        yield "Phi_i are M-level g=%d" % g, levels
    for g in (1, 2):
        for p in (2, 3):
            def lagr(g=g, p=p):
                got = finvec.count_lagrangian(g, p)
                prod = 1
                for i in range(1, g + 1):
                    prod *= p ** i + 1
                d1 = sum(siegel.siegel_degrees(g, i, p).d1 for i in range(g + 1))
                return got == prod == d1, "count %d, product %d, degree sum %s" % (got, prod, d1)

            def cen(g=g, p=p):
                c = redsim.census(redsim.ModelPoint.siegel(g, p), g)
                for row in c.rows:
                    prof = siegel.siegel_degrees(g, row.i, p)
                    if (row.classes, row.fiber) != (prof.d1s, prof.d1ns):
                        return False, "type %d" % row.i
                return c.ok

            yield "Lagrangian count g=%d p=%d" % (g, p), lagr
            yield "Siegel census vs degrees g=%d p=%d" % (g, p), cen


# --- geometry ---------------------------------------------------------------


def geometry_checks(max_r: int) -> Iterator[Check]:
    R = min(max_r, 4)
    for q in (2, 3):
        for r in range(1, R + 1):
            def counts(r=r, q=q):
                F = finvec.prime_field(q)
                for j in range(r + 1):
                    got = sum(1 for _ in finvec.enumerate_subspaces(r, j, F))
                    if got != finvec.gaussian_binomial(j, r, q):
                        return False, "j=%d: %d" % (j, got)
                return True

            yield "subspace counts r=%d q=%d" % (r, q), counts
    if max_r >= 5:
        yield "subspace counts r=5 j=1,2 q=2", lambda: all(
            sum(1 for _ in finvec.enumerate_subspaces(5, j, finvec.prime_field(2))) == finvec.gaussian_binomial(j, 5, 2)
            for j in (1, 2))

    for q in (2, 3):
        for r in range(1, R + 1):
            for n in range(r + 1):
                def cen(r=r, n=n, q=q):
                    t = redsim.ModelPoint.ordinary(r, n, q)
                    for j in range(r + 1):
                        c = redsim.census(t, j)
                        for row in c.rows:
                            prof = degrees.profile_summand(row.i, j, r, n, q)
                            if (row.classes, row.fiber) != (prof.d1s, prof.d1ns):
                                return False, "j=%d i=%d census (%d, %s) vs degrees (%s, %s)" % (
                                    j, row.i, row.classes, row.fiber, prof.d1s, prof.d1ns)
                    return True

                yield "census = degrees r=%d n=%d q=%d" % (r, n, q), cen

    def intersections():
        F = finvec.prime_field(2)
        subs = [W for j in range(4) for W in finvec.enumerate_subspaces(3, j, F)]
        return all(a.dim + b.dim == a.intersect(b).dim + a.span(b).dim for a, b in itertools.product(subs, subs))

    yield "dimension formula over all pairs in F_2^3", intersections

    def nonord():
        rep = redsim.nonordinary_census(redsim.ModelPoint.nonordinary(3, 2))
        return (rep.inside, rep.outside, rep.outside_classes) == (3, 4, 1)

    yield "non-ordinary point r=3 q=2 (CONJECTURAL model)", nonord

    def hodge_vectors():
        for g in range(1, 9):
            v = hodge.siegel_hodge(g)
            if v.total != 2 ** g or not v.is_symmetric:
                return False, "g=%d" % g
        for r in range(1, 11):
            for n in range(1, r + 1):
                v = hodge.unitary_hodge(r, n)
                if v.total != comb(r, n) or not v.is_symmetric:
                    return False, "r=%d n=%d" % (r, n)
                if n < r and v.entries != hodge.unitary_hodge(r, r - n).entries:
                    return False, "r=%d n=%d vs r-n" % (r, n)
        return hodge.siegel_hodge(2).entries == (1, 1, 1, 1) and hodge.unitary_hodge(4, 2).entries == (1, 1, 2, 1, 1)

    yield "Hodge vectors g<=8, r<=10", hodge_vectors

    def invariants():
        for r in range(1, 11):
            for n in range(r + 1):
                got = motive_inv.enumerate_invariants(r, n, 1)
                if [x.k for x in got] != [(r - n, n)]:
                    return False, "nu=1 r=%d n=%d" % (r, n)
        for r in range(1, 9):
            for n in range(0, 3 * r + 1):
                for inv in motive_inv.enumerate_invariants(r, n, 3):
                    if sum(motive_inv.to_weights(inv)) != -n:
                        return False, "weights %s" % (inv,)
        return True

    yield "nilpotent invariants nu=1 and weight sums", invariants


# --- langlands --------------------------------------------------------------


def langlands_checks(max_r: int, seed: int) -> Iterator[Check]:
    for r in range(1, min(max_r, 5) + 1):
        for n in range(1, r + 1):
            def oracle(r=r, n=n):
                rep = frobchar.langlands_oracle_check(r, n, 200, seed)
                return rep.ok, rep.summary()

            yield "Langlands oracle r=%d n=%d (200 trials, seed %d)" % (r, n, seed), oracle


def run_suites(suite: str = "all", max_r: int = 5, seed: int = 0) -> VerifyReport:
    if suite != "all" and suite not in SUITES:
        raise ValueError("unknown suite %r" % suite)
    if max_r < 1:
        raise ValueError("--max-r must be >= 1")
    report = VerifyReport()
    chosen = SUITES if suite == "all" else (suite,)
    for name in chosen:
        if name == "poly":
            _run(report, name, poly_checks(max_r, seed))
        elif name == "hecke":
            _run(report, name, hecke_checks(max_r))
        elif name == "siegel":
            _run(report, name, siegel_checks(max_r))
        elif name == "geometry":
            _run(report, name, geometry_checks(max_r))
        else:
            _run(report, name, langlands_checks(max_r, seed))
    return report
