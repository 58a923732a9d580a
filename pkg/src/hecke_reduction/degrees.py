"""Bidegrees (d1s, d1ns, d2s, d2ns) of the named correspondences.

First-projection degrees of Phi_i and Psi_i are the closed forms; products are
taken multiplicatively, and a scalar Q^k multiplies both non-separable
degrees.  Second-projection degrees are never postulated: an element is
dualized in the Hecke algebra, rewritten in Levi generators, and d2(C) is read
off as d1 of the dual.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import List, Tuple, Union

from .finvec import gaussian_binomial
from .hecke_gl import (
    GLContext,
    HeckeElement,
    dual,
    express_in_levi_generators,
    satake_Phi,
    satake_Psi,
)
from .poly import QONLY, LaurentPoly

Degree = Union[int, LaurentPoly]


def q_power(e: int, q=None) -> Degree:
    if q is None:
        return LaurentPoly.q_power(QONLY, e)
    if e < 0:
        from fractions import Fraction

        return Fraction(1, q ** -e)
    return q ** e


def _fmt(x: Degree) -> str:
    return x.to_text() if isinstance(x, LaurentPoly) else str(x)


@dataclass(frozen=True)
class BidegreeProfile:
    d1s: Degree
    d1ns: Degree
    d2s: Degree
    d2ns: Degree

    @property
    def d1(self) -> Degree:
        return self.d1s * self.d1ns

    @property
    def d2(self) -> Degree:
        return self.d2s * self.d2ns

    def swapped(self) -> "BidegreeProfile":
        return BidegreeProfile(self.d2s, self.d2ns, self.d1s, self.d1ns)

    def at(self, q: int) -> "BidegreeProfile":
        def ev(x):
            return x.evaluate({"Q": q}) if isinstance(x, LaurentPoly) else x

        return BidegreeProfile(ev(self.d1s), ev(self.d1ns), ev(self.d2s), ev(self.d2ns))

    def row(self) -> Tuple[str, str, str, str]:
        return tuple(_fmt(x) for x in (self.d1s, self.d1ns, self.d2s, self.d2ns))


class UnsupportedElement(ValueError):
    pass


def _check_rn(r: int, n: int) -> None:
    if r < 1 or not 0 <= n <= r:
        raise ValueError("need r >= 1 and 0 <= n <= r")


def d1_of_monomial(poly: LaurentPoly, r: int, n: int, q=None) -> Tuple[Degree, Degree]:
    """(d1s, d1ns) of Q^s prod Phi_b^e prod Psi_a^e, multiplicatively from the closed forms."""
    if len(poly) != 1:
        raise UnsupportedElement("degrees are defined here for single generator monomials, got %s" % poly)
    (exps, coeff), = poly.items()
    if coeff != 1:
        raise UnsupportedElement("non-unit coefficient %s" % coeff)
    ds: Degree = 1 if q is not None else LaurentPoly.const(QONLY, 1)
    dns_exp = exps[-1]
    for name, e in zip(poly.varset.names, exps):
        if not e or name == "Q":
            continue
        if e < 0:
            raise UnsupportedElement("negative generator power in %s" % poly)
        idx = int(name[3:])
        if name.startswith("Phi"):
            ds = ds * gaussian_binomial(idx, r - n, q) ** e
            dns_exp += idx * n * e
        else:
            ds = ds * gaussian_binomial(idx, n, q) ** e
    return ds, q_power(dns_exp, q)


def _levi_poly(elem: HeckeElement) -> LaurentPoly:
    return express_in_levi_generators(elem)


def profile_of(elem: HeckeElement, q=None) -> BidegreeProfile:
    """Profile of an M-level element that is Q^s times a product of Levi generators."""
    ctx = elem.context
    if not ctx.quotient:
        ctx = ctx.with_quotient()
        elem = HeckeElement(ctx, elem.image, elem.level)
    d1s, d1ns = d1_of_monomial(_levi_poly(elem), ctx.r, ctx.n, q)
    d2s, d2ns = d1_of_monomial(_levi_poly(dual(elem)), ctx.r, ctx.n, q)
    return BidegreeProfile(d1s, d1ns, d2s, d2ns)


def profile_T(j: int, r: int, q=None) -> BidegreeProfile:
    """T_{p,j} on the generic fibre: both projections separable of degree g(j,r)."""
    if not 0 <= j <= r:
        raise ValueError("T_%d undefined for r=%d" % (j, r))
    gb = gaussian_binomial(j, r, q)
    one = 1 if q is not None else LaurentPoly.const(QONLY, 1)
    return BidegreeProfile(gb, one, gb, one)


def profile_Phi(i: int, r: int, n: int, q=None) -> BidegreeProfile:
    _check_rn(r, n)
    return profile_of(satake_Phi(GLContext(r, n, True), i), q)


def profile_Psi(i: int, r: int, n: int, q=None) -> BidegreeProfile:
    _check_rn(r, n)
    return profile_of(satake_Psi(GLContext(r, n, True), i), q)


def summand(ctx: GLContext, i: int, j: int) -> HeckeElement:
    """The summand Q^{-i(j-i)} Psi_i Phi_{j-i} of the Levi image of T_{p,j}."""
    if not (0 <= i <= ctx.n and 0 <= j - i <= ctx.r - ctx.n):
        raise ValueError("no summand (i=%d, j=%d) for r=%d, n=%d" % (i, j, ctx.r, ctx.n))
    return (satake_Psi(ctx, i) * satake_Phi(ctx, j - i)).q_scale(-i * (j - i))


def profile_summand(i: int, j: int, r: int, n: int, q=None) -> BidegreeProfile:
    _check_rn(r, n)
    return profile_of(summand(GLContext(r, n, True), i, j), q)


def profile_siegel_Phi(i: int, g: int, p=None) -> BidegreeProfile:
    from .siegel import siegel_degrees

    return siegel_degrees(g, i, p)


def profile(element: str, *, r: int = None, n: int = None, g: int = None, i: int = None,
            j: int = None, q=None) -> BidegreeProfile:
    """Dispatch on ``element`` in {"T", "Phi", "Psi", "summand", "siegel_Phi"}."""
    if element == "T":
        return profile_T(j, r, q)
    if element == "Phi":
        return profile_Phi(i, r, n, q)
    if element == "Psi":
        return profile_Psi(i, r, n, q)
    if element == "summand":
        return profile_summand(i, j, r, n, q)
    if element == "siegel_Phi":
        return profile_siegel_Phi(i, g, q)
    raise ValueError("unknown element %r" % element)


# --- consistency -------------------------------------------------------------


@dataclass
class ConsistencyReport:
    r: int
    n: int
    checks: List[Tuple[str, bool]]

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def failures(self) -> List[str]:
        return [name for name, ok in self.checks if not ok]

    def to_text(self) -> str:
        lines = ["degrees r=%d n=%d: %d checks, %d failed" % (self.r, self.n, len(self.checks), len(self.failures))]
        lines += ["  FAIL %s" % name for name in self.failures]
        return "\n".join(lines)


def consistency_report(r: int, n: int, q=None) -> ConsistencyReport:
    _check_rn(r, n)
    Qp = lambda e: q_power(e, q)  # noqa: E731
    gb = lambda k, l: gaussian_binomial(k, l, q)  # noqa: E731
    ctx = GLContext(r, n, True)
    checks: List[Tuple[str, bool]] = []

    def check(name, cond):
        checks.append((name, bool(cond)))

    psi = [profile_Psi(i, r, n, q) for i in range(n + 1)]
    phi = [profile_Phi(i, r, n, q) for i in range(r - n + 1)]

    # component degrees times the scalar from beta_2 give the product degree
    for i in range(n + 1):
        for jj in range(r - n + 1):
            comp = profile_summand(i, i + jj, r, n, q)
            check("C(Psi%dPhi%d) d1ns = Q^{(n-i)j}" % (i, jj), comp.d1ns == Qp((n - i) * jj))
            check("Q^{ij} * Q^{(n-i)j} = Q^{nj} (i=%d,j=%d)" % (i, jj), Qp(i * jj) * comp.d1ns == Qp(n * jj))
            check("multiplicative d1ns(Psi%d Phi%d) = Q^{nj}" % (i, jj), psi[i].d1ns * phi[jj].d1ns == Qp(n * jj))
            mult_d2ns = psi[i].d2ns * phi[jj].d2ns * Qp(-i * jj)
            check("summand d2 route: hat vs product (i=%d,j=%d)" % (i, jj),
                  comp.d2ns == mult_d2ns and comp.d2s == psi[i].d2s * phi[jj].d2s)
            check("summand d1s = g(i,n) g(j,r-n) (i=%d,j=%d)" % (i, jj), comp.d1s == gb(i, n) * gb(jj, r - n))

    # q-Vandermonde: the summands partition T_{p,j} on both projections
    for j in range(r + 1):
        parts = [profile_summand(i, j, r, n, q) for i in range(n + 1) if 0 <= j - i <= r - n]
        total1 = sum((p.d1 for p in parts), Qp(0) * 0)
        total2 = sum((p.d2 for p in parts), Qp(0) * 0)
        check("sum_i d1(summand) = g(%d,%d)" % (j, r), total1 == gb(j, r))
        check("sum_i d2(summand) = g(%d,%d)" % (j, r), total2 == gb(j, r))
        check("d1(T%d) = d2(T%d) = g(j,r)" % (j, j), profile_T(j, r, q).d1 == gb(j, r) == profile_T(j, r, q).d2)

    # duality swaps the two projections
    for i in range(r - n + 1):
        hat = profile_of(dual(satake_Phi(ctx, i)), q)
        check("hat Phi%d swaps degrees" % i, hat == phi[i].swapped())
    for i in range(n + 1):
        hat = profile_of(dual(satake_Psi(ctx, i)), q)
        check("hat Psi%d swaps degrees" % i, hat == psi[i].swapped())
    for j in range(r + 1):
        for i in range(n + 1):
            if 0 <= j - i <= r - n:
                hat = profile_of(dual(summand(ctx, i, j)), q)
                other = profile_summand(n - i, r - j, r, n, q)
                check("hat summand(%d,%d) = summand(%d,%d), swapped" % (i, j, n - i, r - j),
                      hat == profile_summand(i, j, r, n, q).swapped() and hat == other)
    check("hat Phi_{r-n} = Psi_n in degrees", phi[r - n].swapped() == psi[n])

    # stated values for the Frobenius and for n = 1
    check("Psi_n d2 = (1, Q^{n(r-n)})", (psi[n].d2s, psi[n].d2ns) == (gb(n, n), Qp(n * (r - n))))
    for i in range(n + 1):
        check("Psi%d d1 = (g(i,n), 1)" % i, (psi[i].d1s, psi[i].d1ns) == (gb(i, n), Qp(0)))
    for i in range(r - n + 1):
        check("Phi%d d1 = (g(i,r-n), Q^{in})" % i, (phi[i].d1s, phi[i].d1ns) == (gb(i, r - n), Qp(i * n)))
    if n == 1:
        check("n=1: Psi1 = (1,1,1,Q^{r-1})", psi[1] == BidegreeProfile(Qp(0), Qp(0), Qp(0), Qp(r - 1)))
        for i in range(r):
            check("n=1: Phi%d = (g(i,r-1), Q^i, g(i,r-1), 1)" % i,
                  phi[i] == BidegreeProfile(gb(i, r - 1), Qp(i), gb(i, r - 1), Qp(0)))
            s = profile_summand(1, i + 1, r, n, q)
            check("n=1: Q^-i fr Phi%d = (g(i,r-1), 1, g(i,r-1), Q^{r-1-i})" % i,
                  s == BidegreeProfile(gb(i, r - 1), Qp(0), gb(i, r - 1), Qp(r - 1 - i)))
    return ConsistencyReport(r, n, checks)


def degree_table(r: int, n: int, q=None, fmt: str = "text") -> str:
    """Rows (element, d1s, d1ns, d2s, d2ns) for T_j, Phi_i, Psi_i and every summand."""
    rows = []
    for j in range(r + 1):
        rows.append(("T%d" % j,) + profile_T(j, r, q).row())
    for i in range(r - n + 1):
        rows.append(("Phi%d" % i,) + profile_Phi(i, r, n, q).row())
    for i in range(n + 1):
        rows.append(("Psi%d" % i,) + profile_Psi(i, r, n, q).row())
    for j in range(r + 1):
        for i in range(n + 1):
            if 0 <= j - i <= r - n:
                label = "Psi%d*Phi%d" % (i, j - i)
                if i * (j - i):
                    label = "Q^%d*%s" % (-i * (j - i), label)
                rows.append((label,) + profile_summand(i, j, r, n, q).row())
    header = ("element", "d1s", "d1ns", "d2s", "d2ns")
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    widths = [max(len(row[k]) for row in rows + [header]) for k in range(5)]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in [header] + rows) + "\n"
