"""The Hecke polynomial P_{r,n}: characteristic polynomial of fr_M = Psi_n over H(G).

P_{r,n} is computed as the product over n-subsets I of {1..r} of
(X - Q^{-n(n-1)/2} prod_{i in I} U_i), i.e. over the S_r-orbit of the Satake
image of Psi_n.  Each X-coefficient is symmetric and is rewritten in the
generators T_1..T_r.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Sequence, Tuple

from .hecke_gl import GLContext, satake_T, sigma_poly_to_T, t_generator_varset
from .poly import LaurentPoly, VarSet, sym_reduce


@dataclass(frozen=True)
class HeckePolynomial:
    r: int
    n: int
    coeffs: Tuple[LaurentPoly, ...]  # constant term first, over T1..Tr, Q

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def to_text(self, var: str = "fr") -> str:
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            power = "" if k == 0 else (var if k == 1 else "%s^%d" % (var, k))
            cv = c.constant_value()
            if cv == 1 and power:
                body, sign = power, "+"
            elif cv == -1 and power:
                body, sign = power, "-"
            elif len(c) == 1:
                (exps, coef), = c.items()
                sign = "-" if coef < 0 else "+"
                mono = LaurentPoly(c.varset, {exps: abs(coef)}).to_text()
                body = mono + ("*" + power if power else "")
            else:
                sign = "+"
                body = "(%s)" % c.to_text() + ("*" + power if power else "")
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += " %s %s" % (sign, body)
        return "P_{%d,%d} = %s" % (self.r, self.n, out)

    def to_json_obj(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "degree": self.degree,
            "coeffs": [c.to_json_obj() for c in self.coeffs],
        }

    def evaluate(self, t_values: Sequence[Fraction], q) -> List[Fraction]:
        """Coefficients at T_i = t_values[i-1], Q = q."""
        assign = {"T%d" % i: v for i, v in enumerate(t_values, 1)}
        assign["Q"] = q
        return [c.evaluate(assign) for c in self.coeffs]


def charpoly_degree(r: int, n: int) -> int:
    if not 1 <= n <= r:
        raise ValueError("need 1 <= n <= r")
    return comb(r, n)


def orbit_product(r: int, n: int) -> List[LaurentPoly]:
    """Coefficients (constant first) of prod_{|I|=n} (X - Q^{-n(n-1)/2} U_I) over U1..Ur, Q."""
    vs = VarSet.gl(r)
    qe = -n * (n - 1) // 2
    roots = []
    for I in itertools.combinations(range(r), n):
        v = [0] * (r + 1)
        for i in I:
            v[i] = 1
        v[r] = qe
        roots.append(tuple(v))
    # coefficient lists as dicts; multiply by (X - root) one root at a time
    coeffs: List[Dict] = [{(0,) * (r + 1): 1}]
    for root in roots:
        new: List[Dict] = [dict() for _ in range(len(coeffs) + 1)]
        for k, c in enumerate(coeffs):
            tgt = new[k + 1]
            for e, a in c.items():
                tgt[e] = tgt.get(e, 0) + a
            tgt = new[k]
            for e, a in c.items():
                e2 = tuple(x + y for x, y in zip(e, root))
                tgt[e2] = tgt.get(e2, 0) - a
        coeffs = [{e: a for e, a in d.items() if a} for d in new]
    return [LaurentPoly(vs, d) for d in coeffs]


@lru_cache(maxsize=None)
def hecke_charpoly(r: int, n: int) -> HeckePolynomial:
    """P_{r,n} with coefficients in T1..Tr (T_r kept as a symbol)."""
    deg = charpoly_degree(r, n)
    names = tuple("U%d" % i for i in range(1, r + 1))
    coeffs = []
    for c in orbit_product(r, n):
        # the Q^{-n(n-1)/2} twist makes coefficients Laurent only in Q
        coeffs.append(sigma_poly_to_T(sym_reduce(c, names), r, quotient=False))
    poly = HeckePolynomial(r, n, tuple(coeffs))
    assert poly.degree == deg
    assert poly.coeffs[-1] == 1
    return poly


def resubstitute(poly: HeckePolynomial) -> List[LaurentPoly]:
    """Replace T_i by its Satake image; should give back :func:`orbit_product`."""
    ctx = GLContext(poly.r, poly.n)
    images = {"T%d" % i: satake_T(ctx, i).image for i in range(1, poly.r + 1)}
    return [c.substitute(images, ctx.varset) for c in poly.coeffs]


def closed_form_n1(r: int) -> HeckePolynomial:
    """sum_i (-1)^i Q^{i(i-1)/2} T_i fr^{r-i}, the n = 1 Hecke polynomial."""
    vs = t_generator_varset(r)
    coeffs = [None] * (r + 1)
    for i in range(r + 1):
        exps = {"Q": i * (i - 1) // 2}
        if i:
            exps["T%d" % i] = 1
        coeffs[r - i] = LaurentPoly.monomial(vs, exps, (-1) ** i)
    return HeckePolynomial(r, 1, tuple(coeffs))


# --- the Langlands-side oracle ---------------------------------------------


def _sigma_numeric(values: Sequence[Fraction], i: int) -> Fraction:
    acc = [Fraction(1)] + [Fraction(0)] * len(values)
    for v in values:
        for k in range(len(values), 0, -1):
            acc[k] += acc[k - 1] * v
    return acc[i]


def exterior_power_charpoly(alphas: Sequence[Fraction], n: int, q) -> List[Fraction]:
    """Coefficients (constant first) of prod_{|I|=n} (X - q^{-n(n-1)/2} prod_I alpha)."""
    twist = Fraction(q) ** (-(n * (n - 1) // 2))
    coeffs = [Fraction(1)]
    for I in itertools.combinations(alphas, n):
        root = twist
        for a in I:
            root *= a
        new = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            new[k + 1] += c
            new[k] -= c * root
        coeffs = new
    return coeffs


@dataclass
class OracleTrial:
    index: int
    alphas: Tuple[Fraction, ...]
    q: Fraction
    equal: bool


@dataclass
class OracleReport:
    r: int
    n: int
    seed: int
    trials: List[OracleTrial]

    @property
    def ok(self) -> bool:
        return all(t.equal for t in self.trials)

    def summary(self) -> str:
        bad = [t.index for t in self.trials if not t.equal]
        return "langlands r=%d n=%d seed=%d trials=%d failures=%s" % (
            self.r, self.n, self.seed, len(self.trials), bad or "none")


def _draw_rational(rng: random.Random) -> Fraction:
    while True:
        num = rng.randint(-30, 30)
        if num:
            return Fraction(num, rng.randint(1, 12))


def langlands_oracle_check(r: int, n: int, trials: int = 200, seed: int = 0) -> OracleReport:
    """Compare P_{r,n} at T_i = Q^{-i(i-1)/2} sigma_i(alpha) with the exterior-power product."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    poly = hecke_charpoly(r, n)
    rng = random.Random(seed)
    out = []
    for t in range(trials):
        while True:
            alphas = tuple(_draw_rational(rng) for _ in range(r))
            if len(set(alphas)) == r:
                break
        q = _draw_rational(rng)
        a = [q ** (-(i * (i - 1) // 2)) * _sigma_numeric(alphas, i) for i in range(1, r + 1)]
        lhs = [Fraction(x) for x in poly.evaluate(a, q)]
        rhs = exterior_power_charpoly(alphas, n, q)
        out.append(OracleTrial(t, alphas, q, lhs == rhs))
    return OracleReport(r, n, seed, out)


def dual_root_check(r: int, n: int) -> bool:
    """Roots of P_{r,n} map onto roots of P_{r,r-n} under the hat substitution (quotient)."""
    from .hecke_gl import HeckeElement, dual

    ctx = GLContext(r, n, quotient=True)
    vs = ctx.varset

    def roots(k):
        out = []
        for I in itertools.combinations(range(1, r + 1), k):
            exps = {"U%d" % i: 1 for i in I}
            exps["Q"] = -k * (k - 1) // 2
            out.append(HeckeElement(ctx, LaurentPoly.monomial(vs, exps)).image)
        return sorted(map(str, out))

    mapped = sorted(
        str(dual(HeckeElement(ctx, LaurentPoly.monomial(vs, {**{"U%d" % i: 1 for i in I}, "Q": -n * (n - 1) // 2}))).image)
        for I in itertools.combinations(range(1, r + 1), n)
    )
    return mapped == roots(r - n)


def charpoly_json(poly: HeckePolynomial) -> str:
    return json.dumps(poly.to_json_obj(), sort_keys=True)
