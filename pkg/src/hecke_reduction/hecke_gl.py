"""Spherical Hecke algebras of GL_r and of the Levi M = GL_{r-n} x GL_n, via Satake images.

An element is stored only as its image in H(T) = Z[U_1^{+-1}, ..., U_r^{+-1}]
(tensored with Q[Q^{+-1}]); products of Hecke operators are products of
images.  In a quotient context the central relation U_1 ... U_r = Q^{r(r-1)/2}
is imposed, i.e. the image of the scalar double coset is set to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, NamedTuple

from .poly import (
    Q,
    LaurentPoly,
    ProductAction,
    SymmetricAction,
    VarSet,
    elementary_symmetric,
    is_invariant,
    sym_reduce,
)

G, M, T = "G", "M", "T"


class QuotientRequired(ValueError):
    pass


@dataclass(frozen=True)
class GLContext:
    r: int
    n: int
    quotient: bool = False

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("rank r must be >= 1")
        if not 0 <= self.n <= self.r:
            raise ValueError("need 0 <= n <= r, got n=%d r=%d" % (self.n, self.r))

    @property
    def varset(self) -> VarSet:
        return VarSet.gl(self.r)

    @property
    def phi_block(self):
        return tuple("U%d" % i for i in range(1, self.r - self.n + 1))

    @property
    def psi_block(self):
        return tuple("U%d" % i for i in range(self.r - self.n + 1, self.r + 1))

    @property
    def all_vars(self):
        return self.phi_block + self.psi_block

    def with_quotient(self, quotient: bool = True) -> "GLContext":
        return GLContext(self.r, self.n, quotient)


@dataclass(frozen=True)
class HeckeElement:
    context: GLContext
    image: LaurentPoly
    level: str = G

    def __post_init__(self):
        if self.image.varset != self.context.varset:
            raise ValueError("image does not live over U1..U%d" % self.context.r)
        if self.context.quotient:
            object.__setattr__(self, "image", _normal_form(self.image, self.context.r))

    def _combine(self, other, op):
        if isinstance(other, HeckeElement):
            if other.context != self.context:
                raise ValueError("elements from different contexts")
            level = G if self.level == other.level == G else (M if T not in (self.level, other.level) else T)
            return HeckeElement(self.context, op(self.image, other.image), level)
        return HeckeElement(self.context, op(self.image, other), self.level)

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._combine(other, lambda a, b: a * b)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, e: int):
        return HeckeElement(self.context, self.image ** e, self.level)

    def q_scale(self, e: int) -> "HeckeElement":
        return HeckeElement(self.context, self.image * LaurentPoly.q_power(self.image.varset, e), self.level)

    def is_valid_level(self) -> bool:
        if self.level == G:
            return bool(is_invariant(self.image, SymmetricAction(self.context.all_vars)))
        if self.level == M:
            return bool(is_invariant(self.image, ProductAction([self.context.phi_block, self.context.psi_block])))
        return True


def _sigma_image(ctx: GLContext, names, i: int) -> LaurentPoly:
    vs = ctx.varset
    return elementary_symmetric(vs, names, i) * LaurentPoly.q_power(vs, -i * (i - 1) // 2)


def satake_T(ctx: GLContext, i: int) -> HeckeElement:
    """T_{p,i}: image Q^{-i(i-1)/2} sigma_i(U_1..U_r)."""
    if not 0 <= i <= ctx.r:
        raise ValueError("T_%d undefined for r=%d" % (i, ctx.r))
    return HeckeElement(ctx, _sigma_image(ctx, ctx.all_vars, i), G)


def satake_Phi(ctx: GLContext, i: int) -> HeckeElement:
    if not 0 <= i <= ctx.r - ctx.n:
        raise ValueError("Phi_%d undefined for r-n=%d" % (i, ctx.r - ctx.n))
    return HeckeElement(ctx, _sigma_image(ctx, ctx.phi_block, i), M)


def satake_Psi(ctx: GLContext, i: int) -> HeckeElement:
    if not 0 <= i <= ctx.n:
        raise ValueError("Psi_%d undefined for n=%d" % (i, ctx.n))
    return HeckeElement(ctx, _sigma_image(ctx, ctx.psi_block, i), M)


def frobenius(ctx: GLContext) -> HeckeElement:
    """fr_M = Psi_n."""
    return satake_Psi(ctx, ctx.n)


class LeviTerm(NamedTuple):
    q_exp: int  # the scalar is Q^q_exp
    psi: int
    phi: int


def levi_expand(ctx: GLContext, j: int) -> List[LeviTerm]:
    """Terms Q^{-i(j-i)} Psi_i Phi_{j-i} of the Levi image of T_{p,j}, by decreasing i.

    Index pairs outside 0 <= i <= n, 0 <= j-i <= r-n are dropped.  The sum is
    checked against satake_T(ctx, j) on every call.
    """
    if not 0 <= j <= ctx.r:
        raise ValueError("T_%d undefined for r=%d" % (j, ctx.r))
    terms = [
        LeviTerm(-i * (j - i), i, j - i)
        for i in range(min(j, ctx.n), -1, -1)
        if j - i <= ctx.r - ctx.n
    ]
    total = levi_sum(ctx, terms)
    if total.image != satake_T(ctx, j).image:
        raise AssertionError("Levi expansion of T_%d does not reproduce its Satake image" % j)
    return terms


def levi_sum(ctx: GLContext, terms) -> HeckeElement:
    total = HeckeElement(ctx, LaurentPoly.zero(ctx.varset), M)
    for t in terms:
        total = total + (satake_Psi(ctx, t.psi) * satake_Phi(ctx, t.phi)).q_scale(t.q_exp)
    return total


def format_levi_expansion(ctx: GLContext, j: int) -> str:
    """Render e.g. ``T2 = Q^-1*fr*Phi1 + Phi2``; Psi_1 prints as ``fr`` when n = 1."""
    pieces = []
    for t in levi_expand(ctx, j):
        factors = []
        if t.q_exp:
            factors.append("Q^%d" % t.q_exp)
        if t.psi:
            factors.append("fr" if ctx.n == 1 else "Psi%d" % t.psi)
        if t.phi:
            factors.append("Phi%d" % t.phi)
        pieces.append("*".join(factors) or "1")
    return "T%d = %s" % (j, " + ".join(pieces))


def _normal_form(p: LaurentPoly, r: int) -> LaurentPoly:
    c = r * (r - 1) // 2

    def fn(k):
        t = min(k[:r])
        if not t:
            return k
        return tuple(x - t for x in k[:r]) + (k[r] + t * c,)

    return p.map_exponents(fn)


def central_normal_form(e: HeckeElement) -> HeckeElement:
    """Rewrite U^a Q^b as Q^{b + t r(r-1)/2} U^{a - t}, t = min a_i."""
    if not e.context.quotient:
        raise QuotientRequired("central normal form needs a quotient context")
    return HeckeElement(e.context, _normal_form(e.image, e.context.r), e.level)


def dual(e: HeckeElement) -> HeckeElement:
    """The hat involution: U_j -> Q^{r-1} U_j^{-1}, then central normal form."""
    if not e.context.quotient:
        raise QuotientRequired("duality is defined on the quotient")
    r = e.context.r

    def fn(k):
        return tuple(-x for x in k[:r]) + (k[r] + (r - 1) * sum(k[:r]),)

    return HeckeElement(e.context, e.image.map_exponents(fn), e.level)


# --- generator expressions --------------------------------------------------


@lru_cache(maxsize=None)
def t_generator_varset(r: int) -> VarSet:
    return VarSet.symbols(["T%d" % i for i in range(1, r + 1)], kind="H(G) generators")


@lru_cache(maxsize=None)
def levi_generator_varset(r: int, n: int) -> VarSet:
    return VarSet.symbols(
        ["Phi%d" % i for i in range(1, r - n + 1)] + ["Psi%d" % i for i in range(1, n + 1)],
        kind="H(M) generators",
    )


def sigma_poly_to_T(reduced: LaurentPoly, r: int, quotient: bool) -> LaurentPoly:
    """Map a polynomial in e1..er (and Q) to T-generators via e_i = Q^{i(i-1)/2} T_i."""
    target = t_generator_varset(r)
    shift = [i * (i - 1) // 2 for i in range(1, r + 1)]

    def fn(k):
        d = list(k[:r])
        qe = k[r] + sum(a * b for a, b in zip(d, shift))
        if quotient:
            d[r - 1] = 0  # T_r = 1
        return tuple(d) + (qe,)

    return reduced.map_exponents(fn, target)


def express_in_T_generators(e: HeckeElement) -> LaurentPoly:
    """Write a G-level element as a polynomial in T1..Tr with Q-Laurent coefficients.

    In a quotient context T_r = 1 is used.
    """
    ctx = e.context
    img = _normal_form(e.image, ctx.r) if ctx.quotient else e.image
    red = sym_reduce(img, ctx.all_vars)
    return sigma_poly_to_T(red, ctx.r, ctx.quotient)


def t_generator_images(ctx: GLContext):
    return {"T%d" % i: satake_T(ctx, i).image for i in range(1, ctx.r + 1)}


def from_T_generators(poly: LaurentPoly, ctx: GLContext) -> HeckeElement:
    return HeckeElement(ctx, poly.substitute(t_generator_images(ctx), ctx.varset), G)


def express_in_levi_generators(e: HeckeElement) -> LaurentPoly:
    """Write an M-level element in Phi_1..Phi_{r-n}, Psi_1..Psi_n.

    In a quotient context monomials are reduced with Psi_n Phi_{r-n} = Q^{n(r-n)}
    so that the top generators never both occur.
    """
    ctx = e.context
    r, n = ctx.r, ctx.n
    img = _normal_form(e.image, r) if ctx.quotient else e.image
    step1 = sym_reduce(img, ctx.phi_block, prefix="a")
    step2 = sym_reduce(step1, ctx.psi_block, prefix="b")
    vs2 = step2.varset
    a_idx = [vs2.index("a%d" % i) for i in range(1, r - n + 1)]
    b_idx = [vs2.index("b%d" % i) for i in range(1, n + 1)]
    q_idx = vs2.index("Q")
    target = levi_generator_varset(r, n)

    def fn(k):
        a = [k[i] for i in a_idx]
        b = [k[i] for i in b_idx]
        qe = k[q_idx]
        qe += sum(x * (i * (i + 1) // 2) for i, x in enumerate(a))
        qe += sum(x * (i * (i + 1) // 2) for i, x in enumerate(b))
        return tuple(a + b) + (qe,)

    out = step2.map_exponents(fn, target)
    return reduce_levi_poly(out, ctx) if ctx.quotient else out


def reduce_levi_poly(poly: LaurentPoly, ctx: GLContext) -> LaurentPoly:
    """Apply Psi_n Phi_{r-n} = Q^{n(r-n)} until the two top generators never meet."""
    r, n = ctx.r, ctx.n
    tops = [i for i, ok in ((r - n - 1, r - n > 0), (r - 1, n > 0)) if ok]
    rel = n * (r - n)

    def fn(k):
        t = min(k[i] for i in tops)
        if not t:
            return k
        out = list(k)
        for i in tops:
            out[i] -= t
        out[-1] += t * rel
        return tuple(out)

    return poly.map_exponents(fn)


def levi_generator_images(ctx: GLContext):
    out = {"Phi%d" % i: satake_Phi(ctx, i).image for i in range(1, ctx.r - ctx.n + 1)}
    out.update({"Psi%d" % i: satake_Psi(ctx, i).image for i in range(1, ctx.n + 1)})
    return out


def from_levi_generators(poly: LaurentPoly, ctx: GLContext) -> HeckeElement:
    return HeckeElement(ctx, poly.substitute(levi_generator_images(ctx), ctx.varset), M)


def levi_monomial(ctx: GLContext, q_exp: int, psi: int, phi: int) -> LaurentPoly:
    """Q^q_exp Psi_psi Phi_phi as a generator polynomial, reduced in the quotient."""
    target = levi_generator_varset(ctx.r, ctx.n)
    exps = {Q: q_exp}
    if phi:
        exps["Phi%d" % phi] = 1
    if psi:
        exps["Psi%d" % psi] = 1
    mono = LaurentPoly.monomial(target, exps)
    return reduce_levi_poly(mono, ctx) if ctx.quotient else mono
