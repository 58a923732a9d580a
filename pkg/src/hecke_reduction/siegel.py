"""GSp_2g reference side: Satake images over U_1..U_g, V_1..V_g, Weyl action, hat, degrees."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional

from .finvec import gaussian_binomial
from .poly import LaurentPoly, SiegelWeylAction, VarSet, is_invariant

G, M, T = "G", "M", "T"


class SimilitudeViolation(ValueError):
    pass


@dataclass(frozen=True)
class SiegelContext:
    g: int
    quotient: bool = False
    central_exponent: Optional[int] = None  # prod_i U_i V_i = Q^s when quotient

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("genus must be >= 1")
        if self.quotient and self.central_exponent is None:
            raise ValueError("a Siegel quotient needs an explicit central exponent s")

    @property
    def varset(self) -> VarSet:
        return VarSet.siegel(self.g)


def similitude_ok(p: LaurentPoly, g: int) -> bool:
    """Every monomial has a_i + b_i independent of i (U_i exponent a_i, V_i exponent b_i)."""
    for k in p.terms:
        sums = {k[i] + k[g + i] for i in range(g)}
        if len(sums) > 1:
            return False
    return True


def _central(p: LaurentPoly, g: int, s: int) -> LaurentPoly:
    def fn(k):
        t = min(k[: 2 * g])
        if not t:
            return k
        return tuple(x - t for x in k[: 2 * g]) + (k[2 * g] + s * t,)

    return p.map_exponents(fn)


@dataclass(frozen=True)
class SiegelHeckeElement:
    context: SiegelContext
    image: LaurentPoly
    level: str = G

    def __post_init__(self):
        if not similitude_ok(self.image, self.context.g):
            raise SimilitudeViolation("image leaves the similitude subalgebra")
        if self.context.quotient:
            object.__setattr__(
                self, "image", _central(self.image, self.context.g, self.context.central_exponent)
            )

    def __add__(self, other):
        return SiegelHeckeElement(self.context, self.image + other.image, _join(self.level, other.level))

    def __mul__(self, other):
        return SiegelHeckeElement(self.context, self.image * other.image, _join(self.level, other.level))

    def __eq__(self, other):
        return isinstance(other, SiegelHeckeElement) and self.context == other.context and self.image == other.image

    def __hash__(self):
        return hash((self.context, self.image))


def _join(a: str, b: str) -> str:
    if a == b:
        return a
    return T if T in (a, b) else M


def u_subset(ctx: SiegelContext, I) -> LaurentPoly:
    """U_I = prod_{i in I} U_i prod_{i not in I} V_i (indices 1-based)."""
    exps = {("U%d" if i in I else "V%d") % i: 1 for i in range(1, ctx.g + 1)}
    return LaurentPoly.monomial(ctx.varset, exps)


def satake_phi(ctx: SiegelContext, i: int) -> SiegelHeckeElement:
    """Phi_i: sum of U_I over i-subsets I; Phi_g = fr_M."""
    if not 0 <= i <= ctx.g:
        raise ValueError("Phi_%d undefined for g=%d" % (i, ctx.g))
    img = LaurentPoly.zero(ctx.varset)
    for I in itertools.combinations(range(1, ctx.g + 1), i):
        img = img + u_subset(ctx, set(I))
    return SiegelHeckeElement(ctx, img, M)


def satake_Tp(ctx: SiegelContext) -> SiegelHeckeElement:
    img = LaurentPoly.zero(ctx.varset)
    for i in range(ctx.g + 1):
        img = img + satake_phi(ctx, i).image
    e = SiegelHeckeElement(ctx, img, G)
    assert is_invariant(e.image, SiegelWeylAction(ctx.g)), "T_p image is not W_G-invariant"
    return e


def _levi_action(g: int):
    return _DiagonalPermutations(g)


class _DiagonalPermutations(SiegelWeylAction):
    """S_g acting on indices of U and V simultaneously (the section W_{G,M})."""

    def generators(self, varset):
        for label, perm in super().generators(varset):
            if label != "(U1 V1)":
                yield label, perm


def is_weyl_invariant(e: SiegelHeckeElement):
    return is_invariant(e.image, SiegelWeylAction(e.context.g))


def is_levi_invariant(e: SiegelHeckeElement):
    return is_invariant(e.image, _levi_action(e.context.g))


def weyl_group(g: int) -> List[List[int]]:
    """All 2^g g! elements of W_G as variable permutations of U1..Ug, V1..Vg, Q."""
    n = 2 * g + 1
    out = []
    for sigma in itertools.permutations(range(g)):
        for flips in itertools.product((0, 1), repeat=g):
            perm = list(range(n))
            for i in range(g):
                j = sigma[i]
                u_to, v_to = (j, g + j) if not flips[i] else (g + j, j)
                perm[i], perm[g + i] = u_to, v_to
            out.append(perm)
    return out


def weyl_orbit(e: SiegelHeckeElement) -> List[LaurentPoly]:
    """Distinct images under W_G, in canonical text order."""
    seen: Dict[str, LaurentPoly] = {}
    for perm in weyl_group(e.context.g):
        img = e.image.permute(perm)
        seen.setdefault(img.to_text(), img)
    return [seen[k] for k in sorted(seen)]


def hat_siegel(e: SiegelHeckeElement) -> SiegelHeckeElement:
    """The involution U_i <-> V_i on images."""
    g = e.context.g
    perm = [g + i for i in range(g)] + list(range(g)) + [2 * g]
    return SiegelHeckeElement(e.context, e.image.permute(perm), e.level)


def siegel_frob_charpoly(g: int) -> List[LaurentPoly]:
    """Coefficients (constant first) of prod_I (X - U_I); each is asserted W_G-invariant."""
    ctx = SiegelContext(g)
    vs = ctx.varset
    coeffs: List[Dict] = [{(0,) * vs.nvars: 1}]
    for size in range(g + 1):
        for I in itertools.combinations(range(1, g + 1), size):
            (root,) = u_subset(ctx, set(I)).terms
            new: List[Dict] = [dict() for _ in range(len(coeffs) + 1)]
            for k, c in enumerate(coeffs):
                for e, a in c.items():
                    new[k + 1][e] = new[k + 1].get(e, 0) + a
                    e2 = tuple(x + y for x, y in zip(e, root))
                    new[k][e2] = new[k].get(e2, 0) - a
            coeffs = [{e: a for e, a in d.items() if a} for d in new]
    out = [LaurentPoly(vs, d) for d in coeffs]
    assert len(out) - 1 == 2 ** g
    for c in out:
        assert is_invariant(c, SiegelWeylAction(g)), "charpoly coefficient not W_G-invariant"
    return out


def siegel_degrees(g: int, i: int, p: int = None):
    """(d1s, d1ns, d2s, d2ns) of Phi_i: (g(i,g), p^{(g+1-i)(g-i)/2}, g(i,g), p^{(i+1)i/2})."""
    from .degrees import BidegreeProfile, q_power

    if not 0 <= i <= g:
        raise ValueError("Phi_%d undefined for g=%d" % (i, g))
    if p is not None and p < 2:
        raise ValueError("p must be >= 2")
    gb = gaussian_binomial(i, g, p)
    return BidegreeProfile(gb, q_power((g + 1 - i) * (g - i) // 2, p), gb, q_power((i + 1) * i // 2, p))
