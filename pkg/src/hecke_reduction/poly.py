"""Exact multivariate Laurent polynomials with rational coefficients.

Every polynomial lives over a :class:`VarSet`, an ordered tuple of variable
names that always ends with the formal invertible symbol ``Q`` (the size of
the residue field).  Terms are stored as ``{exponent tuple: coefficient}``;
coefficients are ``int`` when integral and :class:`fractions.Fraction`
otherwise, and zero coefficients are never stored.

Symmetric reduction (:func:`sym_reduce`) works in the monomial-symmetric
basis: a polynomial symmetric in ``k`` variables is determined by its
coefficients on non-increasing exponent vectors, and the lex-leading-term
subtraction of products of elementary symmetric polynomials is carried out
on those coefficients only.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Sequence, Tuple, Union

Coeff = Union[int, Fraction]
Exps = Tuple[int, ...]

Q = "Q"


class VarSetMismatch(ValueError):
    pass


class NotSymmetric(ValueError):
    def __init__(self, transposition: Tuple[str, str]):
        self.transposition = transposition
        super().__init__(
            "polynomial is not symmetric: violated by the transposition (%s %s)" % transposition
        )


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


@dataclass(frozen=True)
class VarSet:
    """Ordered variable names; ``Q`` is appended automatically and is always last."""

    kind: str
    names: Tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        if Q in names:
            names = tuple(x for x in names if x != Q)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names: %r" % (names,))
        object.__setattr__(self, "names", names + (Q,))

    @classmethod
    def gl(cls, r: int) -> "VarSet":
        return _gl_varset(r)

    @classmethod
    def siegel(cls, g: int) -> "VarSet":
        return _siegel_varset(g)

    @classmethod
    def symbols(cls, names: Sequence[str], kind: str = "symbols") -> "VarSet":
        return cls(kind, tuple(names))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError("unknown variable %r for %s" % (name, self.kind)) from None


@lru_cache(maxsize=None)
def _gl_varset(r: int) -> VarSet:
    return VarSet("GL(%d)" % r, tuple("U%d" % i for i in range(1, r + 1)))


@lru_cache(maxsize=None)
def _siegel_varset(g: int) -> VarSet:
    return VarSet(
        "Siegel(%d)" % g,
        tuple("U%d" % i for i in range(1, g + 1)) + tuple("V%d" % i for i in range(1, g + 1)),
    )


QONLY = VarSet("Q", ())


class LaurentPoly:
    """Immutable Laurent polynomial over a :class:`VarSet`."""

    __slots__ = ("varset", "_terms", "_hash")

    def __init__(self, varset: VarSet, terms: Mapping[Exps, Coeff] = None):
        self.varset = varset
        clean: Dict[Exps, Coeff] = {}
        if terms:
            n = varset.nvars
            for exps, c in terms.items():
                if len(exps) != n:
                    raise ValueError("exponent vector %r has wrong length for %s" % (exps, varset.kind))
                if c:
                    clean[tuple(exps)] = _norm(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, varset: VarSet, terms: Dict[Exps, Coeff]) -> "LaurentPoly":
        # caller guarantees normalized, nonzero coefficients
        p = object.__new__(cls)
        p.varset = varset
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, varset: VarSet) -> "LaurentPoly":
        return cls._raw(varset, {})

    @classmethod
    def const(cls, varset: VarSet, c: Coeff) -> "LaurentPoly":
        c = _norm(c)
        return cls._raw(varset, {(0,) * varset.nvars: c} if c else {})

    @classmethod
    def monomial(cls, varset: VarSet, exps: Mapping[str, int] = None, coeff: Coeff = 1) -> "LaurentPoly":
        vec = [0] * varset.nvars
        for name, e in (exps or {}).items():
            vec[varset.index(name)] += e
        return cls(varset, {tuple(vec): coeff})

    @classmethod
    def var(cls, varset: VarSet, name: str) -> "LaurentPoly":
        return cls.monomial(varset, {name: 1})

    @classmethod
    def q_power(cls, varset: VarSet, e: int, coeff: Coeff = 1) -> "LaurentPoly":
        return cls.monomial(varset, {Q: e}, coeff)

    # basic queries

    @property
    def terms(self) -> Dict[Exps, Coeff]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exps, Coeff]]:
        """Terms in canonical (lexicographic exponent) order."""
        for k in sorted(self._terms):
            yield k, self._terms[k]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def coeff(self, exps: Exps) -> Coeff:
        return self._terms.get(tuple(exps), 0)

    def constant_value(self):
        """The value of a constant polynomial, else ``None``."""
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            (k, c), = self._terms.items()
            if not any(k):
                return c
        return None

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree_in(self, name: str) -> int:
        i = self.varset.index(name)
        return max((k[i] for k in self._terms), default=0)

    def min_degree_in(self, name: str) -> int:
        i = self.varset.index(name)
        return min((k[i] for k in self._terms), default=0)

    # arithmetic

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.varset != self.varset:
                raise VarSetMismatch("%s vs %s" % (self.varset.kind, other.varset.kind))
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(self.varset, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for k, c in small.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return LaurentPoly._raw(self.varset, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.varset, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPoly.zero(self.varset)
        out: Dict[Exps, Coeff] = {}
        get = out.get
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = tuple([x + y for x, y in zip(ka, kb)])
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw(self.varset, {k: _norm(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c: Coeff) -> "LaurentPoly":
        c = _norm(c)
        if not c:
            return LaurentPoly.zero(self.varset)
        return LaurentPoly._raw(self.varset, {k: _norm(v * c) for k, v in self._terms.items()})

    def shift(self, exps: Exps) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exps``."""
        return LaurentPoly._raw(
            self.varset, {tuple(x + y for x, y in zip(k, exps)): c for k, c in self._terms.items()}
        )

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible")
            (k, c), = self._terms.items()
            return LaurentPoly(self.varset, {tuple(-x * -e for x in k): Fraction(1, 1) / Fraction(c) ** -e})
        result = LaurentPoly.const(self.varset, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.varset == other.varset and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentPoly.const(self.varset, other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self._terms.items())))
        return self._hash

    # transformations

    def permute(self, perm: Sequence[int]) -> "LaurentPoly":
        """Apply a variable permutation: variable ``i`` is sent to variable ``perm[i]``."""
        n = self.varset.nvars
        out = {}
        for k, c in self._terms.items():
            v = [0] * n
            for i, e in enumerate(k):
                v[perm[i]] = e
            out[tuple(v)] = c
        return LaurentPoly._raw(self.varset, out)

    def map_exponents(self, fn, varset: VarSet = None) -> "LaurentPoly":
        """Apply an exponent-vector map term by term (for monomial substitutions)."""
        vs = varset or self.varset
        out: Dict[Exps, Coeff] = {}
        for k, c in self._terms.items():
            k2 = tuple(fn(k))
            out[k2] = out.get(k2, 0) + c
        return LaurentPoly(vs, out)

    def rename(self, varset: VarSet, names: Mapping[str, str] = None) -> "LaurentPoly":
        """Move to another VarSet, matching variables by name (optionally renamed)."""
        names = names or {}
        idx = [varset.index(names.get(nm, nm)) for nm in self.varset.names]
        n = varset.nvars
        out = {}
        for k, c in self._terms.items():
            v = [0] * n
            for i, e in zip(idx, k):
                v[i] += e
            out[tuple(v)] = c
        return LaurentPoly._raw(varset, out)

    def substitute(self, images: Mapping[str, "LaurentPoly"], target: VarSet) -> "LaurentPoly":
        """Substitute polynomials (over ``target``) for variables; unmapped names carry over.

        Negative exponents require monomial images.
        """
        mapped = []
        for name in self.varset.names:
            if name in images:
                img = images[name]
                if img.varset != target:
                    raise VarSetMismatch("image of %s lives over %s" % (name, img.varset.kind))
                mapped.append(img)
            else:
                mapped.append(LaurentPoly.var(target, name))
        cache: Dict[Tuple[int, int], LaurentPoly] = {}

        def power(i, e):
            key = (i, e)
            if key not in cache:
                if e == 0:
                    cache[key] = LaurentPoly.const(target, 1)
                elif e > 0 and e > 1:
                    cache[key] = power(i, e - 1) * mapped[i]
                else:
                    cache[key] = mapped[i] ** e
            return cache[key]

        total = LaurentPoly.zero(target)
        for k, c in self.items():
            term = LaurentPoly.const(target, c)
            for i, e in enumerate(k):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def evaluate(self, assignment: Mapping[str, Coeff]) -> Coeff:
        """Exact value at a rational point; variables absent from every term may be omitted."""
        names = self.varset.names
        vals = {}
        total = Fraction(0)
        for k, c in self._terms.items():
            term = Fraction(c)
            for i, e in enumerate(k):
                if not e:
                    continue
                name = names[i]
                if name not in vals:
                    if name not in assignment:
                        raise KeyError("no value assigned to %s" % name)
                    vals[name] = Fraction(assignment[name])
                x = vals[name]
                if e < 0 and x == 0:
                    raise ZeroDivisionError("%s = 0 raised to a negative power" % name)
                term *= x ** e
            total += term
        return _norm(total)

    # rendering

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "LaurentPoly(%s, %s)" % (self.varset.kind, self.to_text())

    def to_text(self, coeff_style: str = "fraction") -> str:
        """Canonical text: lex term order, ``num/den`` coefficients, ``U1^2*Q^-1`` monomials."""
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            mono = "*".join(
                name if e == 1 else "%s^%d" % (name, e)
                for name, e in zip(self.varset.names, k)
                if e
            )
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = mono if a == 1 else "%s*%s" % (_fmt_rational(a), mono)
            else:
                body = _fmt_rational(a)
            parts.append((sign, body))
        out = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sign, body in parts[1:]:
            out += " %s %s" % (sign, body)
        return out

    def to_json_obj(self) -> dict:
        names = self.varset.names
        return {
            "vars": list(names),
            "terms": [
                {
                    "coeff": {"num": str(Fraction(c).numerator), "den": str(Fraction(c).denominator)},
                    "exps": {name: e for name, e in zip(names, k) if e},
                }
                for k, c in self.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict, varset: VarSet) -> "LaurentPoly":
        if list(obj["vars"]) != list(varset.names):
            raise VarSetMismatch("JSON variables %r do not match %r" % (obj["vars"], varset.names))
        out = {}
        for t in obj["terms"]:
            vec = [0] * varset.nvars
            for name, e in t["exps"].items():
                vec[varset.index(name)] = int(e)
            out[tuple(vec)] = Fraction(int(t["coeff"]["num"]), int(t["coeff"]["den"]))
        return cls(varset, out)


def _fmt_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def elementary_symmetric(varset: VarSet, names: Sequence[str], i: int) -> LaurentPoly:
    """sigma_i of the listed variables; sigma_0 = 1."""
    if not 0 <= i <= len(names):
        raise ValueError("sigma_%d undefined on %d variables" % (i, len(names)))
    idx = [varset.index(nm) for nm in names]
    out = {}
    for sub in itertools.combinations(idx, i):
        v = [0] * varset.nvars
        for j in sub:
            v[j] = 1
        out[tuple(v)] = 1
    return LaurentPoly._raw(varset, out)


# --- symmetric reduction ---------------------------------------------------


class Invariance(NamedTuple):
    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


class SymmetricAction:
    """Full symmetric group on one block of variables."""

    def __init__(self, names: Sequence[str]):
        self.blocks = (tuple(names),)

    def generators(self, varset: VarSet):
        for block in self.blocks:
            for a, b in zip(block, block[1:]):
                perm = list(range(varset.nvars))
                ia, ib = varset.index(a), varset.index(b)
                perm[ia], perm[ib] = ib, ia
                yield "(%s %s)" % (a, b), perm


class ProductAction(SymmetricAction):
    """Product of symmetric groups, one per block (e.g. S_{r-n} x S_n)."""

    def __init__(self, blocks: Sequence[Sequence[str]]):
        self.blocks = tuple(tuple(b) for b in blocks)


class SiegelWeylAction:
    """S_g permuting indices of (U_i, V_i) together, plus the swaps U_i <-> V_i."""

    def __init__(self, g: int):
        self.g = g

    def generators(self, varset: VarSet):
        g = self.g
        for i in range(1, g):
            perm = list(range(varset.nvars))
            for x in "UV":
                a, b = varset.index("%s%d" % (x, i)), varset.index("%s%d" % (x, i + 1))
                perm[a], perm[b] = b, a
            yield "(%d %d)" % (i, i + 1), perm
        perm = list(range(varset.nvars))
        a, b = varset.index("U1"), varset.index("V1")
        perm[a], perm[b] = b, a
        yield "(U1 V1)", perm


def is_invariant(p: LaurentPoly, action) -> Invariance:
    """Check invariance under every generator of ``action``; report the first violator."""
    for label, perm in action.generators(p.varset):
        if p.permute(perm) != p:
            return Invariance(False, label)
    return Invariance(True, None)


def _partition_key(lam: Exps) -> Exps:
    return tuple(sorted(lam, reverse=True))


@lru_cache(maxsize=None)
def _subsets(k: int, i: int):
    return tuple(itertools.combinations(range(k), i))


@lru_cache(maxsize=None)
def _times_e(lam: Exps, i: int) -> Tuple[Tuple[Exps, int], ...]:
    """m_lam * e_i in the monomial-symmetric basis (k = len(lam) variables)."""
    k = len(lam)
    targets = set()
    for s in _subsets(k, i):
        v = list(lam)
        for j in s:
            v[j] += 1
        targets.add(_partition_key(v))
    out = []
    for mu in sorted(targets):
        cnt = 0
        for s in _subsets(k, i):
            v = list(mu)
            ok = True
            for j in s:
                v[j] -= 1
                if v[j] < 0:
                    ok = False
                    break
            if ok and _partition_key(v) == lam:
                cnt += 1
        out.append((mu, cnt))
    return tuple(out)


@lru_cache(maxsize=None)
def _e_product(d: Exps) -> Dict[Exps, int]:
    """prod_i e_{i+1}^{d[i]} in the monomial-symmetric basis."""
    k = len(d)
    if not any(d):
        return {(0,) * k: 1}
    j = max(i for i, x in enumerate(d) if x)
    prev = list(d)
    prev[j] -= 1
    base = _e_product(tuple(prev))
    out: Dict[Exps, int] = {}
    for lam, c in base.items():
        for mu, m in _times_e(lam, j + 1):
            out[mu] = out.get(mu, 0) + c * m
    return out


def _reduce_block(coeffs: Dict[Exps, Coeff], k: int) -> Dict[Exps, Coeff]:
    """Monomial-symmetric coefficients -> coefficients on e-monomials (exponent of e_1..e_k)."""
    work = dict(coeffs)
    result: Dict[Exps, Coeff] = {}
    while work:
        lam = max(work)
        c = work[lam]
        d = tuple(lam[i] - (lam[i + 1] if i + 1 < k else 0) for i in range(k))
        result[d] = c
        for mu, m in _e_product(d).items():
            v = work.get(mu, 0) - c * m
            if v:
                work[mu] = _norm(v)
            else:
                work.pop(mu, None)
    return result


def sym_varset(p_varset: VarSet, names: Sequence[str], prefix: str = "e") -> VarSet:
    rest = [nm for nm in p_varset.names if nm not in names and nm != Q]
    return VarSet("sym", tuple("%s%d" % (prefix, i) for i in range(1, len(names) + 1)) + tuple(rest))


def sym_reduce(p: LaurentPoly, names: Sequence[str], prefix: str = "e") -> LaurentPoly:
    """Write ``p`` (symmetric and polynomial in ``names``) in elementary symmetric polynomials.

    The result lives over ``e1..ek`` followed by the remaining variables of ``p``
    (and ``Q``); ``e_i`` stands for sigma_i(names).
    """
    vs = p.varset
    names = tuple(names)
    k = len(names)
    idx = [vs.index(nm) for nm in names]
    rest_idx = [i for i, nm in enumerate(vs.names) if nm not in names]
    for exps in p._terms:
        for i in idx:
            if exps[i] < 0:
                raise ValueError("sym_reduce needs non-negative exponents in %s" % (names,))
    check = is_invariant(p, SymmetricAction(names))
    if not check:
        a, b = check.witness.strip("()").split()
        raise NotSymmetric((a, b))

    groups: Dict[Exps, Dict[Exps, Coeff]] = {}
    for exps, c in p._terms.items():
        lam = tuple(exps[i] for i in idx)
        if any(lam[j] < lam[j + 1] for j in range(k - 1)):
            continue
        rest = tuple(exps[i] for i in rest_idx)
        groups.setdefault(rest, {})[lam] = c

    out_vs = sym_varset(vs, names, prefix)
    out: Dict[Exps, Coeff] = {}
    for rest, coeffs in groups.items():
        for d, c in _reduce_block(coeffs, k).items():
            out[d + rest] = c
    return LaurentPoly(out_vs, out)


def sym_expand(reduced: LaurentPoly, p_varset: VarSet, names: Sequence[str]) -> LaurentPoly:
    """Substitute sigma_i(names) back for ``e_i`` (full expansion)."""
    images = {
        "e%d" % i: elementary_symmetric(p_varset, names, i) for i in range(1, len(names) + 1)
    }
    return reduced.substitute(images, p_varset)


def polynomial_in(values: Iterable[Coeff], varset: VarSet = QONLY, name: str = Q) -> LaurentPoly:
    """Univariate helper: ``sum values[i] * name^i``."""
    i = varset.index(name)
    out = {}
    for e, c in enumerate(values):
        v = [0] * varset.nvars
        v[i] = e
        out[tuple(v)] = c
    return LaurentPoly(varset, out)
