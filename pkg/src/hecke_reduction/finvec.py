"""Finite fields F_p, F_{p^2} and subspaces of F^r in reduced row-echelon form.

This is the brute-force side of every counting statement: Gaussian binomials
are computed in closed form here, and checked against exhaustive enumeration
of echelon matrices.

Field elements are small ints.  For F_{p^2} = F_p[x]/(x^2 - c x - d) the
element ``a + b x`` is encoded as ``a + p*b``.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from .poly import QONLY, LaurentPoly, polynomial_in

DEFAULT_BUDGET = 10 ** 7

Row = Tuple[int, ...]


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__("enumeration needs %d objects, budget is %d" % (required, budget))


class AmbientMismatch(ValueError):
    pass


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class PrimePowerField:
    """F_p (degree 1) or F_{p^2} (degree 2) with exhaustive operation tables."""

    p: int
    degree: int = 1
    modulus: Optional[Tuple[int, int]] = None  # (c, d): x^2 = c x + d
    add: Tuple[Row, ...] = field(init=False, repr=False, compare=False)
    mul: Tuple[Row, ...] = field(init=False, repr=False, compare=False)
    neg: Row = field(init=False, repr=False, compare=False)
    inv: Row = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p, deg = self.p, self.degree
        if not _is_prime(p):
            raise ValueError("%d is not prime" % p)
        if deg not in (1, 2):
            raise ValueError("only F_p and F_{p^2} are supported")
        if deg == 2 and self.modulus is None:
            object.__setattr__(self, "modulus", _irreducible_quadratic(p))
        q = p ** deg
        if deg == 1:
            add = tuple(tuple((a + b) % p for b in range(q)) for a in range(q))
            mul = tuple(tuple((a * b) % p for b in range(q)) for a in range(q))
        else:
            c, d = self.modulus

            def split(a):
                return a % p, a // p

            def enc(x, y):
                return x % p + p * (y % p)

            add = tuple(
                tuple(enc(split(a)[0] + split(b)[0], split(a)[1] + split(b)[1]) for b in range(q))
                for a in range(q)
            )

            def m(a, b):
                a0, a1 = split(a)
                b0, b1 = split(b)
                # (a0 + a1 x)(b0 + b1 x) with x^2 = c x + d
                hi = a1 * b1
                return enc(a0 * b0 + hi * d, a0 * b1 + a1 * b0 + hi * c)

            mul = tuple(tuple(m(a, b) for b in range(q)) for a in range(q))
        neg = tuple(next(b for b in range(q) if add[a][b] == 0) for a in range(q))
        inv = tuple([0] + [next(b for b in range(q) if mul[a][b] == 1) for a in range(1, q)])
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "inv", inv)
        if q <= 9:
            self.verify_axioms()

    @property
    def order(self) -> int:
        return self.p ** self.degree

    def __str__(self):
        return "F_%d" % self.order

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def generator(self) -> int:
        """The class of x in F_p[x]/(x^2 - c x - d)."""
        if self.degree != 2:
            raise ValueError("F_p has no quadratic generator")
        return self.p

    def verify_axioms(self) -> None:
        q = self.order
        els = range(q)
        add, mul = self.add, self.mul
        for a in els:
            assert add[a][0] == a and mul[a][1] == a
            for b in els:
                assert add[a][b] == add[b][a] and mul[a][b] == mul[b][a]
                for c in els:
                    assert add[add[a][b]][c] == add[a][add[b][c]]
                    assert mul[mul[a][b]][c] == mul[a][mul[b][c]]
                    assert mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
        for a in range(1, q):
            assert mul[a][self.inv[a]] == 1


def _irreducible_quadratic(p: int) -> Tuple[int, int]:
    for c in range(p):
        for d in range(1, p):
            if all((x * x - c * x - d) % p for x in range(p)):
                return c, d
    raise AssertionError("no irreducible quadratic mod %d" % p)


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimePowerField:
    return PrimePowerField(p, 1)


@lru_cache(maxsize=None)
def quadratic_field(p: int) -> PrimePowerField:
    return PrimePowerField(p, 2)


# --- linear algebra ---------------------------------------------------------


def rref(rows: Sequence[Sequence[int]], F: PrimePowerField, ncols: int) -> Tuple[Row, ...]:
    """Reduced row-echelon form with zero rows dropped."""
    m = [list(r) for r in rows]
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    pivot_row = 0
    for col in range(ncols):
        pr = next((i for i in range(pivot_row, len(m)) if m[i][col]), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        s = inv[m[pivot_row][col]]
        m[pivot_row] = [mul[s][x] for x in m[pivot_row]]
        prow = m[pivot_row]
        for i in range(len(m)):
            if i != pivot_row and m[i][col]:
                f = neg[m[i][col]]
                m[i] = [add[x][mul[f][y]] for x, y in zip(m[i], prow)]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return tuple(tuple(r) for r in m[:pivot_row])


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^r stored as its canonical reduced row-echelon basis."""

    field: PrimePowerField
    r: int
    rows: Tuple[Row, ...]

    @classmethod
    def from_vectors(cls, F: PrimePowerField, r: int, vectors: Sequence[Sequence[int]]) -> "Subspace":
        for v in vectors:
            if len(v) != r:
                raise AmbientMismatch("vector %r is not in F^%d" % (tuple(v), r))
        return cls(F, r, rref(vectors, F, r))

    @classmethod
    def zero(cls, F: PrimePowerField, r: int) -> "Subspace":
        return cls(F, r, ())

    @classmethod
    def full(cls, F: PrimePowerField, r: int) -> "Subspace":
        return cls.coordinate(F, r, range(r))

    @classmethod
    def coordinate(cls, F: PrimePowerField, r: int, indices) -> "Subspace":
        """Span of the standard basis vectors e_i, i in ``indices`` (0-based)."""
        vecs = []
        for i in sorted(indices):
            v = [0] * r
            v[i] = 1
            vecs.append(v)
        return cls(F, r, tuple(tuple(v) for v in vecs))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(row) if x) for row in self.rows)

    def is_canonical(self) -> bool:
        return rref(self.rows, self.field, self.r) == self.rows

    def _check(self, other: "Subspace") -> None:
        if self.field != other.field or self.r != other.r:
            raise AmbientMismatch("subspaces of %s^%d and %s^%d" % (self.field, self.r, other.field, other.r))

    def span(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.r, rref(self.rows + other.rows, self.field, self.r))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: rref of [a | a ; b | 0]; rows with zero left half span the intersection."""
        self._check(other)
        r = self.r
        zero = (0,) * r
        block = [row + row for row in self.rows] + [row + zero for row in other.rows]
        red = rref(block, self.field, 2 * r)
        inter = [row[r:] for row in red if not any(row[:r])]
        return Subspace(self.field, r, rref(inter, self.field, r))

    def contains(self, other: "Subspace") -> bool:
        return self.span(other) == self

    def contains_vector(self, v: Sequence[int]) -> bool:
        return rref(self.rows + (tuple(v),), self.field, self.r) == self.rows

    def vectors(self) -> Iterator[Row]:
        F = self.field
        for coeffs in itertools.product(range(F.order), repeat=self.dim):
            v = [0] * self.r
            for c, row in zip(coeffs, self.rows):
                if c:
                    v = [F.add[x][F.mul[c][y]] for x, y in zip(v, row)]
            yield tuple(v)

    def to_text(self) -> str:
        """Echelon rows as digit strings (one digit per coordinate), separated by ';'."""
        if self.field.order > 10:
            raise ValueError("digit format needs |F| <= 10")
        return ";".join("".join(str(x) for x in row) for row in self.rows) or "0"

    @classmethod
    def from_text(cls, text: str, F: PrimePowerField, r: int) -> "Subspace":
        text = text.strip()
        if text == "0":
            return cls.zero(F, r)
        rows = [tuple(int(ch) for ch in part) for part in text.split(";")]
        return cls.from_vectors(F, r, rows)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "Subspace(%s^%d: %s)" % (self.field, self.r, self.to_text() if self.field.order <= 10 else self.rows)


# --- counting ---------------------------------------------------------------


def _q_poly(*coeffs_by_exp: Tuple[int, int]) -> List[int]:
    top = max(e for e, _ in coeffs_by_exp)
    out = [0] * (top + 1)
    for e, c in coeffs_by_exp:
        out[e] += c
    return out


def _poly_mul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(num: List[int], den: List[int]) -> List[int]:
    num = list(num)
    while len(den) > 1 and den[-1] == 0:
        den = den[:-1]
    lead = den[-1]
    quot = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c % lead:
            raise ArithmeticError("inexact division")
        c //= lead
        quot[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    if any(num):
        raise ArithmeticError("inexact division: nonzero remainder")
    return quot


@lru_cache(maxsize=None)
def _gaussian_coeffs(k: int, l: int) -> Tuple[int, ...]:
    num, den = [1], [1]
    for i in range(1, k + 1):
        num = _poly_mul(num, _q_poly((l, 1), (i - 1, -1)))
        den = _poly_mul(den, _q_poly((k, 1), (i - 1, -1)))
    return tuple(_poly_divexact(num, den))


def gaussian_binomial(k: int, l: int, q=None):
    """Number of k-dimensional subspaces of F_q^l; a polynomial in Q when ``q`` is None.

    Computed from prod_{i=1}^{k} (q^l - q^{i-1}) / (q^k - q^{i-1}) by exact division.
    """
    if k < 0 or l < 0 or k > l:
        return 0 if q is not None else LaurentPoly.zero(QONLY)
    if q is None:
        return polynomial_in(_gaussian_coeffs(k, l))
    num = den = 1
    for i in range(1, k + 1):
        num *= q ** l - q ** (i - 1)
        den *= q ** k - q ** (i - 1)
    quot, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("Gaussian binomial division is inexact")
    return quot


def enumerate_subspaces(
    r: int, j: int, F: PrimePowerField, budget: int = DEFAULT_BUDGET
) -> Iterator[Subspace]:
    """All j-dimensional subspaces of F^r, each exactly once.

    Order: pivot-column tuples in lexicographic order, then free entries in
    lexicographic order (row-major over the non-pivot positions to the right
    of each pivot).
    """
    if not 0 <= j <= r:
        raise ValueError("need 0 <= j <= r, got j=%d r=%d" % (j, r))
    need = gaussian_binomial(j, r, F.order)
    if need > budget:
        raise BudgetExceeded(need, budget)
    return _enumerate(r, j, F)


def _enumerate(r: int, j: int, F: PrimePowerField) -> Iterator[Subspace]:
    q = F.order
    for pivots in itertools.combinations(range(r), j):
        pset = set(pivots)
        free = [(row, col) for row, pc in enumerate(pivots) for col in range(pc + 1, r) if col not in pset]
        for values in itertools.product(range(q), repeat=len(free)):
            m = [[0] * r for _ in range(j)]
            for row, pc in enumerate(pivots):
                m[row][pc] = 1
            for (row, col), v in zip(free, values):
                m[row][col] = v
            yield Subspace(F, r, tuple(tuple(x) for x in m))


def count_census_csv(r: int, F: PrimePowerField, budget: int = DEFAULT_BUDGET) -> str:
    """CSV census: j, enumerated count, Gaussian binomial, match."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["r", "j", "q", "enumerated", "gaussian_binomial", "match"])
    for j in range(r + 1):
        n = sum(1 for _ in enumerate_subspaces(r, j, F, budget))
        g = gaussian_binomial(j, r, F.order)
        w.writerow([r, j, F.order, n, g, n == g])
    return buf.getvalue()


# --- profile counting -------------------------------------------------------


def profile_count(D: Subspace, i: int, j: int, budget: int = DEFAULT_BUDGET) -> Tuple[int, int]:
    """Group j-dim subspaces W by (W cap D, W + D); return (#pairs with dim W cap D = i, fiber size).

    Raises AssertionError if the fibers of type i are not all the same size or
    differ from the closed forms g(i,n) g(j-i,r-n) and q^{(j-i)(n-i)}.
    """
    F, r, n = D.field, D.r, D.dim
    if not (0 <= i <= min(j, n) and j - i <= r - n):
        raise ValueError("type i=%d impossible for j=%d, n=%d, r=%d" % (i, j, n, r))
    fibers = {}
    for W in enumerate_subspaces(r, j, F, budget):
        inter = W.intersect(D)
        if inter.dim != i:
            continue
        key = (inter, W.span(D))
        fibers[key] = fibers.get(key, 0) + 1
    sizes = set(fibers.values())
    assert len(sizes) == 1, "fiber sizes differ within type %d: %s" % (i, sorted(sizes))
    classes, fiber = len(fibers), sizes.pop()
    q = F.order
    assert classes == gaussian_binomial(i, n, q) * gaussian_binomial(j - i, r - n, q), classes
    assert fiber == q ** ((j - i) * (n - i)), fiber
    return classes, fiber


# --- symplectic geometry ----------------------------------------------------


@dataclass(frozen=True)
class SymplecticSpace:
    """F_p^{2g} with the standard form <x, y> = sum_i x_i y_{g+i} - x_{g+i} y_i."""

    g: int
    field: PrimePowerField

    @property
    def dim(self) -> int:
        return 2 * self.g

    def form(self, x: Sequence[int], y: Sequence[int]) -> int:
        F, g = self.field, self.g
        acc = 0
        for i in range(g):
            acc = F.add[acc][F.mul[x[i]][y[g + i]]]
            acc = F.sub(acc, F.mul[x[g + i]][y[i]])
        return acc

    def matrix(self) -> Tuple[Row, ...]:
        n = self.dim
        basis = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        return tuple(tuple(self.form(a, b) for b in basis) for a in basis)

    def check_form(self) -> None:
        m = self.matrix()
        n = self.dim
        assert all(m[i][i] == 0 for i in range(n)), "form is not alternating"
        assert rref(m, self.field, n) == Subspace.full(self.field, n).rows, "form is degenerate"

    def is_isotropic(self, W: Subspace) -> bool:
        return all(self.form(a, b) == 0 for a in W.rows for b in W.rows)

    def perp(self, W: Subspace) -> Subspace:
        """Orthogonal complement under the symplectic form (kernel of v -> <w_k, v>)."""
        F, n = self.field, self.dim
        # <w, v> = sum_i J(w)_i v_i; solve J(W) v = 0 via the null space of the rref
        eqs = [tuple(self.form(w, tuple(1 if k == i else 0 for k in range(n))) for i in range(n)) for w in W.rows]
        return null_space(eqs, F, n)

    def lagrangian(self, indices=None) -> Subspace:
        """The Lagrangian spanned by e_{g+1}..e_{2g} by default."""
        g = self.g
        return Subspace.coordinate(self.field, 2 * g, indices if indices is not None else range(g, 2 * g))


def null_space(eqs: Sequence[Sequence[int]], F: PrimePowerField, n: int) -> Subspace:
    red = rref(eqs, F, n)
    pivots = [next(i for i, x in enumerate(row) if x) for row in red]
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * n
        v[fcol] = 1
        for row, pc in zip(red, pivots):
            v[pc] = F.neg[row[fcol]]
        basis.append(v)
    return Subspace.from_vectors(F, n, basis)


def enumerate_isotropic(g: int, j: int, p: int, budget: int = DEFAULT_BUDGET) -> Iterator[Subspace]:
    """All j-dimensional isotropic subspaces of the standard symplectic F_p^{2g}."""
    if not 0 <= j <= g:
        raise ValueError("isotropic subspaces have dimension <= g")
    S = SymplecticSpace(g, prime_field(p))
    for W in enumerate_subspaces(2 * g, j, S.field, budget):
        if S.is_isotropic(W):
            yield W


def count_lagrangian(g: int, p: int, budget: int = DEFAULT_BUDGET) -> int:
    return sum(1 for _ in enumerate_isotropic(g, g, p, budget))


# --- quadratic structure ----------------------------------------------------


@dataclass(frozen=True)
class QuadraticStructure:
    """F_q^{2m} viewed as F_{q^2}^m: coordinates (2k, 2k+1) hold x + y*theta.

    theta^2 = c theta + d, with (c, d) taken from the quadratic extension of F_q.
    """

    field: PrimePowerField
    m: int

    def __post_init__(self):
        if self.field.degree != 1:
            raise ValueError("base field must be prime")

    @property
    def r(self) -> int:
        return 2 * self.m

    def theta(self, v: Sequence[int]) -> Row:
        F = self.field
        c, d = quadratic_field(F.p).modulus
        out = []
        for k in range(self.m):
            x, y = v[2 * k], v[2 * k + 1]
            # theta (x + y theta) = d y + (x + c y) theta
            out += [F.mul[d][y], F.add[x][F.mul[c][y]]]
        return tuple(out)

    def is_stable(self, W: Subspace) -> bool:
        return all(W.contains_vector(self.theta(row)) for row in W.rows)

    def line(self, k: int) -> Subspace:
        """The F_{q^2}-line spanned by the k-th pair of coordinates."""
        return Subspace.coordinate(self.field, self.r, (2 * k, 2 * k + 1))


def f_q2_span(W: Subspace, structure: Optional[QuadraticStructure]) -> Subspace:
    """Smallest F_{q^2}-stable subspace containing W, namely W + theta W."""
    if structure is None:
        raise ValueError("no F_{q^2} structure declared")
    if W.r != structure.r or W.field != structure.field:
        raise AmbientMismatch("subspace does not live in the structured space")
    images = tuple(structure.theta(row) for row in W.rows)
    return Subspace(W.field, W.r, rref(W.rows + images, W.field, W.r))
