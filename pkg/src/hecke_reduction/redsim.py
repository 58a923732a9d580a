"""Reduction-type model: a point t is (F^r, D) with D the kernel of reduction.

Hecke neighbours of t under T_{p,j} are the j-dimensional subspaces W of F^r
(the kernels of the isogenies), the reduction type is dim(W cap D), and two
neighbours reduce to the same closed point iff their keys agree.  The key is
(W cap D, W + D) in the GL flavors and W cap D alone in the Siegel flavor.

Statements checked for the ordinary and Siegel flavors are theorems; the
non-ordinary, quadratic and unitary flavors only produce reports, labelled
CONJECTURAL.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from .finvec import (
    DEFAULT_BUDGET,
    PrimePowerField,
    QuadraticStructure,
    Subspace,
    SymplecticSpace,
    enumerate_subspaces,
    f_q2_span,
    gaussian_binomial,
    prime_field,
    quadratic_field,
)

ORDINARY = "ordinary"
SIEGEL = "siegel"
NONORDINARY = "nonordinary"
QUADRATIC = "quadratic"
UNITARY = "unitary"

CONJECTURAL_FLAVORS = (NONORDINARY, QUADRATIC, UNITARY)


class WrongFlavor(ValueError):
    pass


@dataclass(frozen=True)
class ModelPoint:
    field: PrimePowerField
    r: int
    D: Subspace
    flavor: str
    n: int
    structure: Optional[QuadraticStructure] = None

    def __post_init__(self):
        if self.D.r != self.r or self.D.field != self.field:
            raise ValueError("D does not live in F^r")
        if self.flavor == ORDINARY:
            assert self.D.dim == self.n, "ordinary point needs dim D = n"
        elif self.flavor == SIEGEL:
            S = self.symplectic
            assert self.D.dim * 2 == self.r and S.is_isotropic(self.D), "D must be Lagrangian"
        elif self.flavor == NONORDINARY:
            assert self.D.dim == 2 and self.n == 1, "non-ordinary point needs dim D = 2, n = 1"
        elif self.flavor == QUADRATIC:
            assert self.structure is not None and self.structure.is_stable(self.D), "D must be F_{q^2}-stable"
            assert self.D.dim == 2, "D must be an F_{q^2}-line"
        elif self.flavor != UNITARY:
            raise ValueError("unknown flavor %r" % self.flavor)

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def g(self) -> int:
        return self.r // 2

    @property
    def symplectic(self) -> SymplecticSpace:
        return SymplecticSpace(self.r // 2, self.field)

    # constructors

    @classmethod
    def ordinary(cls, r: int, n: int, q: int = 2) -> "ModelPoint":
        """D spanned by the last n basis vectors (GL_r acts transitively, so this is no loss)."""
        if r < 1 or not 0 <= n <= r:
            raise ValueError("need r >= 1 and 0 <= n <= r")
        F = prime_field(q)
        return cls(F, r, Subspace.coordinate(F, r, range(r - n, r)), ORDINARY, n)

    @classmethod
    def siegel(cls, g: int, p: int = 2) -> "ModelPoint":
        S = SymplecticSpace(g, prime_field(p))
        return cls(S.field, 2 * g, S.lagrangian(), SIEGEL, g)

    @classmethod
    def nonordinary(cls, r: int, q: int = 2) -> "ModelPoint":
        if r < 2:
            raise ValueError("a non-ordinary point needs r >= 2")
        F = prime_field(q)
        return cls(F, r, Subspace.coordinate(F, r, (r - 2, r - 1)), NONORDINARY, 1)

    @classmethod
    def quadratic(cls, r: int, q: int = 2) -> "ModelPoint":
        if r < 2 or r % 2:
            raise ValueError("the quadratic flavor needs even r >= 2")
        F = prime_field(q)
        st = QuadraticStructure(F, r // 2)
        return cls(F, r, st.line(r // 2 - 1), QUADRATIC, 1, st)

    @classmethod
    def unitary(cls, r: int, n: int, p: int = 2) -> "ModelPoint":
        """Over F_{p^2}: D has F_{p^2}-dimension max(r-n, n)."""
        if r < 1 or not 0 <= n <= r:
            raise ValueError("need r >= 1 and 0 <= n <= r")
        F = quadratic_field(p)
        d = max(r - n, n)
        return cls(F, r, Subspace.coordinate(F, r, range(r - d, r)), UNITARY, n)


def hecke_orbit(t: ModelPoint, j: int, budget: int = DEFAULT_BUDGET) -> Iterator[Subspace]:
    """Kernels of the isogenies in T_{p,j}(t); isotropic ones only for the Siegel flavor."""
    if t.flavor == SIEGEL:
        S = t.symplectic
        if not 0 <= j <= t.g:
            raise ValueError("isotropic kernels have dimension <= g")
        return (W for W in enumerate_subspaces(t.r, j, t.field, budget) if S.is_isotropic(W))
    return enumerate_subspaces(t.r, j, t.field, budget)


def reduction_type(t: ModelPoint, W: Subspace) -> int:
    return W.intersect(t.D).dim


def is_frobenius(t: ModelPoint, W: Subspace) -> bool:
    return W == t.D


def closed_point_key(t: ModelPoint, W: Subspace) -> Tuple[Subspace, Optional[Subspace]]:
    inter = W.intersect(t.D)
    if t.flavor == SIEGEL:
        # for isotropic W the span is determined: W + D = (W cap D)^perp
        assert W.span(t.D) == t.symplectic.perp(inter)
        return inter, None
    return inter, W.span(t.D)


# --- census -----------------------------------------------------------------


@dataclass
class TypeRow:
    i: int
    classes: int
    fibers: Counter
    formula_classes: Optional[int]
    formula_fiber: Optional[int]

    @property
    def fiber(self) -> Optional[int]:
        return next(iter(self.fibers)) if len(self.fibers) == 1 else None

    @property
    def match(self) -> Optional[bool]:
        if self.formula_classes is None:
            return None
        return self.classes == self.formula_classes and self.fiber == self.formula_fiber

    @property
    def total(self) -> int:
        return sum(size * mult for size, mult in self.fibers.items())


@dataclass
class ReductionCensus:
    flavor: str
    r: int
    n: int
    q: int
    j: int
    rows: List[TypeRow] = field(default_factory=list)
    total: int = 0
    expected_total: Optional[int] = None

    @property
    def conjectural(self) -> bool:
        return self.flavor in CONJECTURAL_FLAVORS

    @property
    def ok(self) -> bool:
        if self.expected_total is not None and self.total != self.expected_total:
            return False
        return all(row.match is not False for row in self.rows)

    def row(self, i: int) -> TypeRow:
        for row in self.rows:
            if row.i == i:
                return row
        raise KeyError(i)

    def _records(self):
        for row in self.rows:
            fiber = row.fiber if row.fiber is not None else ";".join(
                "%dx%d" % (size, mult) for size, mult in sorted(row.fibers.items()))
            yield {
                "i": row.i,
                "classes": row.classes,
                "fiber": fiber,
                "formula_classes": "" if row.formula_classes is None else row.formula_classes,
                "formula_fiber": "" if row.formula_fiber is None else row.formula_fiber,
                "match": "" if row.match is None else str(row.match).lower(),
            }

    def to_csv(self) -> str:
        buf = io.StringIO()
        cols = ["i", "classes", "fiber", "formula_classes", "formula_fiber", "match"]
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for rec in self._records():
            w.writerow(rec)
        return buf.getvalue()

    def to_json_obj(self) -> dict:
        return {
            "flavor": self.flavor,
            "r": self.r,
            "n": self.n,
            "q": self.q,
            "j": self.j,
            "status": "CONJECTURAL" if self.conjectural else "THEOREM",
            "total": self.total,
            "expected_total": self.expected_total,
            "rows": [
                {
                    "i": row.i,
                    "classes": row.classes,
                    "fibers": {str(k): v for k, v in sorted(row.fibers.items())},
                    "formula_classes": row.formula_classes,
                    "formula_fiber": row.formula_fiber,
                    "match": row.match,
                }
                for row in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    def to_text(self) -> str:
        head = "census %s r=%d n=%d q=%d j=%d: total %d" % (self.flavor, self.r, self.n, self.q, self.j, self.total)
        if self.expected_total is not None:
            head += " (expected %d)" % self.expected_total
        if self.conjectural:
            head += " [CONJECTURAL]"
        lines = [head]
        for rec in self._records():
            line = "  i=%(i)s classes=%(classes)s fiber=%(fiber)s" % rec
            if rec["formula_classes"] != "":
                line += " formula=(%(formula_classes)s, %(formula_fiber)s) match=%(match)s" % rec
            lines.append(line)
        return "\n".join(lines)


def _formulas(t: ModelPoint, i: int, j: int) -> Tuple[Optional[int], Optional[int]]:
    q = t.q
    if t.flavor == ORDINARY:
        return gaussian_binomial(i, t.n, q) * gaussian_binomial(j - i, t.r - t.n, q), q ** ((j - i) * (t.n - i))
    if t.flavor == SIEGEL and j == t.g:
        g = t.g
        return gaussian_binomial(i, g, q), q ** ((g + 1 - i) * (g - i) // 2)
    return None, None


def _expected_total(t: ModelPoint, j: int) -> Optional[int]:
    if t.flavor == SIEGEL:
        if j != t.g:
            return None
        total = 1
        for i in range(1, t.g + 1):
            total *= t.q ** i + 1
        return total
    return gaussian_binomial(j, t.r, t.q)


def census(t: ModelPoint, j: int, strict: bool = True, budget: int = DEFAULT_BUDGET) -> ReductionCensus:
    """Group T_{p,j}(t) by closed-point key and compare with the closed forms.

    With ``strict`` the theorem-level statements (ordinary and Siegel flavors)
    are asserted; otherwise mismatches are only recorded in the report.
    """
    fibers: Dict[int, Counter] = {}
    frob_fibers: Counter = Counter()
    total = 0
    for W in hecke_orbit(t, j, budget):
        key = closed_point_key(t, W)
        fibers.setdefault(key[0].dim, Counter())[key] += 1
        total += 1
    rows = []
    for i in sorted(fibers, reverse=True):
        by_key = fibers[i]
        fc, ff = _formulas(t, i, j)
        rows.append(TypeRow(i, len(by_key), Counter(by_key.values()), fc, ff))
        if t.n == 1 and i == 1 and t.flavor == ORDINARY:
            frob_fibers.update(by_key.values())
    out = ReductionCensus(t.flavor, t.r, t.n, t.q, j, rows, total, _expected_total(t, j))
    if strict and not out.conjectural:
        assert out.expected_total is None or total == out.expected_total, \
            "orbit size %d != %s" % (total, out.expected_total)
        for row in rows:
            assert len(row.fibers) == 1, "type %d fibers differ: %s" % (row.i, dict(row.fibers))
            assert row.match is not False, "type %d: got (%d, %s), formula (%s, %s)" % (
                row.i, row.classes, row.fiber, row.formula_classes, row.formula_fiber)
        # kernels containing D are always different points
        assert set(frob_fibers) <= {1}, "n=1 type-1 fibers not all 1: %s" % dict(frob_fibers)
    return out


# --- non-ordinary points (conjectural) --------------------------------------


@dataclass
class NonordinaryReport:
    flavor: str
    r: int
    q: int
    inside: int  # lines W inside D
    inside_classes: int
    outside: int
    outside_classes: int
    outside_fibers: Counter

    def to_json_obj(self) -> dict:
        return {
            "flavor": self.flavor,
            "r": self.r,
            "q": self.q,
            "status": "CONJECTURAL",
            "inside_D": {"lines": self.inside, "classes": self.inside_classes},
            "outside_D": {
                "lines": self.outside,
                "classes": self.outside_classes,
                "fibers": {str(k): v for k, v in sorted(self.outside_fibers.items())},
            },
        }

    def to_text(self) -> str:
        span = "F_q^2-span" if self.flavor == QUADRATIC else "F_q-span"
        fib = ", ".join("%dx%d" % kv for kv in sorted(self.outside_fibers.items()))
        return "\n".join([
            "nonordinary %s r=%d q=%d [CONJECTURAL]" % (self.flavor, self.r, self.q),
            "  lines in D: %d, classes %d (Psi_1 point, also in Phi_1)" % (self.inside, self.inside_classes),
            "  lines outside D: %d, classes by %s of <W, D>: %d, fibers %s" % (
                self.outside, span, self.outside_classes, fib or "none"),
        ])


def nonordinary_census(t: ModelPoint, j: int = 1, budget: int = DEFAULT_BUDGET) -> NonordinaryReport:
    """Lines inside D form the Psi_1 class; the rest are grouped by the span <W, D>.

    The span is taken over F_q for a non-ordinary point and over F_{q^2} for
    the quadratic flavor.  The number of classes inside D is reported, not
    assumed to be 1.
    """
    if t.flavor not in (NONORDINARY, QUADRATIC):
        raise WrongFlavor("nonordinary_census needs a nonordinary or quadratic point")
    if j != 1:
        raise ValueError("only j = 1 is modelled")
    inside = 0
    outside: Counter = Counter()
    for W in hecke_orbit(t, 1, budget):
        if t.D.contains(W):
            inside += 1
            continue
        key = W.span(t.D)
        if t.flavor == QUADRATIC:
            key = f_q2_span(key, t.structure)
        outside[key] += 1
    return NonordinaryReport(
        t.flavor, t.r, t.q, inside, 1 if inside else 0,
        sum(outside.values()), len(outside), Counter(outside.values()),
    )
