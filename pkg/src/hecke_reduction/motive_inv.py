"""Discrete invariants (nu; k_1..k_{nu+1}) of t-motives with nilpotent N.

r = k_1 + ... + k_{nu+1} and n = k_2 + 2 k_3 + ... + nu k_{nu+1}.  The
Hodge-Pink weight -i+1 occurs k_i times.  The Levi block prediction keeps
zero blocks and flags them; it is a conjecture and is labelled so.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional, Tuple


@dataclass(frozen=True)
class NilpotentInvariants:
    nu: int
    k: Tuple[int, ...]

    @property
    def r(self) -> int:
        return sum(self.k)

    @property
    def n(self) -> int:
        return sum(i * ki for i, ki in enumerate(self.k))

    def to_json_obj(self) -> dict:
        return {"nu": self.nu, "k": list(self.k), "r": self.r, "n": self.n}


@dataclass(frozen=True)
class Validation:
    ok: bool
    diagnostics: Tuple[str, ...]

    def __bool__(self):
        return self.ok


class InvalidInvariants(ValueError):
    pass


def validate(nu: int, k, r: Optional[int] = None, n: Optional[int] = None) -> Validation:
    k = tuple(k)
    diag = []
    if nu < 1:
        diag.append("nu must be >= 1")
    if len(k) != nu + 1:
        diag.append("expected %d entries k_1..k_%d, got %d" % (nu + 1, nu + 1, len(k)))
    if any(x < 0 for x in k):
        diag.append("entries must be nonnegative")
    if r is not None and sum(k) != r:
        diag.append("sum k_i = %d, expected r = %d" % (sum(k), r))
    weighted = sum(i * x for i, x in enumerate(k))
    if n is not None and weighted != n:
        diag.append("sum (i-1) k_i = %d, expected n = %d" % (weighted, n))
    if nu > 1 and len(k) == nu + 1 and k[-1] < 1:
        diag.append("k_%d = 0, so nu is not minimal" % (nu + 1))
    return Validation(not diag, tuple(diag))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_invariants(r: int, n: int, nu_max: int) -> List[NilpotentInvariants]:
    """All valid tuples with nu <= nu_max, sorted by (nu, k)."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    out = []
    for nu in range(1, nu_max + 1):
        for k in _compositions(r, nu + 1):
            if validate(nu, k, r, n):
                out.append(NilpotentInvariants(nu, k))
    return sorted(out, key=lambda inv: (inv.nu, inv.k))


def _require_valid(inv: NilpotentInvariants) -> None:
    v = validate(inv.nu, inv.k)
    if not v:
        raise InvalidInvariants("; ".join(v.diagnostics))


def to_weights(inv: NilpotentInvariants) -> Tuple[int, ...]:
    """Hodge-Pink weights, descending: value -i+1 with multiplicity k_i."""
    _require_valid(inv)
    return tuple(w for i, ki in enumerate(inv.k) for w in [-i] * ki)


@dataclass(frozen=True)
class LeviBlock:
    size: int
    zero: bool


def levi_blocks(inv: NilpotentInvariants) -> List[LeviBlock]:
    _require_valid(inv)
    return [LeviBlock(ki, ki == 0) for ki in inv.k]


def invariants_json(items: List[NilpotentInvariants]) -> str:
    out = []
    for inv in items:
        obj = inv.to_json_obj()
        obj["weights"] = list(to_weights(inv))
        obj["levi_blocks"] = [{"size": b.size, "zero": b.zero} for b in levi_blocks(inv)]
        obj["levi_status"] = "CONJECTURAL"
        out.append(obj)
    return json.dumps(out, sort_keys=True)
