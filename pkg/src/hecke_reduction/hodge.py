"""Hodge numbers of the generic middle-cohomology submotive.

Siegel genus g: h^{i, d-i} counts subsets of {1..g} with element sum i, in
weight d = g(g+1)/2.  Unitary signature (r-n, n): h^{i, d-i} counts n-subsets
of {1..r} whose sum exceeds 1+...+n by i, in weight d = n(r-n).  The same
unitary formula read for t-motives is a conjecture, so the
functional interpretation is labelled CONJECTURAL.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Tuple


@dataclass(frozen=True)
class HodgeVector:
    weight: int
    entries: Tuple[int, ...]  # h^{0,d}, h^{1,d-1}, ..., h^{d,0}
    kind: str = "siegel"

    def __post_init__(self):
        if len(self.entries) != self.weight + 1:
            raise ValueError("a weight-%d vector has %d entries" % (self.weight, self.weight + 1))
        if any(h < 0 for h in self.entries):
            raise ValueError("Hodge numbers are nonnegative")

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def is_symmetric(self) -> bool:
        return self.entries == self.entries[::-1]

    @property
    def status(self) -> str:
        return "CONJECTURAL" if self.kind == "functional" else "THEOREM"

    def h(self, i: int) -> int:
        """h^{i, d-i}, zero outside 0..d."""
        return self.entries[i] if 0 <= i <= self.weight else 0

    def to_json_obj(self) -> dict:
        return {"kind": self.kind, "weight": self.weight, "entries": list(self.entries), "status": self.status}

    def to_text(self) -> str:
        tag = " [CONJECTURAL]" if self.kind == "functional" else ""
        return "%s weight %d: (%s)%s" % (self.kind, self.weight, ",".join(map(str, self.entries)), tag)


def _subset_sum_counts(elements, size=None):
    """counts[s][k] = number of k-subsets with element sum s, by the usual knapsack DP."""
    total = sum(elements)
    kmax = len(elements) if size is None else size
    dp = [[0] * (kmax + 1) for _ in range(total + 1)]
    dp[0][0] = 1
    for x in elements:
        for s in range(total, x - 1, -1):
            for k in range(kmax, 0, -1):
                dp[s][k] += dp[s - x][k - 1]
    return dp


def siegel_hodge(g: int) -> HodgeVector:
    if g < 1:
        raise ValueError("genus must be >= 1")
    d = g * (g + 1) // 2
    dp = _subset_sum_counts(range(1, g + 1))
    vec = HodgeVector(d, tuple(sum(dp[i]) for i in range(d + 1)), "siegel")
    assert vec.total == 2 ** g and vec.is_symmetric
    return vec


def unitary_hodge(r: int, n: int, functional: bool = False) -> HodgeVector:
    if not 1 <= n <= r:
        raise ValueError("need 1 <= n <= r")
    d = n * (r - n)
    base = n * (n + 1) // 2
    dp = _subset_sum_counts(range(1, r + 1), n)
    vec = HodgeVector(d, tuple(dp[base + i][n] for i in range(d + 1)), "functional" if functional else "unitary")
    assert vec.total == comb(r, n) and vec.is_symmetric
    return vec


def hodge_json(vec: HodgeVector) -> str:
    return json.dumps(vec.to_json_obj(), sort_keys=True)
