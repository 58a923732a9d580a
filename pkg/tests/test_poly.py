from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hecke_reduction.poly import (
    QONLY,
    LaurentPoly,
    NotSymmetric,
    SiegelWeylAction,
    SymmetricAction,
    VarSet,
    VarSetMismatch,
    elementary_symmetric,
    is_invariant,
    sym_expand,
    sym_reduce,
)

VS = VarSet.gl(3)
U1, U2, U3, Q = (LaurentPoly.var(VS, x) for x in ("U1", "U2", "U3", "Q"))

exps = st.tuples(*[st.integers(-3, 3)] * VS.nvars)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(exps, coeffs, max_size=5).map(lambda d: LaurentPoly(VS, d))
points = st.fixed_dictionaries(
    {name: st.sampled_from([Fraction(-2), Fraction(1, 3), Fraction(2), Fraction(5, 2)]) for name in VS.names}
)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly.zero(VS)


@settings(max_examples=60, deadline=None)
@given(polys, polys, points)
def test_evaluate_is_homomorphism(a, b, pt):
    assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)


def test_q_is_last_and_names_distinct():
    assert VS.names[-1] == "Q"
    assert VarSet.siegel(2).names == ("U1", "U2", "V1", "V2", "Q")
    with pytest.raises(ValueError):
        VarSet.symbols(["A", "A"])


def test_basic_examples():
    assert U1 + (-U1) == LaurentPoly.zero(VS)
    s1 = U1 + U2
    assert s1 + s1 == 2 * U1 + 2 * U2
    assert (U1 + Q ** -1) + (U2 - Q ** -1) == U1 + U2
    assert U1 * U1 ** -1 == LaurentPoly.const(VS, 1)
    assert (U1 + U2) * (U1 - U2) == U1 ** 2 - U2 ** 2


def test_evaluate_examples():
    assert (U1 + U2).evaluate({"U1": 1, "U2": 2}) == 3
    assert (Q ** -1 * U1 * U2).evaluate({"Q": 3, "U1": 3, "U2": 2}) == 2
    assert elementary_symmetric(VS, ("U1", "U2", "U3"), 2).evaluate({"U1": 1, "U2": 1, "U3": 1}) == 3


def test_evaluate_errors():
    with pytest.raises(Exception):
        (U1 + U2).evaluate({"U1": 1})
    with pytest.raises(ZeroDivisionError):
        (U1 ** -1).evaluate({"U1": 0})


def test_varset_mismatch():
    with pytest.raises(VarSetMismatch):
        U1 + LaurentPoly.var(VarSet.gl(2), "U1")


def test_elementary_symmetric():
    names = ("U1", "U2", "U3")
    assert elementary_symmetric(VS, names, 0) == LaurentPoly.const(VS, 1)
    assert elementary_symmetric(VS, names, 1) == U1 + U2 + U3
    assert elementary_symmetric(VS, names, 3) == U1 * U2 * U3
    assert len(elementary_symmetric(VarSet.gl(4), ("U1", "U2", "U3", "U4"), 2)) == 6
    with pytest.raises(ValueError):
        elementary_symmetric(VS, names, 4)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(1, 3), st.integers(-2, 2)), max_size=4))
def test_sym_reduce_round_trip(recipe):
    names = ("U1", "U2", "U3")
    sig = [elementary_symmetric(VS, names, i) for i in range(4)]
    p = LaurentPoly.q_power(VS, -1)
    for e, i, c in recipe:
        p = p * sig[i] ** e + c
    red = sym_reduce(p, names)
    assert red.varset.names[:3] == ("e1", "e2", "e3")
    assert sym_expand(red, VS, names) == p


def test_sym_reduce_identifies_transposition():
    with pytest.raises(NotSymmetric) as err:
        sym_reduce(U1 ** 2 + U2, ("U1", "U2", "U3"))
    assert "U1" in str(err.value) or "U2" in str(err.value)


def test_sym_reduce_power_sum():
    red = sym_reduce(U1 ** 2 + U2 ** 2 + U3 ** 2, ("U1", "U2", "U3"))
    assert red.to_text() == "-2*e2 + e1^2"


def test_invariance_actions():
    names = ("U1", "U2", "U3")
    assert is_invariant(elementary_symmetric(VS, names, 2), SymmetricAction(names))
    res = is_invariant(U1, SymmetricAction(names))
    assert not res and res.witness
    vs = VarSet.siegel(1)
    assert is_invariant(LaurentPoly.var(vs, "U1") + LaurentPoly.var(vs, "V1"), SiegelWeylAction(1))


def test_json_round_trip():
    p = Fraction(3, 2) * U1 * Q ** -2 - U3
    assert LaurentPoly.from_json_obj(p.to_json_obj(), VS) == p
    assert LaurentPoly.q_power(QONLY, 2).to_text() == "Q^2"
