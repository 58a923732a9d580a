import json
from fractions import Fraction

import pytest

from hecke_reduction.frobchar import (
    charpoly_degree,
    charpoly_json,
    closed_form_n1,
    dual_root_check,
    exterior_power_charpoly,
    hecke_charpoly,
    langlands_oracle_check,
    orbit_product,
    resubstitute,
)


@pytest.mark.parametrize("r", range(1, 9))
def test_n1_closed_form(r):
    assert hecke_charpoly(r, 1) == closed_form_n1(r)


def test_text_rendering():
    assert hecke_charpoly(3, 1).to_text() == "P_{3,1} = fr^3 - T1*fr^2 + T2*Q*fr - T3*Q^3"
    assert hecke_charpoly(1, 1).to_text() == "P_{1,1} = fr - T1"
    assert hecke_charpoly(2, 2).to_text() == "P_{2,2} = fr - T2"


def test_second_coefficient_is_minus_trace_for_n1():
    for r in range(1, 6):
        assert hecke_charpoly(r, 1).coeffs[r - 1].to_text() == "-T1"


@pytest.mark.parametrize("r", range(1, 6))
def test_resubstitution(r):
    for n in range(1, r + 1):
        poly = hecke_charpoly(r, n)
        assert poly.degree == charpoly_degree(r, n)
        assert resubstitute(poly) == orbit_product(r, n)


def test_degree():
    assert charpoly_degree(4, 2) == 6
    assert charpoly_degree(5, 5) == 1
    with pytest.raises(ValueError):
        charpoly_degree(3, 0)
    with pytest.raises(ValueError):
        hecke_charpoly(3, 4)


def test_dual_roots():
    for r in range(1, 6):
        for n in range(1, r + 1):
            assert dual_root_check(r, n)


def test_oracle_example_r2():
    alphas = (Fraction(2), Fraction(3))
    q = Fraction(5)
    poly = hecke_charpoly(2, 1)
    a = [alphas[0] + alphas[1], alphas[0] * alphas[1] / q]
    assert [Fraction(x) for x in poly.evaluate(a, q)] == exterior_power_charpoly(alphas, 1, q)


def test_oracle_deterministic():
    a = langlands_oracle_check(4, 2, trials=50, seed=7)
    b = langlands_oracle_check(4, 2, trials=50, seed=7)
    assert a.ok and [t.alphas for t in a.trials] == [t.alphas for t in b.trials]
    assert "failures=none" in a.summary()
    with pytest.raises(ValueError):
        langlands_oracle_check(2, 1, trials=0)


def test_json():
    obj = json.loads(charpoly_json(hecke_charpoly(2, 1)))
    assert obj["degree"] == 2 and len(obj["coeffs"]) == 3
