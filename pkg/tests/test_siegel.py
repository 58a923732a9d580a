import pytest

from hecke_reduction.poly import LaurentPoly
from hecke_reduction.siegel import (
    SiegelContext,
    SiegelHeckeElement,
    SimilitudeViolation,
    hat_siegel,
    is_levi_invariant,
    is_weyl_invariant,
    satake_phi,
    satake_Tp,
    siegel_degrees,
    siegel_frob_charpoly,
    weyl_group,
    weyl_orbit,
)


def test_phi_images():
    ctx = SiegelContext(2)
    assert satake_phi(ctx, 0).image.to_text() == "V1*V2"
    assert satake_phi(ctx, 1).image.to_text() == "U2*V1 + U1*V2"
    assert satake_phi(SiegelContext(1), 1).image.to_text() == "U1"
    with pytest.raises(ValueError):
        satake_phi(ctx, 3)


def test_tp():
    assert satake_Tp(SiegelContext(1)).image.to_text() == "V1 + U1"
    for g in range(1, 5):
        assert is_weyl_invariant(satake_Tp(SiegelContext(g)))


@pytest.mark.parametrize("g", range(1, 5))
def test_hat(g):
    ctx = SiegelContext(g)
    for i in range(g + 1):
        assert hat_siegel(satake_phi(ctx, i)) == satake_phi(ctx, g - i)
        assert is_levi_invariant(satake_phi(ctx, i))


def test_weyl_group_order_and_orbits():
    assert len(weyl_group(3)) == 48
    ctx = SiegelContext(3)
    assert len(weyl_orbit(satake_phi(ctx, 3))) == 8
    assert len(weyl_orbit(satake_Tp(ctx))) == 1
    assert [p.to_text() for p in weyl_orbit(satake_phi(SiegelContext(1), 1))] == ["U1", "V1"]


def test_charpoly():
    c = siegel_frob_charpoly(1)
    assert [x.to_text() for x in c] == ["U1*V1", "-V1 - U1", "1"]
    c2 = siegel_frob_charpoly(2)
    assert len(c2) == 5 and c2[3] == -satake_Tp(SiegelContext(2)).image


def test_similitude():
    ctx = SiegelContext(2)
    with pytest.raises(SimilitudeViolation):
        SiegelHeckeElement(ctx, LaurentPoly.var(ctx.varset, "U1"))


def test_central_relation_is_explicit():
    with pytest.raises(ValueError):
        SiegelContext(2, quotient=True)
    ctx = SiegelContext(1, quotient=True, central_exponent=1)
    e = SiegelHeckeElement(ctx, LaurentPoly.monomial(ctx.varset, {"U1": 2, "V1": 1}))
    assert e.image.to_text() == "U1*Q"


def test_degrees():
    assert siegel_degrees(2, 2, 2).row() == ("1", "1", "1", "8")
    assert siegel_degrees(2, 0, 2).row() == ("1", "8", "1", "1")
    assert siegel_degrees(2, 1, 3).row() == ("4", "3", "4", "3")
    assert siegel_degrees(2, 1).d1s.to_text() == "1 + Q"
