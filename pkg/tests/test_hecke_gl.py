import pytest

from hecke_reduction.hecke_gl import (
    GLContext,
    HeckeElement,
    QuotientRequired,
    central_normal_form,
    dual,
    express_in_levi_generators,
    express_in_T_generators,
    format_levi_expansion,
    from_levi_generators,
    from_T_generators,
    levi_expand,
    levi_monomial,
    satake_Phi,
    satake_Psi,
    satake_T,
)
from hecke_reduction.poly import LaurentPoly, VarSet


def test_satake_T_images():
    ctx = GLContext(2, 1)
    assert satake_T(ctx, 1).image.to_text() == "U2 + U1"
    assert satake_T(ctx, 2).image.to_text() == "U1*U2*Q^-1"
    assert satake_T(ctx, 0).image == LaurentPoly.const(ctx.varset, 1)
    with pytest.raises(ValueError):
        satake_T(ctx, 3)


def test_levels():
    ctx = GLContext(4, 2)
    assert satake_T(ctx, 2).is_valid_level()
    assert satake_Phi(ctx, 1).is_valid_level()
    assert not HeckeElement(ctx, satake_Phi(ctx, 1).image, "G").is_valid_level()


@pytest.mark.parametrize("r", range(2, 7))
def test_levi_table_n1(r):
    ctx = GLContext(r, 1)
    assert format_levi_expansion(ctx, 1) == "T1 = fr + Phi1"
    for j in range(2, r):
        assert format_levi_expansion(ctx, j) == "T%d = Q^-%d*fr*Phi%d + Phi%d" % (j, j - 1, j - 1, j)
    assert format_levi_expansion(ctx, r) == "T%d = Q^-%d*fr*Phi%d" % (r, r - 1, r - 1)


def test_levi_expand_order_and_drop():
    terms = levi_expand(GLContext(4, 2), 2)
    assert [(t.psi, t.phi, t.q_exp) for t in terms] == [(2, 0, 0), (1, 1, -1), (0, 2, 0)]
    assert [(t.psi, t.phi) for t in levi_expand(GLContext(4, 1), 4)] == [(1, 3)]


def test_quotient_required():
    e = satake_T(GLContext(3, 1), 1)
    with pytest.raises(QuotientRequired):
        dual(e)
    with pytest.raises(QuotientRequired):
        central_normal_form(e)


def test_central_normal_form():
    ctx = GLContext(3, 1, True)
    vs = ctx.varset
    e = HeckeElement(ctx, LaurentPoly.monomial(vs, {"U1": 2, "U2": 1, "U3": 1}))
    assert e.image.to_text() == "U1*Q^3"


@pytest.mark.parametrize("r", range(1, 7))
def test_duality_relations(r):
    for n in range(r + 1):
        ctx = GLContext(r, n, True)
        for i in range(r + 1):
            assert dual(satake_T(ctx, i)).image == satake_T(ctx, r - i).image
        assert (satake_Psi(ctx, n) * satake_Phi(ctx, r - n)).image == LaurentPoly.q_power(ctx.varset, n * (r - n))
        for i in range(r - n + 1):
            lhs = express_in_levi_generators(dual(satake_Phi(ctx, i)))
            assert lhs == levi_monomial(ctx, -n * (r - n - i), n, r - n - i)
        for i in range(n + 1):
            lhs = express_in_levi_generators(dual(satake_Psi(ctx, i)))
            assert lhs == levi_monomial(ctx, -(n - i) * (r - n), n - i, r - n)
        assert dual(satake_Phi(ctx, r - n)).image == satake_Psi(ctx, n).image


def test_generator_round_trips():
    ctx = GLContext(4, 2)
    e = satake_T(ctx, 2) * satake_T(ctx, 1) + satake_T(ctx, 3)
    assert from_T_generators(express_in_T_generators(e), ctx).image == e.image
    m = satake_Phi(ctx, 1) * satake_Psi(ctx, 2) + satake_Psi(ctx, 1)
    assert from_levi_generators(express_in_levi_generators(m), ctx).image == m.image


def test_express_T_text():
    ctx = GLContext(3, 1)
    t = express_in_T_generators(satake_T(ctx, 1) ** 2)
    assert t.to_text() == "T1^2"
    assert t.varset.names == ("T1", "T2", "T3", "Q")


def test_image_varset_checked():
    with pytest.raises(ValueError):
        HeckeElement(GLContext(2, 1), LaurentPoly.zero(VarSet.gl(3)))
