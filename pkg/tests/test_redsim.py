import json

import pytest

from hecke_reduction.degrees import profile_summand
from hecke_reduction.finvec import BudgetExceeded, gaussian_binomial
from hecke_reduction.redsim import (
    ModelPoint,
    WrongFlavor,
    census,
    closed_point_key,
    hecke_orbit,
    is_frobenius,
    nonordinary_census,
    reduction_type,
)


def test_orbit_counts():
    assert len(list(hecke_orbit(ModelPoint.ordinary(2, 1, 2), 1))) == 3
    assert [W.dim for W in hecke_orbit(ModelPoint.ordinary(3, 1, 2), 0)] == [0]
    for r in range(1, 5):
        t = ModelPoint.ordinary(r, r // 2, 3)
        for j in range(r + 1):
            assert sum(1 for _ in hecke_orbit(t, j)) == gaussian_binomial(j, r, 3)


def test_reduction_type_and_frobenius():
    t = ModelPoint.ordinary(3, 1, 2)
    types = [reduction_type(t, W) for W in hecke_orbit(t, 1)]
    assert types.count(1) == 1
    assert reduction_type(t, t.D) == 1 and is_frobenius(t, t.D)
    t2 = ModelPoint.ordinary(4, 2, 2)
    assert reduction_type(t2, t2.D) == 2


def test_siegel_key_uses_intersection_only():
    t = ModelPoint.siegel(2, 2)
    for W in hecke_orbit(t, 2):
        inter, span = closed_point_key(t, W)
        assert span is None and inter.dim == reduction_type(t, W)


def test_census_examples():
    c = census(ModelPoint.ordinary(2, 1, 2), 1)
    assert [(row.i, row.classes, row.fiber) for row in c.rows] == [(1, 1, 1), (0, 1, 2)]
    c = census(ModelPoint.ordinary(4, 2, 2), 2)
    assert [(row.i, row.classes, row.fiber) for row in c.rows] == [(2, 1, 1), (1, 9, 2), (0, 1, 16)]
    assert c.total == 35 and c.ok
    assert c.to_csv().splitlines()[0] == "i,classes,fiber,formula_classes,formula_fiber,match"


@pytest.mark.parametrize("q", (2, 3))
@pytest.mark.parametrize("r", range(1, 5))
def test_census_equals_degrees(q, r):
    for n in range(r + 1):
        t = ModelPoint.ordinary(r, n, q)
        for j in range(r + 1):
            c = census(t, j)
            assert c.total == gaussian_binomial(j, r, q)
            for row in c.rows:
                prof = profile_summand(row.i, j, r, n, q)
                assert (row.classes, row.fiber) == (prof.d1s, prof.d1ns)
                if n == 1 and row.i == 1:
                    assert set(row.fibers) == {1}


@pytest.mark.parametrize("g,p", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_siegel_census(g, p):
    c = census(ModelPoint.siegel(g, p), g)
    assert c.ok
    prod = 1
    for i in range(1, g + 1):
        prod *= p ** i + 1
    assert c.total == prod


def test_nonordinary():
    rep = nonordinary_census(ModelPoint.nonordinary(3, 2))
    assert (rep.inside, rep.outside, rep.outside_classes) == (3, 4, 1)
    assert "CONJECTURAL" in rep.to_text()
    q = nonordinary_census(ModelPoint.quadratic(2, 2))
    assert q.inside == 3 and q.outside == 0
    with pytest.raises(WrongFlavor):
        nonordinary_census(ModelPoint.ordinary(3, 1, 2))


def test_unitary_is_report_only():
    c = census(ModelPoint.unitary(3, 1, 2), 1)
    assert c.conjectural and all(row.match is None for row in c.rows)
    assert json.loads(c.to_json())["status"] == "CONJECTURAL"
    assert ModelPoint.unitary(3, 1, 2).D.dim == 2


def test_invalid_points():
    with pytest.raises(ValueError):
        ModelPoint.quadratic(3, 2)
    with pytest.raises(ValueError):
        ModelPoint.ordinary(3, 4, 2)


def test_census_budget():
    with pytest.raises(BudgetExceeded):
        census(ModelPoint.ordinary(4, 2, 2), 2, budget=5)
