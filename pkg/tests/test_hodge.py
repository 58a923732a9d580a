from math import comb

import pytest

from hecke_reduction.hodge import HodgeVector, hodge_json, siegel_hodge, unitary_hodge


def test_examples():
    assert siegel_hodge(1).entries == (1, 1)
    assert siegel_hodge(2).entries == (1, 1, 1, 1) and siegel_hodge(2).weight == 3
    v3 = siegel_hodge(3)
    assert v3.weight == 6 and v3.entries == (1, 1, 1, 2, 1, 1, 1) and v3.total == 8
    assert unitary_hodge(3, 1).entries == (1, 1, 1)
    assert unitary_hodge(4, 2).entries == (1, 1, 2, 1, 1)


@pytest.mark.parametrize("g", range(1, 9))
def test_siegel_properties(g):
    v = siegel_hodge(g)
    assert v.total == 2 ** g and v.is_symmetric and v.weight == g * (g + 1) // 2


def test_unitary_properties():
    for r in range(1, 11):
        assert unitary_hodge(r, 1).entries == (1,) * r
        for n in range(1, r + 1):
            v = unitary_hodge(r, n)
            assert v.total == comb(r, n) and v.is_symmetric and v.weight == n * (r - n)
            if n < r:
                assert v.entries == unitary_hodge(r, r - n).entries


def test_labels_and_errors():
    f = unitary_hodge(4, 2, functional=True)
    assert f.status == "CONJECTURAL" and "CONJECTURAL" in hodge_json(f)
    assert siegel_hodge(2).status == "THEOREM"
    assert siegel_hodge(2).h(-1) == 0
    with pytest.raises(ValueError):
        unitary_hodge(3, 0)
    with pytest.raises(ValueError):
        HodgeVector(2, (1, 1))
