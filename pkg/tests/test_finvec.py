import itertools

import pytest

from hecke_reduction.finvec import (
    AmbientMismatch,
    BudgetExceeded,
    QuadraticStructure,
    Subspace,
    SymplecticSpace,
    count_lagrangian,
    enumerate_isotropic,
    enumerate_subspaces,
    f_q2_span,
    gaussian_binomial,
    prime_field,
    profile_count,
    quadratic_field,
)

F2, F3 = prime_field(2), prime_field(3)


def test_fields():
    for p in (2, 3):
        quadratic_field(p).verify_axioms()
        prime_field(p).verify_axioms()
    assert quadratic_field(3).order == 9


def test_gaussian_binomial():
    assert gaussian_binomial(1, 2, 2) == 3
    assert gaussian_binomial(2, 4, 2) == 35
    assert gaussian_binomial(1, 3).to_text() == "1 + Q + Q^2"
    assert gaussian_binomial(3, 2, 2) == 0
    assert gaussian_binomial(2, 4).evaluate({"Q": 3}) == gaussian_binomial(2, 4, 3)


@pytest.mark.parametrize("q", (2, 3))
@pytest.mark.parametrize("r", range(1, 5))
def test_enumeration_counts(q, r):
    F = prime_field(q)
    for j in range(r + 1):
        subs = list(enumerate_subspaces(r, j, F))
        assert len(subs) == gaussian_binomial(j, r, q)
        assert len(set(subs)) == len(subs)
        assert all(s.is_canonical() and s.dim == j for s in subs)


def test_enumeration_order_is_lexicographic():
    subs = list(enumerate_subspaces(2, 1, F2))
    assert [s.to_text() for s in subs] == ["10", "11", "01"]
    assert [s.to_text() for s in enumerate_subspaces(2, 0, F3)] == ["0"]


def test_budget():
    with pytest.raises(BudgetExceeded) as err:
        enumerate_subspaces(4, 2, F2, budget=10)
    assert err.value.required == 35


def test_span_intersect_laws():
    subs = [W for j in range(4) for W in enumerate_subspaces(3, j, F2)]
    for a, b in itertools.product(subs, subs):
        assert a.dim + b.dim == a.intersect(b).dim + a.span(b).dim
    a = Subspace.coordinate(F2, 2, [0])
    b = Subspace.coordinate(F2, 2, [1])
    assert a.intersect(b) == Subspace.zero(F2, 2) and a.span(b) == Subspace.full(F2, 2)
    assert a.span(a) == a and a.intersect(a) == a
    with pytest.raises(AmbientMismatch):
        a.span(Subspace.zero(F2, 3))


def test_text_round_trip():
    W = Subspace.from_vectors(F3, 3, [[1, 2, 0], [2, 1, 1]])
    assert Subspace.from_text(W.to_text(), F3, 3) == W


def test_profile_count():
    D = Subspace.coordinate(F2, 2, [1])
    assert profile_count(D, 0, 1) == (1, 2)
    assert profile_count(D, 1, 1) == (1, 1)
    D4 = Subspace.coordinate(F2, 4, [2, 3])
    assert profile_count(D4, 1, 2) == (9, 2)
    assert profile_count(D4, 0, 2) == (1, 16)
    assert profile_count(D4, 2, 2) == (1, 1)


def test_symplectic():
    S = SymplecticSpace(2, F3)
    S.check_form()
    L = S.lagrangian()
    assert S.is_isotropic(L) and S.perp(L) == L
    assert count_lagrangian(1, 2) == 3
    assert count_lagrangian(2, 2) == 15
    assert count_lagrangian(2, 3) == 40
    assert sum(1 for _ in enumerate_isotropic(2, 1, 2)) == 15  # every line is isotropic


def test_quadratic_span():
    st = QuadraticStructure(F2, 1)
    line = Subspace.from_vectors(F2, 2, [[1, 0]])
    assert f_q2_span(line, st) == Subspace.full(F2, 2)
    stable = st.line(0)
    assert f_q2_span(stable, st) == stable
    st2 = QuadraticStructure(F3, 2)
    for W in enumerate_subspaces(4, 1, F3):
        S = f_q2_span(W, st2)
        assert S.contains(W) and st2.is_stable(S) and f_q2_span(S, st2) == S
    with pytest.raises(ValueError):
        f_q2_span(line, None)
