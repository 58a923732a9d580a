import json

import pytest

from hecke_reduction.motive_inv import (
    InvalidInvariants,
    NilpotentInvariants,
    enumerate_invariants,
    invariants_json,
    levi_blocks,
    to_weights,
    validate,
)


def test_validate():
    assert validate(1, (2, 1), 3, 1)
    assert validate(2, (1, 0, 1), 2, 2)
    bad = validate(2, (2, 0, 0))
    assert not bad and "minimal" in bad.diagnostics[0]
    assert not validate(1, (1, 1), 3, 1)
    assert not validate(1, (1, 1, 1))


def test_enumerate_examples():
    assert [x.k for x in enumerate_invariants(2, 1, 1)] == [(1, 1)]
    assert [(x.nu, x.k) for x in enumerate_invariants(2, 2, 2)] == [(1, (0, 2)), (2, (1, 0, 1))]
    assert [(x.nu, x.k) for x in enumerate_invariants(1, 0, 3)] == [(1, (1, 0))]


def test_nu1_recovers_levi():
    for r in range(1, 11):
        for n in range(r + 1):
            assert [x.k for x in enumerate_invariants(r, n, 1)] == [(r - n, n)]


def test_weights():
    for r in range(1, 9):
        for n in range(0, 2 * r + 1):
            for inv in enumerate_invariants(r, n, 3):
                assert inv.r == r and inv.n == n
                assert sum(to_weights(inv)) == -n and len(to_weights(inv)) == r
    assert to_weights(NilpotentInvariants(2, (1, 0, 1))) == (0, -2)
    assert to_weights(NilpotentInvariants(1, (2, 1))) == (0, 0, -1)


def test_blocks_flag_zero():
    blocks = levi_blocks(NilpotentInvariants(2, (1, 0, 1)))
    assert [(b.size, b.zero) for b in blocks] == [(1, False), (0, True), (1, False)]
    with pytest.raises(InvalidInvariants):
        levi_blocks(NilpotentInvariants(2, (2, 0, 0)))


def test_json():
    obj = json.loads(invariants_json(enumerate_invariants(2, 2, 2)))
    assert obj[1]["weights"] == [0, -2] and obj[1]["levi_status"] == "CONJECTURAL"
