import numpy as np
import pytest

from qsynth4.circuit import FeynmanGate, MSGate, ShiftGate
from qsynth4.errors import LoweringError
from qsynth4.gf4 import shift_by_symbol, shift_catalog, translation
from qsynth4.search import MAX_SEARCH_GATES, gate_permutation, generators, search_decomposition


def test_generator_count():
    assert len(generators(1)) == 23
    assert len(generators(2)) == 4 * 23


def test_identity_needs_no_gates():
    result = search_decomposition(np.arange(16))
    assert len(result) == 0


@pytest.mark.parametrize("shift", [s for s in shift_catalog() if not s.is_identity], ids=str)
def test_every_catalog_shift_is_one_gate(shift):
    target = gate_permutation([ShiftGate(0, shift)], 1)
    result = search_decomposition(target, max_gates=5)
    assert result.gates == (ShiftGate(0, shift),)


def test_single_gate_targets():
    ms = MSGate(0, 1, translation(1))
    result = search_decomposition(gate_permutation([ms], 2), max_gates=2)
    assert result.gates == (ms,)

    swap = ShiftGate(0, shift_by_symbol("x23"))
    result = search_decomposition(gate_permutation([swap], 1), max_gates=1)
    assert result.gates == (swap,)


def test_random_one_wire_permutations_are_reproduced():
    rng = np.random.default_rng(5)
    for _ in range(25):
        target = rng.permutation(4)
        result = search_decomposition(target, max_gates=5)
        assert result is not None
        assert len(result) <= 1
        assert np.array_equal(gate_permutation(result.gates, 1), target)


def test_random_two_wire_permutations_are_reproduced():
    rng = np.random.default_rng(5)
    pool = generators(2)
    for _ in range(25):
        length = int(rng.integers(1, 4))
        picks = [pool[i] for i in rng.integers(0, len(pool), size=length)]
        target = gate_permutation(picks, 2)
        result = search_decomposition(target, max_gates=5)
        assert result is not None
        assert len(result) <= length
        assert np.array_equal(gate_permutation(result.gates, 2), target)


def test_bound_too_small_returns_none():
    target = gate_permutation([FeynmanGate(0, 1)], 2)
    assert search_decomposition(target, max_gates=1) is None


@pytest.mark.parametrize("target, bound", [
    (np.arange(5), 3),
    (np.zeros(16), 3),
    (np.arange(16), MAX_SEARCH_GATES + 1),
])
def test_invalid_requests(target, bound):
    with pytest.raises(LoweringError):
        search_decomposition(target, bound)
