import numpy as np
import pytest

from qsynth4.circuit import (
    AddGate,
    C2CSGate,
    Circuit,
    CircuitBuilder,
    FeynmanGate,
    GQGGate,
    MaxGate,
    MinGate,
    MSGate,
    ShiftGate,
    ToffoliGate,
    gqg_for_value,
)
from qsynth4.errors import SimulationError
from qsynth4.gf4 import gf4_add, gf4_mul, translation
from qsynth4.simulator import (
    BasisState,
    apply_gate,
    check_function,
    equivalent,
    is_bijective,
    lint_max_min,
    run,
    run_batch,
    state_permutation,
    truth_table,
)
from qsynth4.truth_table import QuaternaryFunction


def two_wire(*gates, outputs=((1, "f"),)) -> Circuit:
    b = CircuitBuilder()
    b.add_input()
    b.add_input()
    b.extend(gates)
    for wire_id, name in outputs:
        b.add_output(wire_id, name)
    return b.build()


def three_wire(*gates) -> Circuit:
    b = CircuitBuilder()
    for _ in range(3):
        b.add_input()
    b.extend(gates)
    b.add_output(2, "f")
    return b.build()


# =============================================================================
# Gate semantics
# =============================================================================

def test_ms_fires_only_on_three():
    g = MSGate(0, 1, translation(1))
    assert apply_gate(BasisState((3, 2)), g).values == (3, 3)
    for control in (0, 1, 2):
        assert apply_gate(BasisState((control, 2)), g).values == (control, 2)


def test_shift_gate():
    assert apply_gate(BasisState((0, 2)), ShiftGate(1, translation(3))).values == (0, 1)


def test_feynman_and_add():
    assert apply_gate(BasisState((2, 3)), FeynmanGate(0, 1)).values == (2, 1)
    assert apply_gate(BasisState((2, 3)), AddGate(0, 1)).values == (2, 1)
    assert apply_gate(BasisState((3, 3)), AddGate(0, 1)).values == (3, 2)


def test_toffoli():
    for a in range(4):
        for b in range(4):
            out = apply_gate(BasisState((a, b, 1)), ToffoliGate(0, 1, 2))
            assert out[2] == gf4_add(gf4_mul(a, b), 1)


def test_max_min_write_target():
    assert apply_gate(BasisState((1, 2, 0)), MaxGate((0, 1), 2)).values == (1, 2, 2)
    assert apply_gate(BasisState((1, 2, 3)), MinGate((0, 1), 2)).values == (1, 2, 1)


def test_gqg_needs_agreeing_controls():
    g = gqg_for_value((0, 1), 2, 2, translation(1))
    assert apply_gate(BasisState((2, 2, 0)), g)[2] == 1
    assert apply_gate(BasisState((2, 1, 0)), g)[2] == 0
    assert apply_gate(BasisState((1, 1, 0)), g)[2] == 0


def test_c2cs_symmetric_pair():
    g = C2CSGate(0, 1, 2, (1, 3), 1)
    assert apply_gate(BasisState((1, 3, 0)), g)[2] == 1
    assert apply_gate(BasisState((3, 1, 3)), g)[2] == 0
    assert apply_gate(BasisState((1, 1, 0)), g)[2] == 0
    assert apply_gate(BasisState((2, 3, 0)), g)[2] == 0


def test_apply_gate_outside_state():
    with pytest.raises(SimulationError):
        apply_gate(BasisState((0,)), FeynmanGate(0, 1))


# =============================================================================
# Runs
# =============================================================================

def test_run_with_sequence_and_mapping():
    c = two_wire(FeynmanGate(0, 1))
    assert run(c, [2, 3]).values == (2, 1)
    assert run(c, {0: 2, 1: 3}).values == (2, 1)


def test_run_errors():
    c = two_wire(FeynmanGate(0, 1))
    with pytest.raises(SimulationError, match="q1"):
        run(c, {0: 1})
    with pytest.raises(SimulationError):
        run(c, [1])
    with pytest.raises(SimulationError):
        run(c, [1, 4])


def test_run_batch_matches_run():
    c = three_wire(ToffoliGate(0, 1, 2), MSGate(2, 0, translation(2)))
    rng = np.random.default_rng(7)
    vectors = rng.integers(0, 4, size=(50, 3), dtype=np.uint8)
    states = run_batch(c, vectors, chunk=16)
    for vector, state in zip(vectors, states):
        assert tuple(int(v) for v in state) == run(c, vector.tolist()).values


def test_ancilla_init_values():
    b = CircuitBuilder()
    a = b.add_input()
    k = b.add_constant(2)
    t = b.add_ancilla(3)
    b.append(MinGate((a, k), t))
    b.add_output(t, "f")
    assert run(b.build(), [3]).values == (3, 2, 2)


def test_truth_table():
    f = truth_table(two_wire(FeynmanGate(0, 1)), "xor")
    assert f == QuaternaryFunction.from_callable(2, 1, gf4_add)
    assert f.name == "xor"


def test_check_function(table4):
    c = two_wire(FeynmanGate(0, 1))
    verdict = check_function(c, table4)
    assert not verdict
    assert verdict.counterexample == (0, 1)
    assert verdict.exhaustive
    good = check_function(c, QuaternaryFunction.from_callable(2, 1, gf4_add))
    assert good.equal and good.vectors_checked == 16
    with pytest.raises(SimulationError, match="arity"):
        check_function(c, QuaternaryFunction.from_callable(1, 1, lambda a: a))


def test_feynman_differs_from_add():
    verdict = equivalent(two_wire(FeynmanGate(0, 1)), two_wire(AddGate(0, 1)))
    assert not verdict.equal
    assert verdict.counterexample == (1, 1)
    assert verdict.vectors_checked == 6


def test_sampled_equivalence_above_the_exhaustive_limit():
    b = CircuitBuilder()
    wires = [b.add_input() for _ in range(13)]
    b.append(FeynmanGate(wires[0], wires[12]))
    b.add_output(wires[12], "f")
    c = b.build()
    same = equivalent(c, c, samples=64, seed=1)
    assert same.equal and not same.exhaustive and same.vectors_checked == 64

    b2 = CircuitBuilder()
    wires = [b2.add_input() for _ in range(13)]
    b2.append(AddGate(wires[0], wires[12]))
    b2.add_output(wires[12], "f")
    differs = equivalent(c, b2.build(), samples=256, seed=1)
    assert not differs.equal and not differs.exhaustive


# =============================================================================
# Full-state properties
# =============================================================================

@pytest.mark.parametrize("gate", [
    MSGate(0, 1, translation(1)),
    FeynmanGate(0, 1),
    ToffoliGate(0, 1, 2),
    GQGGate((0, 1), 2, (translation(1), translation(2), translation(3), translation(0))),
    C2CSGate(0, 1, 2, (1, 2), 3),
    AddGate(1, 2),
], ids=lambda g: g.kind.value)
def test_reversible_gates_are_bijective(gate):
    c = three_wire(gate)
    assert is_bijective(c)
    assert sorted(state_permutation(c).tolist()) == list(range(64))


def test_max_is_not_bijective():
    assert not is_bijective(three_wire(MaxGate((0, 1), 2)))


def test_state_permutation_width_limit():
    b = CircuitBuilder()
    for _ in range(7):
        b.add_input()
    with pytest.raises(SimulationError):
        state_permutation(b.build())


def test_lint_max_min():
    b = CircuitBuilder()
    x, y = b.add_input(), b.add_input()
    good = b.add_ancilla(0)
    bad_init = b.add_ancilla(0)
    b.append(MaxGate((x, y), good))
    b.append(MinGate((x, y), bad_init))
    b.append(MaxGate((x, good), y))
    problems = lint_max_min(b.build())
    assert len(problems) == 3
    assert "expected 3" in problems[0]
    assert "input wire" in problems[1]
    assert "already used" in problems[2]
