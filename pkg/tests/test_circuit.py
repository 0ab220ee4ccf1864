import pytest

from qsynth4.circuit import (
    ACTUAL_COST_MODEL,
    DECLARED_COST_MODEL,
    AddGate,
    C2CSGate,
    Circuit,
    CircuitBuilder,
    CostModel,
    FeynmanGate,
    GateKind,
    GQGGate,
    MaxGate,
    MinGate,
    MSGate,
    ShiftGate,
    ToffoliGate,
    Wire,
    WireRole,
    ancilla_count,
    append_gate,
    circuit_cost,
    circuit_levels,
    concat,
    gate_counts,
    gqg_for_value,
)
from qsynth4.errors import CircuitError
from qsynth4.gf4 import IDENTITY_SHIFT, translation

X1 = translation(1)


def wires(n: int) -> tuple[Wire, ...]:
    return tuple(Wire(i, WireRole.INPUT) for i in range(n))


def test_append_gate():
    c = append_gate(Circuit(wires(2)), MSGate(0, 1, X1))
    assert len(c.gates) == 1


@pytest.mark.parametrize("gate", [
    MSGate(0, 0, X1),
    FeynmanGate(1, 1),
    AddGate(0, 0),
    ToffoliGate(0, 1, 0),
    MaxGate((0, 1), 1),
    MinGate((2, 2), 0),
    GQGGate((0, 1), 1, (X1,) * 4),
    C2CSGate(0, 2, 2, (1, 3), 1),
], ids=lambda g: g.kind.value)
def test_duplicate_wires_rejected(gate):
    with pytest.raises(CircuitError):
        append_gate(Circuit(wires(3)), gate)


def test_unknown_wire_rejected():
    with pytest.raises(CircuitError):
        append_gate(Circuit(wires(2)), ToffoliGate(5, 6, 7))


def test_wire_validation():
    with pytest.raises(CircuitError):
        Wire(0, WireRole.INPUT, 1)
    with pytest.raises(CircuitError):
        Wire(0, WireRole.ANCILLA)
    with pytest.raises(CircuitError):
        Circuit((Wire(1, WireRole.INPUT),))


def test_c2cs_parameters():
    g = C2CSGate(0, 1, 2, (3, 1), 2)
    assert g.pair == (1, 3)
    with pytest.raises(CircuitError):
        C2CSGate(0, 1, 2, (0, 1), 1)
    with pytest.raises(CircuitError):
        C2CSGate(0, 1, 2, (2, 2), 1)
    with pytest.raises(CircuitError):
        C2CSGate(0, 1, 2, (1, 2), 0)


def test_gqg_needs_four_shifts_and_a_control():
    with pytest.raises(CircuitError):
        GQGGate((0,), 1, (X1,) * 3)
    with pytest.raises(CircuitError):
        GQGGate((), 1, (X1,) * 4)


def test_declared_costs():
    expected = {
        GateKind.FEYNMAN: 5,
        GateKind.TOFFOLI: 17,
        GateKind.MAX: 6,
        GateKind.MIN: 6,
        GateKind.GQG: 8,
        GateKind.C2CS: 8,
        GateKind.ADD: 8,
        GateKind.MS: 1,
    }
    for kind, cost in expected.items():
        assert DECLARED_COST_MODEL.cost_of(kind) == cost


def test_circuit_cost():
    c = Circuit(wires(3), (ToffoliGate(0, 1, 2),))
    assert circuit_cost(c) == 17
    assert circuit_cost(Circuit()) == 0
    c = Circuit(wires(3), (
        gqg_for_value((0,), 2, 1, X1),
        gqg_for_value((1,), 2, 2, X1),
        C2CSGate(0, 1, 2, (1, 2), 1),
    ))
    assert circuit_cost(c) == 24


def test_cost_is_additive_under_concat():
    a = Circuit(wires(3), (FeynmanGate(0, 1), MaxGate((0, 1), 2)))
    b = Circuit(wires(3), (AddGate(1, 2), MSGate(0, 2, X1)))
    assert circuit_cost(concat(a, b)) == circuit_cost(a) + circuit_cost(b)
    with pytest.raises(CircuitError):
        concat(a, Circuit(wires(2)))


def test_cost_model_gaps_and_validation():
    with pytest.raises(CircuitError):
        circuit_cost(Circuit(wires(2), (AddGate(0, 1),)), ACTUAL_COST_MODEL)
    with pytest.raises(CircuitError):
        CostModel("bad", {GateKind.MS: 0})


def test_levels():
    assert circuit_levels(Circuit()) == 0
    parallel = Circuit(wires(4), (FeynmanGate(0, 1), FeynmanGate(2, 3)))
    assert circuit_levels(parallel) == 1
    serial = Circuit(wires(3), (FeynmanGate(0, 1), FeynmanGate(1, 2)))
    assert circuit_levels(serial) == 2
    chain = Circuit(wires(2), tuple(ShiftGate(0, X1) for _ in range(5)))
    assert circuit_levels(chain) == len(chain.gates)


def test_builder_and_ancilla_count():
    b = CircuitBuilder()
    a0 = b.add_input()
    a1 = b.add_input()
    t = b.add_ancilla()
    m = b.add_ancilla(3)
    k = b.add_constant(2)
    b.append(MinGate((a0, a1, k), m))
    b.append(MSGate(a0, t, X1))
    b.add_output(m, "f")
    c = b.build()
    assert ancilla_count(c) == 2
    assert c.input_wires == (0, 1)
    assert c.output_names == ("f",)
    assert c.wires[m].init == 3
    assert ancilla_count(Circuit()) == 0
    with pytest.raises(CircuitError):
        b.add_output(9, "g")


def test_duplicate_output_names_rejected():
    with pytest.raises(CircuitError):
        Circuit(wires(2), (), ((0, "f"), (1, "f")))


def test_gate_counts_and_gqg_for_value():
    g = gqg_for_value((0,), 1, 2, X1)
    assert g.shifts == (IDENTITY_SHIFT, IDENTITY_SHIFT, X1, IDENTITY_SHIFT)
    c = Circuit(wires(2), (g, g, FeynmanGate(0, 1)))
    assert gate_counts(c) == {"feynman": 1, "gqg": 2}
