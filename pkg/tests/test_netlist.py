import pytest

from qsynth4.circuit import (
    AddGate,
    C2CSGate,
    CircuitBuilder,
    FeynmanGate,
    GQGGate,
    MaxGate,
    MinGate,
    MSGate,
    ShiftGate,
    ToffoliGate,
)
from qsynth4.errors import NetlistParseError
from qsynth4.gf4 import shift_by_symbol, translation
from qsynth4.netlist import parse, read_netlist, serialize, write_netlist

HEADER = ".wires 2\n.input q0\n.input q1\n"


@pytest.fixture
def every_gate_circuit():
    b = CircuitBuilder()
    q0, q1 = b.add_input(), b.add_input()
    q2 = b.add_ancilla(0)
    q3 = b.add_constant(2)
    b.extend([
        MSGate(q0, q1, translation(1)),
        ShiftGate(q0, shift_by_symbol("x23")),
        FeynmanGate(q0, q1),
        ToffoliGate(q0, q1, q2),
        MaxGate((q0, q1), q2),
        MinGate((q0, q1, q3), q2),
        GQGGate((q0, q1), q2, (translation(0), translation(0), translation(1), translation(0))),
        C2CSGate(q0, q1, q2, (3, 1), 1),
        AddGate(q0, q1),
    ])
    b.add_output(q2, "f")
    return b.build()


def test_round_trip(every_gate_circuit):
    text = serialize(every_gate_circuit)
    assert parse(text) == every_gate_circuit
    assert serialize(parse(text)) == text


def test_serialize_c2cs_uses_sorted_pair(every_gate_circuit):
    assert "c2cs q0 q1 {1,3} +1 -> q2" in serialize(every_gate_circuit).splitlines()


def test_parse_ms_line():
    c = parse(HEADER + "ms q0 q1 x+1\n")
    assert c.gates == (MSGate(0, 1, translation(1)),)


def test_comments_and_blank_lines_ignored():
    c = parse("# netlist\n\n" + HEADER + "feynman q0 q1  # add\n")
    assert c.gates == (FeynmanGate(0, 1),)


def test_duplicate_wire_reports_line():
    with pytest.raises(NetlistParseError) as info:
        parse(HEADER + "feynman q0 q1\nms q0 q0 x+1\n")
    assert info.value.line == 5


@pytest.mark.parametrize("line, column", [
    ("ms q0 q7 x+1", 7),
    ("ms q0 q1 y+1", 10),
    ("gqg q0 -> q1 [x+0,x+0,x+1]", 14),
    ("c2cs q0 q1 {0,1} +1 -> q1", None),
    ("warp q0 q1", 1),
])
def test_parse_errors_locate_the_token(line, column):
    with pytest.raises(NetlistParseError) as info:
        parse(HEADER + line + "\n")
    assert info.value.line == 4
    if column is not None:
        assert info.value.column == column


def test_missing_header_and_undeclared_wire():
    with pytest.raises(NetlistParseError, match="missing .wires"):
        parse("")
    with pytest.raises(NetlistParseError, match="never declared"):
        parse(".wires 2\n.input q0\n")


def test_bad_init_digit():
    with pytest.raises(NetlistParseError) as info:
        parse(".wires 1\n.ancilla q0 = 4\n")
    assert (info.value.line, info.value.column) == (2, 15)


def test_file_helpers(tmp_path, every_gate_circuit):
    path = tmp_path / "c.qnl"
    write_netlist(path, every_gate_circuit)
    assert read_netlist(path) == every_gate_circuit
