"""
Netlist text format (.qnl)

Line oriented, UTF-8, '#' starts a comment:

    .wires 4
    .input q0
    .input q1
    .ancilla q2 = 0
    .constant q3 = 2
    .output f q2
    ms q0 q1 x+1
    shift q0 x+3
    feynman q0 q1
    toffoli q0 q1 q2
    max q0 q1 -> q2
    min q0 q1 -> q2
    gqg q0 q1 -> q2 [x+0,x+0,x+1,x+0]
    c2cs q0 q1 {1,3} +1 -> q2
    add q0 q1

serialize() writes the canonical form; parse(serialize(c)) == c.
"""

import re

from qsynth4.circuit import (
    AddGate,
    C2CSGate,
    Circuit,
    FeynmanGate,
    Gate,
    GQGGate,
    MaxGate,
    MinGate,
    MSGate,
    ShiftGate,
    ToffoliGate,
    Wire,
    WireRole,
)
from qsynth4.errors import CircuitError, Gf4Error, NetlistParseError
from qsynth4.gf4 import as_gf4, shift_by_symbol

_WIRE_RE = re.compile(r"q(\d+)")
_TOKEN_RE = re.compile(r"\S+")
_PAIR_RE = re.compile(r"\{([0-3]),([0-3])\}")
_AMOUNT_RE = re.compile(r"\+([0-3])")


# =============================================================================
# Writer
# =============================================================================

def _q(wire_id: int) -> str:
    return f"q{wire_id}"


def gate_to_text(g: Gate) -> str:
    if isinstance(g, MSGate):
        return f"ms {_q(g.control)} {_q(g.target)} {g.shift.symbol}"
    if isinstance(g, ShiftGate):
        return f"shift {_q(g.target)} {g.shift.symbol}"
    if isinstance(g, FeynmanGate):
        return f"feynman {_q(g.a)} {_q(g.b)}"
    if isinstance(g, ToffoliGate):
        return f"toffoli {_q(g.a)} {_q(g.b)} {_q(g.c)}"
    if isinstance(g, (MaxGate, MinGate)):
        ins = " ".join(_q(w) for w in g.inputs)
        return f"{g.kind.value} {ins} -> {_q(g.target)}"
    if isinstance(g, GQGGate):
        ctrls = " ".join(_q(w) for w in g.controls)
        shifts = ",".join(s.symbol for s in g.shifts)
        return f"gqg {ctrls} -> {_q(g.target)} [{shifts}]"
    if isinstance(g, C2CSGate):
        i, j = g.pair
        return f"c2cs {_q(g.a)} {_q(g.b)} {{{i},{j}}} +{g.amount} -> {_q(g.target)}"
    if isinstance(g, AddGate):
        return f"add {_q(g.a)} {_q(g.b)}"
    raise CircuitError(f"cannot serialize gate {g!r}")


def serialize(c: Circuit) -> str:
    lines = [f".wires {c.width}"]
    for wire in c.wires:
        if wire.role is WireRole.INPUT:
            lines.append(f".input {_q(wire.id)}")
        else:
            lines.append(f".{wire.role.value} {_q(wire.id)} = {wire.init}")
    for wire_id, name in c.outputs:
        lines.append(f".output {name} {_q(wire_id)}")
    lines.extend(gate_to_text(g) for g in c.gates)
    return "\n".join(lines) + "\n"


# =============================================================================
# Parser
# =============================================================================

class _Line:
    """Tokens of one source line with their 1-based columns"""

    def __init__(self, number: int, text: str):
        self.number = number
        code = text.split("#", 1)[0]
        matches = list(_TOKEN_RE.finditer(code))
        self.tokens = [m.group(0) for m in matches]
        self.columns = [m.start() + 1 for m in matches]

    def error(self, cause: str, position: int | None = None) -> NetlistParseError:
        column = None
        if position is not None and position < len(self.columns):
            column = self.columns[position]
        return NetlistParseError(cause, self.number, column)

    def expect_count(self, count: int):
        if len(self.tokens) != count:
            raise self.error(f"'{self.tokens[0]}' takes {count - 1} operand(s), got {len(self.tokens) - 1}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.width: int | None = None
        self.wires: dict[int, Wire] = {}
        self.outputs: list[tuple[int, str]] = []
        self.gates: list[Gate] = []

    def wire(self, line: _Line, position: int) -> int:
        if position >= len(line.tokens):
            raise line.error("missing wire operand")
        token = line.tokens[position]
        m = _WIRE_RE.fullmatch(token)
        if not m:
            raise line.error(f"expected a wire like q0, got {token!r}", position)
        if self.width is None:
            raise line.error(".wires must come before any wire reference", position)
        wire_id = int(m.group(1))
        if wire_id >= self.width:
            raise line.error(f"unknown wire {token} (.wires {self.width})", position)
        return wire_id

    def digit(self, line: _Line, position: int) -> int:
        token = line.tokens[position] if position < len(line.tokens) else ""
        try:
            return as_gf4(int(token))
        except (ValueError, Gf4Error):
            raise line.error(f"expected a quaternary digit, got {token!r}", position) from None

    def shift(self, line: _Line, position: int, token: str | None = None):
        token = token if token is not None else line.tokens[position]
        try:
            return shift_by_symbol(token)
        except Gf4Error:
            raise line.error(f"unknown shift symbol {token!r}", position) from None

    def arrow_split(self, line: _Line) -> int:
        """Position of '->' (at least one wire before it, exactly one after)"""
        try:
            arrow = line.tokens.index("->")
        except ValueError:
            raise line.error(f"'{line.tokens[0]}' needs '-> target'") from None
        if arrow < 2:
            raise line.error(f"'{line.tokens[0]}' needs at least one control/input wire", arrow)
        return arrow

    # -----------------------------------------------------------------
    # Headers
    # -----------------------------------------------------------------

    def header(self, line: _Line):
        key = line.tokens[0]
        if key == ".wires":
            line.expect_count(2)
            if self.width is not None:
                raise line.error("duplicate .wires header", 0)
            try:
                self.width = int(line.tokens[1])
            except ValueError:
                raise line.error(f"expected a wire count, got {line.tokens[1]!r}", 1) from None
            if self.width < 0:
                raise line.error("wire count must be non-negative", 1)
            return
        if key == ".input":
            line.expect_count(2)
            self.declare(line, Wire(self.wire(line, 1), WireRole.INPUT))
            return
        if key in (".ancilla", ".constant"):
            line.expect_count(4)
            if line.tokens[2] != "=":
                raise line.error(f"expected '=', got {line.tokens[2]!r}", 2)
            role = WireRole.ANCILLA if key == ".ancilla" else WireRole.CONSTANT
            self.declare(line, Wire(self.wire(line, 1), role, self.digit(line, 3)))
            return
        if key == ".output":
            line.expect_count(3)
            name = line.tokens[1]
            if any(name == existing for _, existing in self.outputs):
                raise line.error(f"duplicate output name {name!r}", 1)
            self.outputs.append((self.wire(line, 2), name))
            return
        raise line.error(f"unknown directive {key!r}", 0)

    def declare(self, line: _Line, wire: Wire):
        if wire.id in self.wires:
            raise line.error(f"wire q{wire.id} declared twice", 1)
        self.wires[wire.id] = wire

    # -----------------------------------------------------------------
    # Gates
    # -----------------------------------------------------------------

    def gate(self, line: _Line) -> Gate:
        op = line.tokens[0]
        if op == "ms":
            line.expect_count(4)
            return MSGate(self.wire(line, 1), self.wire(line, 2), self.shift(line, 3))
        if op == "shift":
            line.expect_count(3)
            return ShiftGate(self.wire(line, 1), self.shift(line, 2))
        if op == "feynman":
            line.expect_count(3)
            return FeynmanGate(self.wire(line, 1), self.wire(line, 2))
        if op == "add":
            line.expect_count(3)
            return AddGate(self.wire(line, 1), self.wire(line, 2))
        if op == "toffoli":
            line.expect_count(4)
            return ToffoliGate(self.wire(line, 1), self.wire(line, 2), self.wire(line, 3))
        if op in ("max", "min"):
            arrow = self.arrow_split(line)
            line.expect_count(arrow + 2)
            inputs = tuple(self.wire(line, p) for p in range(1, arrow))
            cls = MaxGate if op == "max" else MinGate
            return cls(inputs, self.wire(line, arrow + 1))
        if op == "gqg":
            arrow = self.arrow_split(line)
            line.expect_count(arrow + 3)
            controls = tuple(self.wire(line, p) for p in range(1, arrow))
            target = self.wire(line, arrow + 1)
            spec = line.tokens[arrow + 2]
            if not (spec.startswith("[") and spec.endswith("]")):
                raise line.error(f"expected [s0,s1,s2,s3], got {spec!r}", arrow + 2)
            symbols = spec[1:-1].split(",")
            if len(symbols) != 4:
                raise line.error(f"GQG needs 4 shifts, got {len(symbols)}", arrow + 2)
            shifts = tuple(self.shift(line, arrow + 2, s) for s in symbols)
            return GQGGate(controls, target, shifts)
        if op == "c2cs":
            line.expect_count(7)
            if line.tokens[5] != "->":
                raise line.error(f"expected '->', got {line.tokens[5]!r}", 5)
            pair = _PAIR_RE.fullmatch(line.tokens[3])
            if not pair:
                raise line.error(f"expected a value pair like {{1,3}}, got {line.tokens[3]!r}", 3)
            amount = _AMOUNT_RE.fullmatch(line.tokens[4])
            if not amount:
                raise line.error(f"expected an amount like +1, got {line.tokens[4]!r}", 4)
            return C2CSGate(
                self.wire(line, 1),
                self.wire(line, 2),
                self.wire(line, 6),
                (int(pair.group(1)), int(pair.group(2))),
                int(amount.group(1)),
            )
        raise line.error(f"unknown gate {op!r}", 0)

    # -----------------------------------------------------------------

    def run(self) -> Circuit:
        for number, text in enumerate(self.text.splitlines(), start=1):
            line = _Line(number, text)
            if not line.tokens:
                continue
            try:
                if line.tokens[0].startswith("."):
                    self.header(line)
                else:
                    gate = self.gate(line)
                    if len(set(gate.wires)) != len(gate.wires):
                        raise line.error(f"duplicate wire in {line.tokens[0]} gate")
                    self.gates.append(gate)
            except CircuitError as e:
                raise line.error(str(e)) from None
        if self.width is None:
            raise NetlistParseError("missing .wires header")
        missing = [w for w in range(self.width) if w not in self.wires]
        if missing:
            raise NetlistParseError(f"wire q{missing[0]} is never declared (.input/.ancilla/.constant)")
        wires = tuple(self.wires[w] for w in range(self.width))
        try:
            return Circuit(wires, tuple(self.gates), tuple(self.outputs))
        except CircuitError as e:
            raise NetlistParseError(str(e)) from None


def parse(text: str) -> Circuit:
    """Parse netlist text; errors carry line and column"""
    return _Parser(text).run()


def read_netlist(path) -> Circuit:
    with open(path, "r", encoding="utf-8") as f:
        return parse(f.read())


def write_netlist(path, c: Circuit):
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize(c))
