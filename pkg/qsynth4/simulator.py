"""
Classical basis-state simulation of quaternary circuits

Every gate in scope maps basis values to basis values, so simulating digit
vectors is complete. The engine works on (rows, wires) uint8 arrays; scalar
run/apply_gate use a batch of one row.
"""

from dataclasses import dataclass

import numpy as np

from qsynth4 import config
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
    WireRole,
)
from qsynth4.errors import CircuitError, SimulationError
from qsynth4.gf4 import GF4_ADD, GF4_MUL, MOD4_ADD, as_gf4
from qsynth4.truth_table import QuaternaryFunction
from qsynth4.utils import all_input_vectors, index_to_digits

# full-state sweeps (state_permutation) are limited to 4**6 states
FULL_STATE_LIMIT = 6


@dataclass(frozen=True)
class BasisState:
    """Digit of every wire, indexed by wire id"""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_gf4(v) for v in self.values))

    def __getitem__(self, wire_id: int) -> int:
        return self.values[wire_id]

    def __len__(self):
        return len(self.values)


# =============================================================================
# Gate semantics (vectorized)
# =============================================================================

def _apply_batch(states: np.ndarray, g: Gate):
    """Apply one gate in place to every row of states"""
    if isinstance(g, MSGate):
        perm = np.asarray(g.shift.perm, dtype=np.uint8)
        target = states[:, g.target]
        states[:, g.target] = np.where(states[:, g.control] == 3, perm[target], target)
    elif isinstance(g, ShiftGate):
        perm = np.asarray(g.shift.perm, dtype=np.uint8)
        states[:, g.target] = perm[states[:, g.target]]
    elif isinstance(g, FeynmanGate):
        states[:, g.b] = GF4_ADD[states[:, g.a], states[:, g.b]]
    elif isinstance(g, ToffoliGate):
        states[:, g.c] = GF4_ADD[GF4_MUL[states[:, g.a], states[:, g.b]], states[:, g.c]]
    elif isinstance(g, MaxGate):
        states[:, g.target] = states[:, list(g.wires)].max(axis=1)
    elif isinstance(g, MinGate):
        states[:, g.target] = states[:, list(g.wires)].min(axis=1)
    elif isinstance(g, GQGGate):
        first = states[:, g.controls[0]]
        agree = np.ones(len(states), dtype=bool)
        for c in g.controls[1:]:
            agree &= states[:, c] == first
        table = np.array([s.perm for s in g.shifts], dtype=np.uint8)
        target = states[:, g.target]
        states[:, g.target] = np.where(agree, table[first, target], target)
    elif isinstance(g, C2CSGate):
        i, j = g.pair
        a = states[:, g.a]
        b = states[:, g.b]
        fire = ((a == i) & (b == j)) | ((a == j) & (b == i))
        target = states[:, g.target]
        states[:, g.target] = np.where(fire, MOD4_ADD[target, g.amount], target)
    elif isinstance(g, AddGate):
        states[:, g.b] = MOD4_ADD[states[:, g.a], states[:, g.b]]
    else:
        raise CircuitError(f"cannot simulate gate {g!r}")


def _run_states(c: Circuit, states: np.ndarray) -> np.ndarray:
    for g in c.gates:
        _apply_batch(states, g)
    return states


def _initial_states(c: Circuit, inputs: np.ndarray) -> np.ndarray:
    input_wires = c.input_wires
    inputs = np.asarray(inputs, dtype=np.uint8)
    if inputs.ndim != 2 or inputs.shape[1] != len(input_wires):
        raise SimulationError(
            f"expected input vectors of length {len(input_wires)}, got shape {inputs.shape}"
        )
    if inputs.size and int(inputs.max()) > 3:
        raise SimulationError("input digits must be in {0,1,2,3}")
    states = np.zeros((len(inputs), c.width), dtype=np.uint8)
    for column, wire_id in enumerate(input_wires):
        states[:, wire_id] = inputs[:, column]
    for wire in c.wires:
        if wire.role is not WireRole.INPUT:
            states[:, wire.id] = wire.init
    return states


def run_batch(c: Circuit, inputs: np.ndarray, chunk: int | None = None) -> np.ndarray:
    """
    Final full states for many input vectors.

    Args:
        c: circuit to simulate
        inputs: (rows, m) digits, columns in primary-input wire order
        chunk: rows simulated at a time (default QSYNTH4_SWEEP_CHUNK)
    """
    chunk = chunk or config.SWEEP_CHUNK
    inputs = np.asarray(inputs, dtype=np.uint8)
    if inputs.ndim == 1:
        inputs = inputs.reshape(1, -1)
    parts = []
    for start in range(0, len(inputs), chunk):
        parts.append(_run_states(c, _initial_states(c, inputs[start:start + chunk])))
    if not parts:
        return np.zeros((0, c.width), dtype=np.uint8)
    return np.concatenate(parts)


def apply_gate(s: BasisState, g: Gate) -> BasisState:
    states = np.array([s.values], dtype=np.uint8)
    for w in g.wires:
        if not 0 <= w < len(s):
            raise SimulationError(f"gate wire q{w} outside a {len(s)}-wire state")
    _apply_batch(states, g)
    return BasisState(tuple(int(v) for v in states[0]))


def run(c: Circuit, inputs) -> BasisState:
    """
    Simulate one input assignment.

    inputs is either a sequence in primary-input order or a mapping
    {input wire id: digit}.
    """
    input_wires = c.input_wires
    if isinstance(inputs, dict):
        missing = [w for w in input_wires if w not in inputs]
        if missing:
            raise SimulationError(f"no value assigned to primary input q{missing[0]}")
        extra = [w for w in inputs if w not in input_wires]
        if extra:
            raise SimulationError(f"q{extra[0]} is not a primary input")
        vector = [inputs[w] for w in input_wires]
    else:
        vector = list(inputs)
        if len(vector) != len(input_wires):
            raise SimulationError(
                f"circuit has {len(input_wires)} primary inputs, got {len(vector)} values"
            )
    try:
        vector = [as_gf4(v) for v in vector]
    except ValueError as e:
        raise SimulationError(str(e)) from None
    states = _run_states(c, _initial_states(c, np.array([vector], dtype=np.uint8)))
    return BasisState(tuple(int(v) for v in states[0]))


# =============================================================================
# Truth tables and equivalence
# =============================================================================

def _check_sweep_size(m: int):
    if m > config.EXHAUSTIVE_INPUT_LIMIT:
        raise SimulationError(
            f"{m} primary inputs exceed the exhaustive limit of {config.EXHAUSTIVE_INPUT_LIMIT}"
        )


def _output_sweep(c: Circuit):
    """Yield (start, outputs) per chunk of the exhaustive input sweep"""
    m = len(c.input_wires)
    total = 4 ** m
    outputs = list(c.output_wires)
    for start in range(0, total, config.SWEEP_CHUNK):
        stop = min(total, start + config.SWEEP_CHUNK)
        states = _run_states(c, _initial_states(c, all_input_vectors(m, start, stop)))
        yield start, states[:, outputs]


def truth_table(c: Circuit, name: str | None = None) -> QuaternaryFunction:
    m = len(c.input_wires)
    _check_sweep_size(m)
    table = np.concatenate([chunk for _, chunk in _output_sweep(c)])
    return QuaternaryFunction(m, len(c.outputs), table, name)


@dataclass(frozen=True)
class EquivalenceResult:
    """
    Outcome of an equivalence check.

    Attributes:
        equal: no mismatch found
        counterexample: first mismatching input vector (None if equal)
        exhaustive: False when only a random sample of vectors was compared
        vectors_checked: number of input vectors simulated
    """

    equal: bool
    counterexample: tuple[int, ...] | None
    exhaustive: bool
    vectors_checked: int

    def __bool__(self):
        return self.equal


def _first_mismatch(a: np.ndarray, b: np.ndarray) -> int | None:
    rows = np.flatnonzero((a != b).any(axis=1))
    return int(rows[0]) if len(rows) else None


def check_function(c: Circuit, f: QuaternaryFunction) -> EquivalenceResult:
    """Exhaustive comparison of a circuit against a truth table"""
    m = len(c.input_wires)
    if m != f.m or len(c.outputs) != f.k:
        raise SimulationError(
            f"arity mismatch: circuit is {m}-in/{len(c.outputs)}-out, function is {f.m}-in/{f.k}-out"
        )
    _check_sweep_size(m)
    for start, chunk in _output_sweep(c):
        bad = _first_mismatch(chunk, f.outputs[start:start + len(chunk)])
        if bad is not None:
            return EquivalenceResult(False, index_to_digits(start + bad, m), True, start + bad + 1)
    return EquivalenceResult(True, None, True, 4 ** m)


def equivalent(c1: Circuit, c2: Circuit, samples: int | None = None, seed: int | None = None) -> EquivalenceResult:
    """
    Compare the declared outputs of two circuits.

    Exhaustive up to 12 primary inputs; above that a seeded random sample of
    vectors is compared and the result is flagged exhaustive=False.
    """
    m = len(c1.input_wires)
    if m != len(c2.input_wires) or len(c1.outputs) != len(c2.outputs):
        raise SimulationError(
            f"arity mismatch: {m}-in/{len(c1.outputs)}-out vs "
            f"{len(c2.input_wires)}-in/{len(c2.outputs)}-out"
        )
    outs1 = list(c1.output_wires)
    outs2 = list(c2.output_wires)

    if m <= config.EXHAUSTIVE_INPUT_LIMIT:
        total = 4 ** m
        for start in range(0, total, config.SWEEP_CHUNK):
            vectors = all_input_vectors(m, start, min(total, start + config.SWEEP_CHUNK))
            a = _run_states(c1, _initial_states(c1, vectors))[:, outs1]
            b = _run_states(c2, _initial_states(c2, vectors))[:, outs2]
            bad = _first_mismatch(a, b)
            if bad is not None:
                return EquivalenceResult(False, index_to_digits(start + bad, m), True, start + bad + 1)
        return EquivalenceResult(True, None, True, total)

    samples = samples or config.SAMPLED_VECTORS
    rng = np.random.default_rng(config.SAMPLE_SEED if seed is None else seed)
    vectors = rng.integers(0, 4, size=(samples, m), dtype=np.uint8)
    a = run_batch(c1, vectors)[:, outs1]
    b = run_batch(c2, vectors)[:, outs2]
    bad = _first_mismatch(a, b)
    if bad is not None:
        return EquivalenceResult(False, tuple(int(v) for v in vectors[bad]), False, bad + 1)
    return EquivalenceResult(True, None, False, samples)


# =============================================================================
# Full-state properties
# =============================================================================

def state_permutation(c: Circuit) -> np.ndarray:
    """
    Image index of each of the 4^w full basis states (init values ignored).

    Indices are base-4 with wire 0 most significant.
    """
    if c.width > FULL_STATE_LIMIT:
        raise SimulationError(f"full-state sweep limited to {FULL_STATE_LIMIT} wires, circuit has {c.width}")
    states = _run_states(c, all_input_vectors(c.width))
    powers = 4 ** np.arange(c.width - 1, -1, -1, dtype=np.int64)
    return states.astype(np.int64) @ powers


def is_bijective(c: Circuit) -> bool:
    image = state_permutation(c)
    return len(np.unique(image)) == len(image)


def lint_max_min(c: Circuit) -> list[str]:
    """
    Max/Min gates must write a fresh ancilla: init 0 for Max, 3 for Min, and
    no earlier gate touching it. Returns one message per violation.
    """
    problems = []
    touched: set[int] = set()
    for position, g in enumerate(c.gates):
        if isinstance(g, (MaxGate, MinGate)):
            wire = c.wires[g.target]
            need = 0 if isinstance(g, MaxGate) else 3
            label = f"gate {position} ({g.kind.value} -> q{g.target})"
            if wire.role is not WireRole.ANCILLA:
                problems.append(f"{label}: target is a {wire.role.value} wire, not an ancilla")
            elif wire.init != need:
                problems.append(f"{label}: target ancilla starts at {wire.init}, expected {need}")
            if g.target in touched:
                problems.append(f"{label}: target was already used by an earlier gate")
        touched.update(g.wires)
    return problems
