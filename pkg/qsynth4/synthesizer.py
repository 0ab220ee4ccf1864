"""
Minterm-based synthesis of quaternary functions

Pipeline per output:
1. find_add_template: an output equal to (x_i + x_j) mod 4 becomes one Add gate
2. extract_minterms: one minterm per input vector with a nonzero output
3. build_expression: L literals for level 1, J for 2, P for 3
4. simplify (qsynth4.expr)
5. lower: literals -> GQG, pair merges -> C2CS, products -> Min, sum -> Max

synth() runs the pipeline for every output over shared input wires and
verifies the circuit against the truth table before returning it.
"""

from dataclasses import asdict, dataclass, field
from typing import NamedTuple

import numpy as np

from qsynth4 import config
from qsynth4.circuit import (
    ACTUAL_COST_MODEL,
    AddGate,
    C2CSGate,
    Circuit,
    CircuitBuilder,
    FeynmanGate,
    MaxGate,
    MinGate,
    circuit_cost,
    circuit_levels,
    gate_counts,
    projection_gqg,
)
from qsynth4.errors import ExpressionError, SimulationError, SynthesisError
from qsynth4.expr import Const, Literal, PairMerge, Product, QExpr, SimplifyReport, simplify_with_report, var_name
from qsynth4.gf4 import ProjectionKind
from qsynth4.lowering import decompose
from qsynth4.simulator import check_function, lint_max_min
from qsynth4.truth_table import QuaternaryFunction
from qsynth4.utils import all_input_vectors, log

FAMILY_FOR_LEVEL = {1: "L", 2: "J", 3: "P"}


@dataclass(frozen=True)
class Minterm:
    """literals: (variable, required value) for every variable"""

    literals: tuple[tuple[int, int], ...]
    level: int

    def __post_init__(self):
        if self.level not in (1, 2, 3):
            raise ExpressionError(f"minterm level must be 1, 2 or 3, got {self.level}")


def extract_minterms(f: QuaternaryFunction, output: int = 0) -> list[Minterm]:
    column = f.column(output)
    minterms = []
    for vector, value in zip(all_input_vectors(f.m), column):
        if value:
            minterms.append(Minterm(tuple((i, int(d)) for i, d in enumerate(vector)), int(value)))
    return minterms


def build_expression(minterms) -> QExpr:
    terms = []
    for mt in minterms:
        family = FAMILY_FOR_LEVEL[mt.level]
        if mt.literals:
            factors = tuple(Literal(ProjectionKind(family, value), (var,)) for var, value in mt.literals)
        else:
            factors = (Const(mt.level),)
        terms.append(Product(factors))
    return QExpr(tuple(terms))


# =============================================================================
# Adder template
# =============================================================================

class AddTemplate(NamedTuple):
    """Output equal to (x_a + x_b) mod 4; the sum lands on a copy of x_b or on x_b itself"""

    a: int
    b: int

    def __str__(self):
        return f"({var_name(self.a)} + {var_name(self.b)}) mod 4"


def find_add_template(f: QuaternaryFunction, output: int = 0) -> AddTemplate | None:
    if f.m < 2:
        return None
    vectors = all_input_vectors(f.m).astype(np.int64)
    column = f.column(output).astype(np.int64)
    for a in range(f.m):
        for b in range(a + 1, f.m):
            if np.array_equal((vectors[:, a] + vectors[:, b]) % 4, column):
                return AddTemplate(a, b)
    return None


# =============================================================================
# Lowering expressions to macro gates
# =============================================================================

class _Lowerer:
    """
    Writes expressions into a CircuitBuilder over shared input wires.

    literal_ancillae counts GQG and C2CS targets (one per factor), the wires
    bounded by max_ancilla. helper_ancillae counts Min/Max targets and adder
    copies.
    """

    def __init__(self, builder: CircuitBuilder, input_wires):
        self.builder = builder
        self.input_wires = tuple(input_wires)
        self.constants: dict[int, int] = {}
        self.literal_ancillae = 0
        self.helper_ancillae = 0

    def constant(self, value: int) -> int:
        if value not in self.constants:
            self.constants[value] = self.builder.add_constant(value)
        return self.constants[value]

    def wire_of(self, var: int) -> int:
        try:
            return self.input_wires[var]
        except IndexError:
            raise ExpressionError(f"expression uses variable {var} but only {len(self.input_wires)} inputs exist") from None

    def factor(self, f) -> int:
        if isinstance(f, Const):
            return self.constant(f.value)
        if isinstance(f, Literal):
            controls = tuple(self.wire_of(v) for v in f.variables)
            target = self.builder.add_ancilla(0)
            self.builder.append(projection_gqg(controls, target, f.kind))
        elif isinstance(f, PairMerge):
            a, b = (self.wire_of(v) for v in f.variables)
            target = self.builder.add_ancilla(0)
            self.builder.append(C2CSGate(a, b, target, f.pair, f.level))
        else:
            raise ExpressionError(f"cannot lower factor {f!r}")
        self.literal_ancillae += 1
        return target

    def product(self, p: Product) -> int:
        if not p.factors:
            return self.constant(3)
        wires = list(dict.fromkeys(self.factor(f) for f in p.factors))
        if len(wires) == 1:
            return wires[0]
        target = self.builder.add_ancilla(3)
        self.helper_ancillae += 1
        self.builder.append(MinGate(tuple(wires), target))
        return target

    def expression(self, e: QExpr) -> int:
        if not e.terms:
            return self.constant(0)
        wires = list(dict.fromkeys(self.product(t) for t in e.terms))
        if len(wires) == 1:
            return wires[0]
        target = self.builder.add_ancilla(0)
        self.helper_ancillae += 1
        self.builder.append(MaxGate(tuple(wires), target))
        return target

    def add(self, t: AddTemplate, in_place: bool = False) -> int:
        """Add x_a onto x_b's wire, or onto a Feynman copy of it"""
        a, b = self.wire_of(t.a), self.wire_of(t.b)
        if in_place:
            self.builder.append(AddGate(a, b))
            return b
        target = self.builder.add_ancilla(0)
        self.helper_ancillae += 1
        self.builder.append(FeynmanGate(b, target))
        self.builder.append(AddGate(a, target))
        return target


def lower(e: QExpr, m: int, name: str = "f") -> Circuit:
    """Circuit over m fresh input wires computing e on one output"""
    builder = CircuitBuilder()
    inputs = [builder.add_input() for _ in range(m)]
    builder.add_output(_Lowerer(builder, inputs).expression(e), name)
    return builder.build()


# =============================================================================
# End-to-end synthesis
# =============================================================================

@dataclass
class SynthStats:
    """
    Per-function synthesis report.

    n, p, s count the rows equal to 1, 2, 3 over all outputs, so
    max_ancilla = (n + p + s) * m. reduced_ancilla counts the projection and
    pair-merge ancillae that bound covers; helper_ancilla counts Min/Max
    targets and adder copies. cost and levels are for the macro-level circuit
    under the declared cost model; actual_cost and lowered_levels are filled
    when the circuit was decomposed to M-S level.
    """

    name: str | None
    m: int
    k: int
    n: int
    p: int
    s: int
    max_ancilla: int
    reduced_ancilla: int
    cost: int
    levels: int
    helper_ancilla: int = 0
    minterms_per_output: list[int] = field(default_factory=list)
    pair_merges: int = 0
    multi_arg_literals: int = 0
    unmerged_zero_pairs: int = 0
    add_templates: dict[str, str] = field(default_factory=dict)
    gate_counts: dict[str, int] = field(default_factory=dict)
    actual_cost: int | None = None
    lowered_levels: int | None = None
    lowered_gate_counts: dict[str, int] | None = None

    @property
    def declared_cost(self) -> int:
        return self.cost

    @property
    def total_ancilla(self) -> int:
        return self.reduced_ancilla + self.helper_ancilla

    def to_dict(self) -> dict:
        data = asdict(self)
        data["declared_cost"] = self.cost
        data["total_ancilla"] = self.total_ancilla
        return data


class SynthResult(NamedTuple):
    circuit: Circuit
    stats: SynthStats
    lowered: Circuit | None
    # None for outputs built by the adder template
    expressions: tuple[QExpr | None, ...]


def _verify(c: Circuit, f: QuaternaryFunction, what: str):
    result = check_function(c, f)
    if not result.equal:
        digits = "".join(str(d) for d in result.counterexample)
        raise SynthesisError(f"{what} circuit for {f.name or 'function'} disagrees with its truth table at input {digits}")
    problems = lint_max_min(c)
    if problems:
        raise SynthesisError(f"{what} circuit for {f.name or 'function'} breaks the Max/Min ancilla rule: {problems[0]}")


def synth(f: QuaternaryFunction, lower: bool = False) -> SynthResult:
    """
    Synthesize f and verify the result exhaustively.

    Outputs matching the adder template are built last, so the final one can
    overwrite its input wire after every other output has read it.

    Args:
        f: completely specified function (at most config.EXHAUSTIVE_INPUT_LIMIT inputs)
        lower: also decompose to M-S level and verify the lowered circuit
    """
    if f.m > config.EXHAUSTIVE_INPUT_LIMIT:
        raise SimulationError(
            f"{f.m} primary inputs exceed the exhaustive limit of {config.EXHAUSTIVE_INPUT_LIMIT}; "
            "synthesis needs a full truth-table check"
        )
    log(f"Synthesizing {f.name or 'function'}: {f.m} input(s), {f.k} output(s)")
    builder = CircuitBuilder()
    inputs = [builder.add_input() for _ in range(f.m)]
    lowerer = _Lowerer(builder, inputs)
    names = f.output_names()

    templates = {}
    for output in range(f.k):
        template = find_add_template(f, output)
        if template is not None:
            templates[output] = template

    expressions: list[QExpr | None] = [None] * f.k
    minterm_counts = [0] * f.k
    output_wires: dict[int, int] = {}
    reports: list[SimplifyReport] = []
    for output, name in enumerate(names):
        if output in templates:
            continue
        minterms = extract_minterms(f, output)
        minterm_counts[output] = len(minterms)
        expression, report = simplify_with_report(build_expression(minterms))
        expressions[output] = expression
        reports.append(report)
        output_wires[output] = lowerer.expression(expression)
        log(f"  {name}: {len(minterms)} minterm(s), {len(expression.terms)} product(s) after simplification")

    last = max(templates, default=None)
    for output, template in templates.items():
        output_wires[output] = lowerer.add(template, in_place=output == last)
        log(f"  {names[output]}: adder template {template}")

    for output, name in enumerate(names):
        builder.add_output(output_wires[output], name)
    circuit = builder.build()
    _verify(circuit, f, "synthesized")

    n, p, s = f.level_counts()
    stats = SynthStats(
        name=f.name,
        m=f.m,
        k=f.k,
        n=n,
        p=p,
        s=s,
        max_ancilla=(n + p + s) * f.m,
        reduced_ancilla=lowerer.literal_ancillae,
        cost=circuit_cost(circuit),
        levels=circuit_levels(circuit),
        helper_ancilla=lowerer.helper_ancillae,
        minterms_per_output=minterm_counts,
        pair_merges=sum(r.pair_merges for r in reports),
        multi_arg_literals=sum(r.multi_arg_literals for r in reports),
        unmerged_zero_pairs=sum(r.unmerged_zero_pairs for r in reports),
        add_templates={names[o]: str(t) for o, t in templates.items()},
        gate_counts=gate_counts(circuit),
    )

    lowered = None
    if lower:
        lowered = decompose(circuit)
        _verify(lowered, f, "lowered")
        stats.actual_cost = circuit_cost(lowered, ACTUAL_COST_MODEL)
        stats.lowered_levels = circuit_levels(lowered)
        stats.lowered_gate_counts = gate_counts(lowered)

    log(
        f"Synthesized {f.name or 'function'}: ancilla {stats.reduced_ancilla}/{stats.max_ancilla} "
        f"(+{stats.helper_ancilla} helper), cost {stats.cost}, levels {stats.levels}"
    )
    return SynthResult(circuit, stats, lowered, tuple(expressions))
