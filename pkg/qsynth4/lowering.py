"""
Decomposition of macro gates into M-S gates and 1-qudit shifts

An M-S gate fires only when its control is 3. Everything else is built from
that:
- control conjugation: shift the control so that v maps to 3, fire, undo
- value-controlled shift: one conjugated M-S per control value
  (single-control GQG, Feynman and ADD are all of this form)
- multi-control GQG: nested group commutators of single-control firings
- C2CS: one transposition stage per transposition of the mod-4 increment

Toffoli, Max and Min stay as macros. Every gadget is checked against its
macro gate by exhaustive simulation in the test suite.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian

from qsynth4.circuit import (
    ACTUAL_COST_MODEL,
    DECLARED_COST_MODEL,
    AddGate,
    C2CSGate,
    Circuit,
    CircuitBuilder,
    FeynmanGate,
    Gate,
    GateKind,
    GQGGate,
    MSGate,
    ShiftGate,
    gqg_for_value,
    projection_gqg,
)
from qsynth4.errors import LoweringError, NetlistParseError
from qsynth4.gf4 import (
    IDENTITY_SHIFT,
    VALUES,
    ShiftOp,
    all_projection_kinds,
    gf4_add,
    shift_catalog,
    shift_from_perm,
    shift_inverse,
    shift_sequence,
    translation,
)
from qsynth4.netlist import gate_to_text, parse, serialize
from qsynth4.simulator import state_permutation
from qsynth4.utils import log

PRIMITIVE_KINDS = frozenset({GateKind.MS, GateKind.SHIFT})
KEPT_MACROS = frozenset({GateKind.TOFFOLI, GateKind.MAX, GateKind.MIN})


# =============================================================================
# Building blocks
# =============================================================================

def control_conjugation_gadget(v: int, shift: ShiftOp, control: int = 0, target: int = 1) -> list[Gate]:
    """Shift the target iff the control equals v; the control is restored"""
    if v == 3:
        return [MSGate(control, target, shift)]
    # x + (v + 3) maps v to 3 and is its own inverse
    s = translation(gf4_add(v, 3))
    return [ShiftGate(control, s), MSGate(control, target, shift), ShiftGate(control, s)]


def value_controlled_shift(control: int, target: int, shifts) -> list[Gate]:
    """Apply shifts[v] to the target when the control holds v"""
    gates = []
    for v in VALUES:
        if not shifts[v].is_identity:
            gates.extend(control_conjugation_gadget(v, shifts[v], control, target))
    return gates


@lru_cache(maxsize=None)
def commutator_factors(sigma: ShiftOp, even_h: bool) -> tuple[ShiftOp, ShiftOp]:
    """
    (g, h) with g, h, g^-1, h^-1 applied in that order equal to sigma.

    even_h restricts h to even permutations.
    """
    candidates = [h for h in shift_catalog() if h.is_even or not even_h]
    for g in shift_catalog():
        g_inv = shift_inverse(g)
        for h in candidates:
            if shift_sequence((g, h, g_inv, shift_inverse(h))) == sigma:
                return g, h
    raise LoweringError(f"shift {sigma} is not a commutator in the required form")


def all_equal_shift(controls, target: int, v: int, sigma: ShiftOp) -> list[Gate]:
    """Apply sigma to the target iff every control equals v"""
    controls = tuple(controls)
    if sigma.is_identity:
        return []
    if len(controls) == 1:
        return control_conjugation_gadget(v, sigma, controls[0], target)
    if not sigma.is_even:
        raise LoweringError(
            f"odd shift {sigma} on {len(controls)} controls cannot be built from "
            "M-S gates that restore their controls"
        )
    first, rest = controls[:1], controls[1:]
    g, h = commutator_factors(sigma, even_h=len(rest) > 1)
    return (
        all_equal_shift(first, target, v, g)
        + all_equal_shift(rest, target, v, h)
        + all_equal_shift(first, target, v, shift_inverse(g))
        + all_equal_shift(rest, target, v, shift_inverse(h))
    )


@lru_cache(maxsize=None)
def transposition_factors(sigma: ShiftOp) -> tuple[ShiftOp, ...]:
    """Shortest list of transpositions whose application in order gives sigma"""
    swaps = [
        shift_from_perm(tuple(j if x == i else i if x == j else x for x in VALUES))
        for i in VALUES for j in VALUES if i < j
    ]
    for length in range(4):
        for seq in cartesian(swaps, repeat=length):
            if shift_sequence(seq) == sigma:
                return tuple(seq)
    raise LoweringError(f"no transposition factorization for {sigma}")


def transposition_stage(a: int, b: int, target: int, pair, t: ShiftOp) -> list[Gate]:
    """
    Apply the transposition t to the target exactly when {A, B} == pair.

    Three conditional firings of t whose firing sets overlap in pairs; t is
    an involution, so only the two pair cells see it an odd number of times.
    """
    i, j = pair
    k, l = (x for x in VALUES if x not in pair)
    rho = {i: j, j: i, k: k, l: k}
    # A <- A + rho(B) + 3, so A == 3 exactly when A held rho(B)
    offset = value_controlled_shift(b, a, tuple(translation(gf4_add(rho[x], 3)) for x in VALUES))
    gates = offset + [MSGate(a, target, t)] + offset
    for hit in (k, l):
        # B <- B + hit + 3 while A == k
        move = value_controlled_shift(
            a, b, tuple(translation(gf4_add(hit, 3)) if x == k else IDENTITY_SHIFT for x in VALUES)
        )
        gates += move + [MSGate(b, target, t)] + move
    return gates


def mod4_shift(amount: int) -> ShiftOp:
    return shift_from_perm(tuple((x + amount) % 4 for x in VALUES))


# =============================================================================
# Gadgets per macro kind
# =============================================================================

def lower_gqg(g: GQGGate) -> list[Gate]:
    if len(g.controls) == 1:
        return value_controlled_shift(g.controls[0], g.target, g.shifts)
    gates = []
    for v in VALUES:
        gates.extend(all_equal_shift(g.controls, g.target, v, g.shifts[v]))
    return gates


def lower_feynman(g: FeynmanGate) -> list[Gate]:
    return value_controlled_shift(g.a, g.b, tuple(translation(v) for v in VALUES))


def lower_add(g: AddGate) -> list[Gate]:
    return value_controlled_shift(g.a, g.b, tuple(mod4_shift(v) for v in VALUES))


def lower_c2cs(g: C2CSGate) -> list[Gate]:
    gates = []
    for t in transposition_factors(mod4_shift(g.amount)):
        gates.extend(transposition_stage(g.a, g.b, g.target, g.pair, t))
    return gates


DEFAULT_LIBRARY = {
    GateKind.GQG: lower_gqg,
    GateKind.FEYNMAN: lower_feynman,
    GateKind.ADD: lower_add,
    GateKind.C2CS: lower_c2cs,
}


def merge_shifts(gates) -> list[Gate]:
    """Fuse 1-qudit shifts on a wire with no gate between them; drop identities"""
    out: list[Gate] = []
    last: dict[int, int] = {}
    for g in gates:
        if isinstance(g, ShiftGate):
            position = last.get(g.target)
            if position is not None and isinstance(out[position], ShiftGate):
                out[position] = ShiftGate(g.target, shift_sequence((out[position].shift, g.shift)))
                continue
        out.append(g)
        for w in g.wires:
            last[w] = len(out) - 1
    return [g for g in out if not (isinstance(g, ShiftGate) and g.shift.is_identity)]


def expand(g: Gate, library=None, keep=KEPT_MACROS) -> list[Gate]:
    library = DEFAULT_LIBRARY if library is None else library
    if g.kind in PRIMITIVE_KINDS or g.kind in keep:
        return [g]
    try:
        lower_fn = library[g.kind]
    except KeyError:
        raise LoweringError(f"no gadget for gate kind {g.kind.value}: {gate_to_text(g)}") from None
    return lower_fn(g)


def decompose(c: Circuit, library=None, keep=KEPT_MACROS) -> Circuit:
    """
    Rewrite every macro gate (other than the kept ones) as M-S gates and
    1-qudit shifts.

    Args:
        c: circuit to lower
        library: gate kind -> expansion function (default DEFAULT_LIBRARY)
        keep: macro kinds left untouched
    """
    gates = []
    for g in c.gates:
        gates.extend(expand(g, library, keep))
    gates = merge_shifts(gates)
    lowered = Circuit(c.wires, tuple(gates), c.outputs)
    log(f"Decomposed {len(c.gates)} gate(s) into {len(gates)}")
    return lowered


# =============================================================================
# Gadget library
# =============================================================================

@dataclass(frozen=True)
class Gadget:
    """A macro gate on wires 0..w-1 and its M-S level replacement"""

    name: str
    pattern: Gate
    replacement: tuple[Gate, ...]
    declared_cost: int

    @property
    def width(self) -> int:
        return 1 + max(max(g.wires) for g in (self.pattern, *self.replacement))

    @property
    def actual_cost(self) -> int:
        return sum(ACTUAL_COST_MODEL.cost_of(g.kind) for g in self.replacement)

    def circuits(self) -> tuple[Circuit, Circuit]:
        """(macro, replacement) as circuits whose wires are all inputs"""
        builder = CircuitBuilder()
        for _ in range(self.width):
            builder.add_input()
        macro = builder.build()
        return (
            Circuit(macro.wires, (self.pattern,), ()),
            Circuit(macro.wires, self.replacement, ()),
        )

    def is_equivalent(self) -> bool:
        """Exhaustive check over every basis state of the gadget's wires"""
        macro, replacement = self.circuits()
        return bool((state_permutation(macro) == state_permutation(replacement)).all())


def make_gadget(name: str, pattern: Gate) -> Gadget:
    replacement = tuple(merge_shifts(expand(pattern)))
    return Gadget(name, pattern, replacement, DECLARED_COST_MODEL.cost_of(pattern.kind))


def gadget_library() -> list[Gadget]:
    gadgets = []
    for v in VALUES:
        gadgets.append(make_gadget(f"conj-{v}", gqg_for_value((0,), 1, v, translation(1))))
    for kind in all_projection_kinds():
        gadgets.append(make_gadget(f"gqg-{kind}", projection_gqg((0,), 1, kind)))
    for kind in all_projection_kinds():
        if not kind.complemented:
            gadgets.append(make_gadget(f"gqg2-{kind}", projection_gqg((0, 1), 2, kind)))
    for pair in ((1, 2), (1, 3), (2, 3)):
        for amount in (1, 2, 3):
            gadgets.append(make_gadget(f"c2cs-{pair[0]}{pair[1]}+{amount}", C2CSGate(0, 1, 2, pair, amount)))
    gadgets.append(make_gadget("feynman", FeynmanGate(0, 1)))
    gadgets.append(make_gadget("add", AddGate(0, 1)))
    return gadgets


def format_gadget(g: Gadget) -> str:
    _, replacement = g.circuits()
    body = serialize(replacement).splitlines()
    header = [line for line in body if line.startswith(".")]
    gates = [line for line in body if not line.startswith(".")]
    lines = [f".gadget {g.name}", f".declared {g.declared_cost}", *header, f".pattern {gate_to_text(g.pattern)}", *gates]
    return "\n".join(lines) + "\n"


def export_gadget_library(gadgets=None) -> str:
    gadgets = gadget_library() if gadgets is None else gadgets
    return "\n".join(format_gadget(g) for g in gadgets)


def parse_gadget_library(text: str) -> list[Gadget]:
    """Inverse of export_gadget_library; errors keep their original line numbers"""
    source = text.splitlines()
    blocks: list[tuple[str, list[int]]] = []
    for number, raw in enumerate(source):
        tokens = raw.split("#", 1)[0].split()
        if tokens and tokens[0] == ".gadget":
            if len(tokens) != 2:
                raise NetlistParseError(".gadget takes one name", number + 1, 1)
            blocks.append((tokens[1], []))
        elif tokens:
            if not blocks:
                raise NetlistParseError("content before the first .gadget header", number + 1, 1)
            blocks[-1][1].append(number)

    gadgets = []
    for name, numbers in blocks:
        netlist = [""] * len(source)
        pattern_text = [""] * len(source)
        declared = None
        pattern_line = None
        for number in numbers:
            raw = source[number]
            key = raw.split()[0]
            if key == ".declared":
                try:
                    declared = int(raw.split()[1])
                except (IndexError, ValueError):
                    raise NetlistParseError(".declared takes an integer", number + 1, 1) from None
            elif key == ".pattern":
                pattern_line = number
                pattern_text[number] = raw.replace(".pattern", " " * len(".pattern"), 1)
            else:
                netlist[number] = raw
                if key.startswith("."):
                    pattern_text[number] = raw
        if pattern_line is None:
            raise NetlistParseError(f"gadget {name!r} has no .pattern line")
        replacement = parse("\n".join(netlist))
        pattern = parse("\n".join(pattern_text))
        if declared is None:
            declared = DECLARED_COST_MODEL.cost_of(pattern.gates[0].kind)
        gadgets.append(Gadget(name, pattern.gates[0], replacement.gates, declared))
    return gadgets
