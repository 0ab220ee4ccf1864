"""
GF(4) and modulo-4 arithmetic, shift operations and projection operations

Digits are plain ints in {0, 1, 2, 3}. Two different additions exist and are
never aliased:
- gf4_add: addition in the Galois field GF(4) (every element is self-inverse)
- mod4_add: integer addition modulo 4 (used by NOT and the ADD gate)

The arithmetic tables are transcribed literally; the polynomial view of the
shift operations is checked against them when this module is imported.
"""

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from qsynth4.errors import Gf4Error

Gf4Value = int

VALUES = (0, 1, 2, 3)

# =============================================================================
# Arithmetic tables
# =============================================================================

_GF4_ADD_ROWS = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)

_GF4_MUL_ROWS = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)

GF4_ADD = np.array(_GF4_ADD_ROWS, dtype=np.uint8)
GF4_MUL = np.array(_GF4_MUL_ROWS, dtype=np.uint8)
MOD4_ADD = np.array([[(a + b) % 4 for b in VALUES] for a in VALUES], dtype=np.uint8)

for _table in (GF4_ADD, GF4_MUL, MOD4_ADD):
    _table.setflags(write=False)


def as_gf4(value) -> Gf4Value:
    """Validate a quaternary digit"""
    try:
        v = int(value)
    except (TypeError, ValueError):
        raise Gf4Error(f"not a quaternary digit: {value!r}") from None
    if v != value or v not in VALUES:
        raise Gf4Error(f"quaternary digit out of range: {value!r}")
    return v


def gf4_add(a: Gf4Value, b: Gf4Value) -> Gf4Value:
    return _GF4_ADD_ROWS[a][b]


def gf4_mul(a: Gf4Value, b: Gf4Value) -> Gf4Value:
    return _GF4_MUL_ROWS[a][b]


def mod4_add(a: Gf4Value, b: Gf4Value) -> Gf4Value:
    return (a + b) % 4


def quat_not(a: Gf4Value) -> Gf4Value:
    """Quaternary NOT: a + 1 modulo 4"""
    return (a + 1) % 4


def qmax(a: Gf4Value, b: Gf4Value) -> Gf4Value:
    return a if a >= b else b


def qmin(a: Gf4Value, b: Gf4Value) -> Gf4Value:
    return a if a <= b else b


# =============================================================================
# Projection operations
# =============================================================================

FAMILIES = ("L", "J", "P")

# value produced by a firing projection of each family
FIRE_VALUE = {"L": 1, "J": 2, "P": 3}


@dataclass(frozen=True, order=True)
class ProjectionKind:
    """One of L_i, J_i, P_i or their complements L'_i, J'_i, P'_i"""

    family: str
    index: Gf4Value
    complemented: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise Gf4Error(f"unknown projection family: {self.family!r}")
        as_gf4(self.index)

    @property
    def fire_value(self) -> Gf4Value:
        return FIRE_VALUE[self.family]

    def complement(self) -> "ProjectionKind":
        return ProjectionKind(self.family, self.index, not self.complemented)

    def __str__(self):
        prime = "'" if self.complemented else ""
        return f"{self.family}{prime}{self.index}"


def projection(kind: ProjectionKind, a: Gf4Value) -> Gf4Value:
    """Value of a projection operation on one digit"""
    hit = a == kind.index
    if kind.complemented:
        hit = not hit
    return kind.fire_value if hit else 0


def all_projection_kinds() -> list[ProjectionKind]:
    """All 24 projection operators (3 families x 4 indices x plain/complemented)"""
    return [
        ProjectionKind(family, index, complemented)
        for complemented in (False, True)
        for family in FAMILIES
        for index in VALUES
    ]


# =============================================================================
# Shift operations
# =============================================================================

@dataclass(frozen=True)
class ShiftOp:
    """
    A permutation of GF(4) written as x -> a2*x^2 + a1*x + a0.

    Attributes:
        symbol: ASCII tag, e.g. "x+1" for x^{+1} or "x0123" for x^{0123}
        coeffs: (a2, a1, a0)
        perm: image of 0, 1, 2, 3
    """

    symbol: str
    coeffs: tuple[Gf4Value, Gf4Value, Gf4Value]
    perm: tuple[Gf4Value, Gf4Value, Gf4Value, Gf4Value]

    def __call__(self, x: Gf4Value) -> Gf4Value:
        return self.perm[x]

    @property
    def is_identity(self) -> bool:
        return self.perm == VALUES

    @property
    def is_even(self) -> bool:
        return permutation_parity(self.perm) == 0

    def __str__(self):
        return self.symbol


def poly_eval(coeffs, x: Gf4Value) -> Gf4Value:
    """Evaluate a2*x^2 + a1*x + a0 with GF(4) arithmetic"""
    a2, a1, a0 = coeffs
    square = gf4_mul(x, x)
    return gf4_add(gf4_add(gf4_mul(a2, square), gf4_mul(a1, x)), a0)


def permutation_parity(perm) -> int:
    """0 for even permutations, 1 for odd"""
    seen = [False] * len(perm)
    parity = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        parity ^= (length - 1) & 1
    return parity


# Symbol table: ASCII tag -> (a2, a1, a0). The tag keeps the superscript of the
# usual notation: x^{+1} -> "x+1", x^{0123} -> "x0123", x^{23} -> "x23".
_CATALOG_COEFFS = (
    ("x+0", (0, 1, 0)),
    ("x+1", (0, 1, 1)),
    ("x+2", (0, 1, 2)),
    ("x+3", (0, 1, 3)),
    ("x123", (0, 2, 0)),
    ("x013", (0, 2, 1)),
    ("x021", (0, 2, 2)),
    ("x032", (0, 2, 3)),
    ("x132", (0, 3, 0)),
    ("x012", (0, 3, 1)),
    ("x023", (0, 3, 2)),
    ("x031", (0, 3, 3)),
    ("x23", (1, 0, 0)),
    ("x01", (1, 0, 1)),
    ("x0213", (1, 0, 2)),
    ("x0312", (1, 0, 3)),
    ("x12", (2, 0, 0)),
    ("x0132", (2, 0, 1)),
    ("x0231", (2, 0, 2)),
    ("x03", (2, 0, 3)),
    ("x13", (3, 0, 0)),
    ("x0123", (3, 0, 1)),
    ("x02", (3, 0, 2)),
    ("x0321", (3, 0, 3)),
)

_CATALOG: tuple[ShiftOp, ...] = tuple(
    ShiftOp(symbol, coeffs, tuple(poly_eval(coeffs, x) for x in VALUES))
    for symbol, coeffs in _CATALOG_COEFFS
)
_BY_SYMBOL = {op.symbol: op for op in _CATALOG}
_BY_PERM = {op.perm: op for op in _CATALOG}


def _check_catalog():
    """The catalog must be exactly the symmetric group on {0,1,2,3}"""
    if len(_CATALOG) != 24 or len(_BY_PERM) != 24:
        raise Gf4Error("shift catalog permutations are not pairwise distinct")
    if set(_BY_PERM) != set(permutations(VALUES)):
        raise Gf4Error("shift catalog is not the full symmetric group on 4 letters")


_check_catalog()

IDENTITY_SHIFT = _BY_SYMBOL["x+0"]


def shift_catalog() -> list[ShiftOp]:
    """All 24 shift operations in catalog order"""
    return list(_CATALOG)


def shift_apply(op: ShiftOp, x: Gf4Value) -> Gf4Value:
    return op.perm[x]


def shift_by_symbol(symbol: str) -> ShiftOp:
    try:
        return _BY_SYMBOL[symbol]
    except KeyError:
        raise Gf4Error(f"unknown shift symbol: {symbol!r}") from None


def shift_from_perm(perm) -> ShiftOp:
    """Catalog member with the given permutation table (validated)"""
    key = tuple(as_gf4(v) for v in perm)
    if len(key) != 4 or sorted(key) != list(VALUES):
        raise Gf4Error(f"not a permutation of 0..3: {tuple(perm)!r}")
    return _BY_PERM[key]


def translation(c: Gf4Value) -> ShiftOp:
    """The GF(4) translation x -> x + c"""
    return _BY_SYMBOL[f"x+{as_gf4(c)}"]


def shift_compose(f: ShiftOp, g: ShiftOp) -> ShiftOp:
    """f after g: x -> f(g(x))"""
    try:
        return _BY_PERM[tuple(f.perm[g.perm[x]] for x in VALUES)]
    except KeyError:
        raise Gf4Error(f"composition of {f} and {g} is not in the catalog") from None


def shift_inverse(f: ShiftOp) -> ShiftOp:
    inverse = [0] * 4
    for x in VALUES:
        inverse[f.perm[x]] = x
    try:
        return _BY_PERM[tuple(inverse)]
    except KeyError:
        raise Gf4Error(f"inverse of {f} is not in the catalog") from None


def shift_sequence(ops) -> ShiftOp:
    """Net shift of applying ops in order (first element applied first)"""
    net = IDENTITY_SHIFT
    for op in ops:
        net = shift_compose(op, net)
    return net
