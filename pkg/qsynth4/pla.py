"""
Binary PLA tables and their packing into quaternary functions

Reads the two-level PLA format (.i/.o/.p/.ilb/.ob/.type/.e). '-' in the input
plane is cube notation and is expanded; don't-care outputs are rejected.

Packing: bits are grouped in pairs, most significant bit first within a pair,
most significant pair in the lowest-index qudit. An odd bit count gets one
constant-0 padding bit on the most significant side; the packed function
ignores the padding bit.
"""

import re
from dataclasses import dataclass

import numpy as np

from qsynth4 import config
from qsynth4.errors import PlaParseError
from qsynth4.truth_table import QuaternaryFunction

_TOKEN_RE = re.compile(r"\S+")

ACCEPTED_TYPES = ("f", "fr")
MAX_PLA_INPUTS = 2 * config.EXHAUSTIVE_INPUT_LIMIT


@dataclass(frozen=True, eq=False)
class BinaryTable:
    """
    Completely specified n-input, k-output Boolean function.

    bits[r] holds the output bits (first output first) for input row r,
    first input most significant.
    """

    n_in: int
    n_out: int
    bits: np.ndarray
    name: str | None = None
    input_labels: tuple[str, ...] = ()
    output_labels: tuple[str, ...] = ()

    def __post_init__(self):
        bits = np.asarray(self.bits, dtype=np.uint8).reshape(2 ** self.n_in, self.n_out)
        if bits.size and int(bits.max()) > 1:
            raise PlaParseError("binary table entries must be 0 or 1")
        bits = bits.copy()
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    def __eq__(self, other):
        if not isinstance(other, BinaryTable):
            return NotImplemented
        return (
            self.n_in == other.n_in
            and self.n_out == other.n_out
            and np.array_equal(self.bits, other.bits)
        )

    __hash__ = None

    @classmethod
    def from_callable(cls, n_in: int, n_out: int, fn, name: str | None = None) -> "BinaryTable":
        """fn(*bits) -> tuple of n_out bits"""
        rows = []
        for r in range(2 ** n_in):
            bits = tuple((r >> (n_in - 1 - i)) & 1 for i in range(n_in))
            rows.append(tuple(fn(*bits)))
        return cls(n_in, n_out, np.array(rows, dtype=np.uint8), name)


# =============================================================================
# Parsing
# =============================================================================

def _expand_cube(cube: str) -> list[int]:
    """Row indices covered by an input cube like 1-0"""
    rows = [0]
    for ch in cube:
        if ch == "0":
            rows = [r << 1 for r in rows]
        elif ch == "1":
            rows = [(r << 1) | 1 for r in rows]
        else:
            rows = [(r << 1) | b for r in rows for b in (0, 1)]
    return rows


def parse_pla(text: str) -> BinaryTable:
    n_in = n_out = None
    declared_rows = None
    name = None
    pla_type = "f"
    input_labels: tuple[str, ...] = ()
    output_labels: tuple[str, ...] = ()
    on_set = None
    off_set = None
    row_count = 0

    for number, raw in enumerate(text.splitlines(), start=1):
        code = raw.split("#", 1)[0]
        matches = list(_TOKEN_RE.finditer(code))
        if not matches:
            continue
        tokens = [m.group(0) for m in matches]
        columns = [m.start() + 1 for m in matches]
        key = tokens[0]

        if key.startswith("."):
            if key in (".e", ".end"):
                break
            if key in (".i", ".o", ".p"):
                if len(tokens) != 2 or not tokens[1].isdigit():
                    raise PlaParseError(f"{key} takes one non-negative integer", number, columns[0])
                value = int(tokens[1])
                if key == ".i":
                    if value > MAX_PLA_INPUTS:
                        raise PlaParseError(f"{value} inputs exceed the limit of {MAX_PLA_INPUTS}", number, columns[1])
                    n_in = value
                elif key == ".o":
                    n_out = value
                else:
                    declared_rows = value
            elif key == ".ilb":
                input_labels = tuple(tokens[1:])
            elif key == ".ob":
                output_labels = tuple(tokens[1:])
            elif key == ".type":
                if len(tokens) != 2 or tokens[1] not in ACCEPTED_TYPES:
                    raise PlaParseError(
                        f"unsupported .type {' '.join(tokens[1:])!r} (only {', '.join(ACCEPTED_TYPES)}; "
                        "don't-care sets are not supported)",
                        number, columns[0],
                    )
                pla_type = tokens[1]
            elif key in (".model", ".name"):
                name = " ".join(tokens[1:]) or None
            else:
                raise PlaParseError(f"unknown directive {key!r}", number, columns[0])
            continue

        if n_in is None or n_out is None:
            raise PlaParseError(".i and .o must precede the cube rows", number, columns[0])
        if on_set is None:
            on_set = np.zeros((2 ** n_in, n_out), dtype=bool)
            off_set = np.zeros((2 ** n_in, n_out), dtype=bool)

        if n_in == 0:
            cube, outputs, out_column = "", tokens[0], columns[0]
            if len(tokens) != 1:
                raise PlaParseError("expected only the output plane", number, columns[0])
        else:
            if len(tokens) != 2:
                raise PlaParseError("expected '<input cube> <output plane>'", number, columns[0])
            cube, outputs, out_column = tokens[0], tokens[1], columns[1]
        if len(cube) != n_in:
            raise PlaParseError(f"input cube needs {n_in} characters, got {len(cube)}", number, columns[0])
        for offset, ch in enumerate(cube):
            if ch not in "01-":
                raise PlaParseError(f"invalid input character {ch!r}", number, columns[0] + offset)
        if len(outputs) != n_out:
            raise PlaParseError(f"output plane needs {n_out} characters, got {len(outputs)}", number, out_column)
        for offset, ch in enumerate(outputs):
            if ch in "-~2":
                raise PlaParseError(
                    f"don't-care output {ch!r} is not supported (functions must be completely specified)",
                    number, out_column + offset,
                )
            if ch not in "01":
                raise PlaParseError(f"invalid output character {ch!r}", number, out_column + offset)

        rows = _expand_cube(cube)
        ones = np.array([ch == "1" for ch in outputs])
        on_set[np.ix_(rows, np.flatnonzero(ones))] = True
        if pla_type == "fr":
            off_set[np.ix_(rows, np.flatnonzero(~ones))] = True
        row_count += 1

    if n_in is None or n_out is None:
        raise PlaParseError("missing .i or .o header (empty PLA?)")
    if declared_rows is not None and declared_rows != row_count:
        raise PlaParseError(f".p declares {declared_rows} rows but {row_count} were given")
    if on_set is None:
        on_set = np.zeros((2 ** n_in, n_out), dtype=bool)
        off_set = np.zeros_like(on_set)
    clash = np.argwhere(on_set & off_set)
    if len(clash):
        row, out = (int(v) for v in clash[0])
        raise PlaParseError(f"row {row:0{n_in}b} sets output {out} to both 0 and 1")
    return BinaryTable(n_in, n_out, on_set.astype(np.uint8), name, input_labels, output_labels)


def format_pla(table: BinaryTable) -> str:
    """Full minterm listing, one row per input vector"""
    lines = [f".i {table.n_in}", f".o {table.n_out}"]
    if table.input_labels:
        lines.append(".ilb " + " ".join(table.input_labels))
    if table.output_labels:
        lines.append(".ob " + " ".join(table.output_labels))
    lines.append(".type fr")
    lines.append(f".p {2 ** table.n_in}")
    for r, bits in enumerate(table.bits):
        out = "".join(str(int(b)) for b in bits)
        lines.append(f"{r:0{table.n_in}b} {out}" if table.n_in else out)
    lines.append(".e")
    return "\n".join(lines) + "\n"


def read_pla(path) -> BinaryTable:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_pla(fh.read())


def write_pla(path, table: BinaryTable):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_pla(table))


# =============================================================================
# Packing
# =============================================================================

def qudits_for(bits: int) -> int:
    return (bits + 1) // 2


def pack(table: BinaryTable, name: str | None = None) -> QuaternaryFunction:
    """Group bit pairs into qudits (see module docstring for the pairing)"""
    m = qudits_for(table.n_in)
    k = qudits_for(table.n_out)
    # padding sits above the real input bits, so it drops out modulo 2^n_in
    source_rows = np.arange(4 ** m, dtype=np.int64) % (2 ** table.n_in)
    out_bits = table.bits[source_rows].astype(np.int64)
    bit_weights = 2 ** np.arange(table.n_out - 1, -1, -1, dtype=np.int64)
    words = out_bits @ bit_weights if table.n_out else np.zeros(len(source_rows), dtype=np.int64)
    digit_weights = 4 ** np.arange(k - 1, -1, -1, dtype=np.int64)
    outputs = (words[:, None] // digit_weights[None, :]) % 4
    return QuaternaryFunction(m, k, outputs.astype(np.uint8), name or table.name)


def unpack(f: QuaternaryFunction, n_in: int, n_out: int) -> BinaryTable:
    """Binary table read back from a packed function (padding rows ignored)"""
    if qudits_for(n_in) != f.m or qudits_for(n_out) != f.k:
        raise PlaParseError(f"{n_in}/{n_out} bits do not pack into {f.m}/{f.k} qudits")
    digit_weights = 4 ** np.arange(f.k - 1, -1, -1, dtype=np.int64)
    words = f.outputs[: 2 ** n_in].astype(np.int64) @ digit_weights
    shifts = np.arange(n_out - 1, -1, -1, dtype=np.int64)
    bits = (words[:, None] >> shifts[None, :]) & 1
    if np.any(words >> n_out):
        raise PlaParseError("packed outputs use the padding bit")
    return BinaryTable(n_in, n_out, bits.astype(np.uint8), f.name)


def ingest_pla(text: str, name: str | None = None) -> QuaternaryFunction:
    return pack(parse_pla(text), name)
