"""
Quaternary truth tables and the .qtt file format

    .i 2
    .o 1
    .name table4
    00 0
    01 3
    ...

Rows are "inputs outputs" as base-4 digit strings. With the .ordered flag the
input column is omitted and rows must appear in ascending order. Tables must
be completely specified (4^M rows, no don't-cares).
"""

import re
from dataclasses import dataclass

import numpy as np

from qsynth4.errors import Qsynth4Error, TruthTableParseError
from qsynth4.utils import all_input_vectors, digits_to_index, index_to_digits

_TOKEN_RE = re.compile(r"\S+")


@dataclass(frozen=True, eq=False)
class QuaternaryFunction:
    """
    An m-input, k-output quaternary function.

    outputs[r] holds the output vector for the r-th input vector in
    lexicographic order (first input most significant).
    """

    m: int
    k: int
    outputs: np.ndarray
    name: str | None = None

    def __post_init__(self):
        table = np.asarray(self.outputs, dtype=np.uint8)
        if table.ndim == 1:
            table = table.reshape(-1, 1)
        if table.shape != (4 ** self.m, self.k):
            raise Qsynth4Error(
                f"truth table needs shape ({4 ** self.m}, {self.k}), got {table.shape}"
            )
        if table.size and int(table.max()) > 3:
            raise Qsynth4Error("truth table values must be in {0,1,2,3}")
        table = table.copy()
        table.setflags(write=False)
        object.__setattr__(self, "outputs", table)

    @classmethod
    def from_callable(cls, m: int, k: int, fn, name: str | None = None) -> "QuaternaryFunction":
        """Build a table from fn(*inputs) -> int or tuple of k ints"""
        rows = []
        for vector in all_input_vectors(m):
            value = fn(*(int(v) for v in vector))
            rows.append(value if isinstance(value, (tuple, list)) else (value,))
        return cls(m, k, np.array(rows, dtype=np.uint8).reshape(4 ** m, k), name)

    def __eq__(self, other):
        if not isinstance(other, QuaternaryFunction):
            return NotImplemented
        return self.m == other.m and self.k == other.k and np.array_equal(self.outputs, other.outputs)

    __hash__ = None

    def value(self, inputs) -> tuple[int, ...]:
        return tuple(int(v) for v in self.outputs[digits_to_index(inputs)])

    def column(self, output: int) -> np.ndarray:
        return self.outputs[:, output]

    def level_counts(self, output: int | None = None) -> tuple[int, int, int]:
        """(n, p, s): number of rows equal to 1, 2, 3 (over one or all outputs)"""
        table = self.outputs if output is None else self.outputs[:, output]
        return tuple(int(np.count_nonzero(table == v)) for v in (1, 2, 3))

    def output_names(self) -> tuple[str, ...]:
        if self.k == 1:
            return ("f",)
        return tuple(f"f{i}" for i in range(self.k))


# =============================================================================
# .qtt reader / writer
# =============================================================================

def _digits(token: str, count: int, line: int, column: int, what: str) -> list[int]:
    if len(token) != count:
        raise TruthTableParseError(f"expected {count} {what} digit(s), got {token!r}", line, column)
    out = []
    for offset, ch in enumerate(token):
        if ch == "-":
            raise TruthTableParseError(
                "don't-care '-' is not supported (functions must be completely specified)",
                line, column + offset,
            )
        if ch not in "0123":
            raise TruthTableParseError(f"invalid quaternary digit {ch!r}", line, column + offset)
        out.append(int(ch))
    return out


def parse_qtt(text: str) -> QuaternaryFunction:
    m = k = None
    name = None
    ordered = False
    rows: dict[int, list[int]] = {}
    next_ordered = 0

    for number, raw in enumerate(text.splitlines(), start=1):
        code = raw.split("#", 1)[0]
        matches = list(_TOKEN_RE.finditer(code))
        if not matches:
            continue
        tokens = [mt.group(0) for mt in matches]
        columns = [mt.start() + 1 for mt in matches]

        if tokens[0].startswith("."):
            key = tokens[0]
            if key in (".i", ".o"):
                if len(tokens) != 2 or not tokens[1].isdigit():
                    raise TruthTableParseError(f"{key} takes one non-negative integer", number, columns[0])
                if rows:
                    raise TruthTableParseError(f"{key} must come before the table rows", number, columns[0])
                if key == ".i":
                    m = int(tokens[1])
                else:
                    k = int(tokens[1])
            elif key == ".name":
                if len(tokens) < 2:
                    raise TruthTableParseError(".name needs a value", number, columns[0])
                name = " ".join(tokens[1:])
            elif key == ".ordered":
                ordered = True
            elif key == ".e":
                break
            else:
                raise TruthTableParseError(f"unknown directive {key!r}", number, columns[0])
            continue

        if m is None or k is None:
            raise TruthTableParseError(".i and .o must precede the table rows", number, columns[0])

        if ordered or m == 0:
            if len(tokens) != 1:
                raise TruthTableParseError("ordered rows contain only the output digits", number, columns[0])
            index = next_ordered
            if index >= 4 ** m:
                raise TruthTableParseError(f"more than {4 ** m} rows", number, columns[0])
            next_ordered += 1
            outputs = _digits(tokens[0], k, number, columns[0], "output")
        else:
            if len(tokens) != 2:
                raise TruthTableParseError("expected '<inputs> <outputs>'", number, columns[0])
            inputs = _digits(tokens[0], m, number, columns[0], "input")
            outputs = _digits(tokens[1], k, number, columns[1], "output")
            index = digits_to_index(inputs)
            if index in rows:
                raise TruthTableParseError(f"duplicate row for input {tokens[0]}", number, columns[0])
        rows[index] = outputs

    if m is None or k is None:
        raise TruthTableParseError("missing .i or .o header")
    total = 4 ** m
    if len(rows) != total:
        missing = next(r for r in range(total) if r not in rows)
        label = "".join(str(d) for d in index_to_digits(missing, m))
        raise TruthTableParseError(
            f"incomplete truth table: {len(rows)} of {total} rows, first missing input {label or '(empty)'}"
        )
    table = np.array([rows[r] for r in range(total)], dtype=np.uint8).reshape(total, k)
    return QuaternaryFunction(m, k, table, name)


def format_qtt(f: QuaternaryFunction) -> str:
    """Canonical .qtt text (always with explicit input columns)"""
    lines = [f".i {f.m}", f".o {f.k}"]
    if f.name:
        lines.append(f".name {f.name}")
    inputs = all_input_vectors(f.m)
    for vector, outputs in zip(inputs, f.outputs):
        out = "".join(str(int(v)) for v in outputs)
        if f.m:
            lines.append("".join(str(int(v)) for v in vector) + " " + out)
        else:
            lines.append(out)
    return "\n".join(lines) + "\n"


def read_qtt(path) -> QuaternaryFunction:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_qtt(fh.read())


def write_qtt(path, f: QuaternaryFunction):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_qtt(f))
