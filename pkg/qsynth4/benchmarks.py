"""
Benchmark functions and published comparison values

- Built-in quaternary generators: halfadd, fulladd, sum2, mul2
- Binary generators for the PLA files shipped in benchmarks/: xor5, rd53, rd73
- ham3 has no shipped encoding; its row is skipped unless ham3.pla exists in
  QSYNTH4_BENCH_DIR
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from qsynth4 import config
from qsynth4.gf4 import gf4_mul
from qsynth4.pla import BinaryTable, pack, read_pla
from qsynth4.truth_table import QuaternaryFunction


# =============================================================================
# Generators
# =============================================================================

def halfadd() -> QuaternaryFunction:
    """(a + b) mod 4 and the carry out"""
    return QuaternaryFunction.from_callable(2, 2, lambda a, b: ((a + b) % 4, int(a + b >= 4)), "halfadd")


def fulladd() -> QuaternaryFunction:
    """
    Quaternary full adder with a carry-in qudit.

    cin is 0 or 1; rows with cin in {2, 3} are not carries and output (0, 0).
    """
    def add(a, b, cin):
        if cin > 1:
            return (0, 0)
        total = a + b + cin
        return (total % 4, int(total >= 4))

    return QuaternaryFunction.from_callable(3, 2, add, "fulladd")


def sum2() -> QuaternaryFunction:
    return QuaternaryFunction.from_callable(2, 1, lambda a, b: (a + b) % 4, "sum2")


def mul2() -> QuaternaryFunction:
    """GF(4) product"""
    return QuaternaryFunction.from_callable(2, 1, gf4_mul, "mul2")


QUATERNARY_GENERATORS: dict[str, Callable[[], QuaternaryFunction]] = {
    "halfadd": halfadd,
    "fulladd": fulladd,
    "sum2": sum2,
    "mul2": mul2,
}


def xor5() -> BinaryTable:
    return BinaryTable.from_callable(5, 1, lambda *bits: (sum(bits) % 2,), "xor5")


def _ones_count(n_in: int, name: str) -> BinaryTable:
    """rd-style function: number of ones as a 3-bit binary number"""
    return BinaryTable.from_callable(
        n_in, 3, lambda *bits: tuple((sum(bits) >> s) & 1 for s in (2, 1, 0)), name
    )


def rd53() -> BinaryTable:
    return _ones_count(5, "rd53")


def rd73() -> BinaryTable:
    return _ones_count(7, "rd73")


BINARY_GENERATORS: dict[str, Callable[[], BinaryTable]] = {
    "xor5": xor5,
    "rd53": rd53,
    "rd73": rd73,
}


# =============================================================================
# Benchmark table
# =============================================================================

@dataclass(frozen=True)
class ReferenceRow:
    """Published values; None where the comparison column is empty"""

    max_ancilla: int
    reduced_ancilla: int
    levels: int
    cost: int
    prior_levels: int | None = None
    prior_cost: int | None = None


REFERENCE_ROWS = {
    "halfadd": ReferenceRow(36, 6, 6, 46, 23, 114),
    "fulladd": ReferenceRow(120, 17, 17, 128, 40, 304),
    "sum2": ReferenceRow(24, 0, 4, 8),
    "mul2": ReferenceRow(16, 5, 5, 40),
    "ham3": ReferenceRow(135, 95, 25, 135),
    "rd53": ReferenceRow(275, 245, 15, 120),
    "rd73": ReferenceRow(475, 435, 35, 280),
    "xor5": ReferenceRow(150, 120, 7, 56),
}


@dataclass(frozen=True)
class BenchmarkSpec:
    """
    One row of the benchmark table.

    Attributes:
        name: benchmark name
        source: "generator" or "file"
        encoding: "quaternary" or "binary" (binary files are packed in bit pairs)
        reference: published values for comparison
        reference_only: the published row used an unknown encoding
    """

    name: str
    source: str
    encoding: str
    reference: ReferenceRow
    reference_only: bool = False

    @property
    def path(self) -> Path | None:
        if self.source != "file":
            return None
        return config.BENCH_DIR / f"{self.name}.pla"

    def available(self) -> bool:
        return self.source == "generator" or self.path.is_file()

    def load(self) -> QuaternaryFunction:
        if self.source == "generator":
            return QUATERNARY_GENERATORS[self.name]()
        return pack(read_pla(self.path), self.name)


BENCHMARKS: dict[str, BenchmarkSpec] = {
    name: BenchmarkSpec(name, "generator", "quaternary", REFERENCE_ROWS[name])
    for name in QUATERNARY_GENERATORS
}
BENCHMARKS.update({
    name: BenchmarkSpec(name, "file", "binary", REFERENCE_ROWS[name], reference_only=True)
    for name in ("xor5", "rd53", "rd73", "ham3")
})
