"""
Exception hierarchy for qsynth4

Every error raised on purpose by the library derives from Qsynth4Error, so the
CLI can map families of failures onto its exit codes.
"""


class Qsynth4Error(Exception):
    """Base class for all qsynth4 errors"""


class Gf4Error(Qsynth4Error, ValueError):
    """Digit out of range, unknown shift symbol or invalid permutation"""


class CircuitError(Qsynth4Error):
    """Invalid wire reference, duplicate wires or unknown gate kind"""


class ParseError(Qsynth4Error):
    """Malformed text input, located by line and column (both 1-based)"""

    def __init__(self, cause: str, line: int | None = None, column: int | None = None):
        self.cause = cause
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(f"{where}{cause}")


class NetlistParseError(ParseError):
    pass


class TruthTableParseError(ParseError):
    pass


class PlaParseError(ParseError):
    pass


class SimulationError(Qsynth4Error):
    """Missing input assignment, arity mismatch or sweep too large"""


class SynthesisError(Qsynth4Error):
    """Synthesized circuit failed its own verification (internal error)"""


class LoweringError(Qsynth4Error):
    """A macro gate could not be decomposed to M-S level"""


class ExpressionError(Qsynth4Error):
    """Unbound variable or malformed sum-of-products expression"""
