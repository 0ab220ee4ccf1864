"""
Shared utilities for qsynth4

- Logging
- Base-4 digit helpers used by the file formats and the simulator
"""

import sys
from datetime import datetime

import numpy as np

from qsynth4 import config

_quiet = config.QUIET
_log_file = config.LOG_FILE


# =============================================================================
# Logging
# =============================================================================

def configure_logging(quiet: bool | None = None, log_file: str | None = None):
    """Override the environment logging settings (used by the CLI)"""
    global _quiet, _log_file
    if quiet is not None:
        _quiet = quiet
    if log_file is not None:
        _log_file = log_file


def log(message):
    """Log a message to stderr and the log file (if configured)"""
    timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
    log_message = f"[{timestamp}] {message}"
    if not _quiet:
        print(log_message, file=sys.stderr)
    if _log_file:
        with open(_log_file, "a", encoding="utf-8") as f:
            f.write(log_message + "\n")


# =============================================================================
# Base-4 helpers
# =============================================================================

def digits_to_index(digits) -> int:
    """Row index of an input vector (first digit most significant)"""
    index = 0
    for d in digits:
        index = index * 4 + int(d)
    return index


def index_to_digits(index: int, width: int) -> tuple[int, ...]:
    """Inverse of digits_to_index"""
    out = [0] * width
    for k in range(width - 1, -1, -1):
        out[k] = index % 4
        index //= 4
    return tuple(out)


def all_input_vectors(width: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """
    Input vectors in lexicographic order as a (rows, width) uint8 array.

    Args:
        width: number of quaternary digits
        start, stop: optional row range (for chunked sweeps)
    """
    if stop is None:
        stop = 4 ** width
    idx = np.arange(start, stop, dtype=np.int64)
    powers = 4 ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return ((idx[:, None] // powers[None, :]) % 4).astype(np.uint8)
