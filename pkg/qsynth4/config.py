"""
Configuration for qsynth4

Values come from the environment (optionally a .env file in the working
directory). Nothing is required; every setting has a default.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Repository root (parent of qsynth4/)
PROJECT_ROOT = Path(__file__).resolve().parent.parent


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() in ("1", "true", "yes", "on")


# =============================================================================
# Settings
# =============================================================================

LOG_FILE = os.environ.get("QSYNTH4_LOG_FILE") or None
QUIET = _env_flag("QSYNTH4_QUIET")

BENCH_DIR = Path(os.environ.get("QSYNTH4_BENCH_DIR") or PROJECT_ROOT / "benchmarks")

SAMPLED_VECTORS = _env_int("QSYNTH4_SAMPLES", 4096)
SAMPLE_SEED = _env_int("QSYNTH4_SEED", 2024)
SWEEP_CHUNK = _env_int("QSYNTH4_SWEEP_CHUNK", 65536)

# 4**12 input vectors is the largest exhaustive sweep
EXHAUSTIVE_INPUT_LIMIT = 12
