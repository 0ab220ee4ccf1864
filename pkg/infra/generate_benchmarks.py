#!/usr/bin/env python3
"""
Regenerate the binary benchmark PLA files

Targets:
- benchmarks/xor5.pla - 5-input parity
- benchmarks/rd53.pla - number of ones among 5 inputs (3 output bits)
- benchmarks/rd73.pla - number of ones among 7 inputs (3 output bits)

Usage:
    uv run infra/generate_benchmarks.py [--out DIR] [--check]
"""

import argparse
import sys
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO_ROOT))

from qsynth4 import config  # noqa: E402
from qsynth4.benchmarks import BINARY_GENERATORS  # noqa: E402
from qsynth4.pla import format_pla  # noqa: E402
from qsynth4.utils import log  # noqa: E402


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Write the binary benchmark PLA files")
    parser.add_argument("--out", default=str(config.BENCH_DIR), help=f"Output directory (default: {config.BENCH_DIR})")
    parser.add_argument("--check", action="store_true", help="Only report files that differ from the generators")
    args = parser.parse_args(argv)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    stale = 0
    for name, generate in BINARY_GENERATORS.items():
        path = out_dir / f"{name}.pla"
        text = format_pla(generate())
        current = path.read_text(encoding="utf-8") if path.exists() else None
        if current == text:
            log(f"{path}: up to date")
            continue
        if args.check:
            log(f"{path}: differs from generator")
            stale += 1
            continue
        path.write_text(text, encoding="utf-8")
        log(f"{path}: written")
    return 1 if stale else 0


if __name__ == "__main__":
    sys.exit(main())
