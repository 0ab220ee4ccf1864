#!/usr/bin/env python3
"""
qsynth4 - quaternary logic synthesis from the command line

Usage:
    qsynth4 synth table4.qtt -o table4.qnl --lower
    qsynth4 verify table4.qnl table4.qtt
    qsynth4 bench [halfadd fulladd ...] [--report json]
    qsynth4 tt halfadd -o halfadd.qtt
    qsynth4 ingest-pla benchmarks/rd53.pla -o rd53.qtt
    qsynth4 gadgets -o gadgets.qnl
    qsynth4 search feynman --max-gates 5

Exit status: 0 success, 1 verification failure, 2 input error.
"""

import argparse
import sys
from pathlib import Path

from qsynth4.benchmarks import BENCHMARKS, BINARY_GENERATORS, QUATERNARY_GENERATORS
from qsynth4.circuit import DECLARED_COST_MODEL, AddGate, FeynmanGate, MSGate
from qsynth4.errors import (
    CircuitError,
    Gf4Error,
    ParseError,
    Qsynth4Error,
    SimulationError,
)
from qsynth4.gf4 import translation
from qsynth4.lowering import Gadget, export_gadget_library, gadget_library
from qsynth4.netlist import read_netlist, serialize
from qsynth4.pla import ingest_pla, pack
from qsynth4.report import BenchRow, format_bench_table, format_stats, to_json
from qsynth4.search import gate_permutation, search_decomposition
from qsynth4.simulator import check_function
from qsynth4.synthesizer import synth
from qsynth4.truth_table import QuaternaryFunction, format_qtt, read_qtt
from qsynth4.utils import configure_logging, log

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT_ERROR = 2

SEARCH_TARGETS = {
    "feynman": FeynmanGate(0, 1),
    "add": AddGate(0, 1),
    "ms": MSGate(0, 1, translation(1)),
}


def load_function(path: str) -> QuaternaryFunction:
    """Read a .qtt table, or a .pla file packed into qudits"""
    p = Path(path)
    if p.suffix.lower() == ".pla":
        return ingest_pla(p.read_text(encoding="utf-8"), p.stem)
    f = read_qtt(p)
    if f.name is None:
        f = QuaternaryFunction(f.m, f.k, f.outputs, p.stem)
    return f


def _emit(text: str, output: str | None):
    """Write text to a file, or to stdout when no file is given"""
    if output:
        Path(output).write_text(text, encoding="utf-8")
        log(f"Wrote {output}")
    else:
        sys.stdout.write(text)


# =============================================================================
# Commands
# =============================================================================

def cmd_synth(args) -> int:
    f = load_function(args.input)
    result = synth(f, lower=args.lower)
    names = f.output_names()
    if args.output:
        _emit(serialize(result.circuit), args.output)
        if result.lowered is not None:
            _emit(serialize(result.lowered), str(Path(args.output).with_suffix(".ms.qnl")))
    if args.report == "json":
        data = result.stats.to_dict()
        data["expressions"] = [
            str(e) if e is not None else result.stats.add_templates[name]
            for e, name in zip(result.expressions, names)
        ]
        if not args.output:
            data["netlist"] = serialize(result.circuit)
        sys.stdout.write(to_json(data))
    elif args.output:
        sys.stdout.write(format_stats(result.stats))
    else:
        # stdout carries the netlist, so the report moves to stderr
        sys.stdout.write(serialize(result.circuit))
        sys.stderr.write(format_stats(result.stats))
        if result.lowered is not None:
            log("Lowered netlist not written: pass -o to save it next to the macro netlist")
    return EXIT_OK


def cmd_verify(args) -> int:
    circuit = read_netlist(args.netlist)
    f = load_function(args.table)
    verdict = check_function(circuit, f)
    if verdict.equal:
        print(f"PASS: {verdict.vectors_checked} input vector(s) match")
        return EXIT_OK
    digits = "".join(str(d) for d in verdict.counterexample)
    print(f"FAIL: outputs differ at input {digits}")
    return EXIT_MISMATCH


def cmd_bench(args) -> int:
    names = args.names or list(BENCHMARKS)
    unknown = [n for n in names if n not in BENCHMARKS]
    if unknown:
        raise ParseError(f"unknown benchmark(s): {', '.join(unknown)} (known: {', '.join(BENCHMARKS)})")

    rows = []
    for name in names:
        spec = BENCHMARKS[name]
        if not spec.available():
            log(f"Skipping {name}: {spec.path} not found")
            rows.append(BenchRow(name, "skipped", spec.reference, spec.reference_only, note=f"{spec.path} not found"))
            continue
        try:
            result = synth(spec.load(), lower=True)
        except Qsynth4Error as e:
            log(f"Benchmark {name} failed: {e}")
            rows.append(BenchRow(name, "error", spec.reference, spec.reference_only, note=str(e)))
            continue
        rows.append(BenchRow(name, "pass", spec.reference, spec.reference_only, result.stats))

    if args.report == "json":
        _emit(to_json([row.to_dict() for row in rows]), args.output)
    else:
        color = args.output is None and sys.stdout.isatty()
        _emit(format_bench_table(rows, color=color), args.output)
    failed = [row for row in rows if row.status in ("fail", "error")]
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_tt(args) -> int:
    if args.generator in QUATERNARY_GENERATORS:
        f = QUATERNARY_GENERATORS[args.generator]()
    else:
        f = pack(BINARY_GENERATORS[args.generator]())
    _emit(format_qtt(f), args.output)
    return EXIT_OK


def cmd_ingest_pla(args) -> int:
    p = Path(args.file)
    f = ingest_pla(p.read_text(encoding="utf-8"), p.stem)
    _emit(format_qtt(f), args.output)
    return EXIT_OK


def cmd_gadgets(args) -> int:
    gadgets = gadget_library()
    log(f"Exporting {len(gadgets)} gadgets")
    _emit(export_gadget_library(gadgets), args.output)
    return EXIT_OK


def cmd_search(args) -> int:
    pattern = SEARCH_TARGETS[args.gate]
    result = search_decomposition(gate_permutation([pattern], 2), args.max_gates)
    if result is None:
        print(f"No realization of {args.gate} with at most {args.max_gates} gates")
        return EXIT_OK
    log(f"Found {len(result)} gate(s) ({result.forward_states} forward / {result.backward_states} backward states)")
    gadget = Gadget(f"search-{args.gate}", pattern, result.gates, DECLARED_COST_MODEL.cost_of(pattern.kind))
    _emit(export_gadget_library([gadget]), args.output)
    return EXIT_OK


# =============================================================================
# Entry point
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsynth4",
        description="Synthesis of quaternary (GF(4)) circuits from truth tables",
    )
    parser.add_argument("--quiet", action="store_true", help="Do not log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="Synthesize a .qtt or .pla truth table")
    p.add_argument("input", help="Truth table (.qtt, or .pla packed in bit pairs)")
    p.add_argument("-o", "--output", help="Netlist file to write (default: netlist on stdout, report on stderr)")
    p.add_argument("--lower", action="store_true", help="Also decompose to M-S level (<output>.ms.qnl)")
    p.add_argument("--report", choices=["text", "json"], default="text", help="Report format (default: text)")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="Check a netlist against a truth table")
    p.add_argument("netlist")
    p.add_argument("table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="Run the benchmark table")
    p.add_argument("names", nargs="*", help=f"Benchmarks (default: all of {', '.join(BENCHMARKS)})")
    p.add_argument("--report", choices=["text", "json"], default="text")
    p.add_argument("-o", "--output", help="Write the table to a file")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("tt", help="Write the truth table of a built-in generator")
    p.add_argument("generator", choices=[*QUATERNARY_GENERATORS, *BINARY_GENERATORS])
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_tt)

    p = sub.add_parser("ingest-pla", help="Pack a binary PLA file into a .qtt table")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_ingest_pla)

    p = sub.add_parser("gadgets", help="Export the M-S gadget library")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gadgets)

    p = sub.add_parser("search", help="Search a short M-S realization of a 2-qudit gate")
    p.add_argument("gate", choices=list(SEARCH_TARGETS))
    p.add_argument("--max-gates", type=int, default=5, help="Search bound (default: 5, at most 6)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.quiet:
        configure_logging(quiet=True)

    try:
        return args.func(args)
    except (ParseError, SimulationError, CircuitError, Gf4Error) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except Qsynth4Error as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
