import json
from dataclasses import replace
from pathlib import Path

import pytest

from qsynth4.benchmarks import halfadd
from qsynth4.circuit import ShiftGate, append_gate
from qsynth4.cli import EXIT_INPUT_ERROR, EXIT_MISMATCH, EXIT_OK, main
from qsynth4.gf4 import translation
from qsynth4.lowering import gadget_library, parse_gadget_library
from qsynth4.netlist import parse, read_netlist, write_netlist
from qsynth4.simulator import check_function
from qsynth4.truth_table import parse_qtt, write_qtt

SHIPPED = Path(__file__).resolve().parent.parent / "benchmarks"


@pytest.fixture
def table4_file(tmp_path, table4):
    path = tmp_path / "table4.qtt"
    write_qtt(path, table4)
    return path


def test_synth_then_verify(tmp_path, table4_file, capsys):
    out = tmp_path / "table4.qnl"
    assert main(["--quiet", "synth", str(table4_file), "-o", str(out), "--lower"]) == EXIT_OK
    assert "Max ancilla:      28" in capsys.readouterr().out
    assert (tmp_path / "table4.ms.qnl").is_file()

    assert main(["--quiet", "verify", str(out), str(table4_file)]) == EXIT_OK
    assert capsys.readouterr().out.startswith("PASS: 16")
    assert main(["--quiet", "verify", str(tmp_path / "table4.ms.qnl"), str(table4_file)]) == EXIT_OK


def test_verify_reports_a_counterexample(tmp_path, table4_file, capsys):
    out = tmp_path / "table4.qnl"
    main(["--quiet", "synth", str(table4_file), "-o", str(out)])
    circuit = read_netlist(out)
    broken = append_gate(circuit, ShiftGate(circuit.output_wires[0], translation(1)))
    write_netlist(out, broken)
    capsys.readouterr()

    assert main(["--quiet", "verify", str(out), str(table4_file)]) == EXIT_MISMATCH
    assert capsys.readouterr().out.startswith("FAIL: outputs differ at input 00")


def test_verify_fails_when_a_gate_is_removed(tmp_path, table4_file, capsys):
    out = tmp_path / "table4.qnl"
    main(["--quiet", "synth", str(table4_file), "-o", str(out)])
    circuit = read_netlist(out)
    assert circuit.gates[-1].kind.value == "max"
    write_netlist(out, replace(circuit, gates=circuit.gates[:-1]))
    capsys.readouterr()

    # without the final Max the output stays 0, so the first nonzero row differs
    assert main(["--quiet", "verify", str(out), str(table4_file)]) == EXIT_MISMATCH
    assert capsys.readouterr().out.startswith("FAIL: outputs differ at input 01")


def test_synth_writes_the_netlist_to_stdout(table4_file, capsys, table4):
    assert main(["--quiet", "synth", str(table4_file)]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out.startswith(".wires ")
    assert check_function(parse(captured.out), table4).equal
    assert "Max ancilla:      28" in captured.err


def test_json_report(table4_file, capsys):
    assert main(["--quiet", "synth", str(table4_file), "--report", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["name"] == "table4"
    assert data["max_ancilla"] == 28
    assert data["declared_cost"] == data["cost"]
    assert len(data["expressions"]) == 1
    assert data["netlist"].startswith(".wires ")


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.qtt"
    bad.write_text(".i 1\n.o 1\n0 0\n1 4\n2 0\n3 0\n", encoding="utf-8")
    assert main(["--quiet", "synth", str(bad)]) == EXIT_INPUT_ERROR
    assert "line 4, column 3" in capsys.readouterr().err


def test_missing_file_exit_code(tmp_path, capsys):
    assert main(["--quiet", "synth", str(tmp_path / "nope.qtt")]) == EXIT_INPUT_ERROR
    assert capsys.readouterr().err.startswith("Error:")


def test_tt_generator(capsys):
    assert main(["--quiet", "tt", "halfadd"]) == EXIT_OK
    text = capsys.readouterr().out
    assert text.startswith(".i 2\n.o 2\n.name halfadd\n")
    assert parse_qtt(text) == halfadd()


def test_tt_binary_generator_is_packed(tmp_path):
    out = tmp_path / "xor5.qtt"
    assert main(["--quiet", "tt", "xor5", "-o", str(out)]) == EXIT_OK
    assert out.read_text(encoding="utf-8").startswith(".i 3\n.o 1\n")


def test_bench_halfadd(capsys):
    assert main(["--quiet", "bench", "halfadd"]) == EXIT_OK
    row = next(line for line in capsys.readouterr().out.splitlines() if line.startswith("halfadd"))
    assert "46" in row and "114" in row and row.endswith("pass")


def test_bench_json_and_unknown_name(tmp_path, capsys):
    out = tmp_path / "bench.json"
    assert main(["--quiet", "bench", "sum2", "--report", "json", "-o", str(out)]) == EXIT_OK
    rows = json.loads(out.read_text(encoding="utf-8"))
    assert rows[0]["name"] == "sum2"
    assert rows[0]["stats"]["max_ancilla"] == 24
    assert rows[0]["reference"]["cost"] == 8
    assert rows[0]["stats"]["declared_cost"] == 8
    assert rows[0]["stats"]["add_templates"] == {"f": "(a + b) mod 4"}

    assert main(["--quiet", "bench", "ham4"]) == EXIT_INPUT_ERROR
    assert "unknown benchmark" in capsys.readouterr().err


def test_ingest_pla(tmp_path):
    out = tmp_path / "xor5.qtt"
    assert main(["--quiet", "ingest-pla", str(SHIPPED / "xor5.pla"), "-o", str(out)]) == EXIT_OK
    f = parse_qtt(out.read_text(encoding="utf-8"))
    assert (f.m, f.k, f.name) == (3, 1, "xor5")


def test_synth_accepts_pla_input(capsys):
    assert main(["--quiet", "synth", str(SHIPPED / "xor5.pla")]) == EXIT_OK
    assert "Circuit:          xor5" in capsys.readouterr().err


def test_gadgets_export(tmp_path):
    out = tmp_path / "gadgets.qnl"
    assert main(["--quiet", "gadgets", "-o", str(out)]) == EXIT_OK
    parsed = parse_gadget_library(out.read_text(encoding="utf-8"))
    assert len(parsed) == len(gadget_library())


def test_search_ms(capsys):
    assert main(["--quiet", "search", "ms", "--max-gates", "2"]) == EXIT_OK
    text = capsys.readouterr().out
    assert text.startswith(".gadget search-ms\n")
    assert "ms q0 q1 x+1" in text.splitlines()


def test_search_without_result(capsys):
    assert main(["--quiet", "search", "feynman", "--max-gates", "1"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("No realization of feynman")

