from pathlib import Path

import pytest

from qsynth4 import config
from qsynth4.benchmarks import (
    BENCHMARKS,
    BINARY_GENERATORS,
    QUATERNARY_GENERATORS,
    REFERENCE_ROWS,
    fulladd,
    halfadd,
    mul2,
)
from qsynth4.gf4 import gf4_mul
from qsynth4.pla import format_pla, pack, read_pla

SHIPPED = Path(__file__).resolve().parent.parent / "benchmarks"


@pytest.mark.parametrize("name", list(QUATERNARY_GENERATORS))
def test_quaternary_generators_are_pure(name):
    generate = QUATERNARY_GENERATORS[name]
    assert generate() == generate()
    assert generate().name == name


@pytest.mark.parametrize("name", list(BINARY_GENERATORS))
def test_shipped_pla_files_match_generators(name):
    path = SHIPPED / f"{name}.pla"
    assert path.read_text(encoding="utf-8") == format_pla(BINARY_GENERATORS[name]())


def test_adders():
    assert halfadd().value((3, 2)) == (1, 1)
    assert halfadd().value((1, 2)) == (3, 0)
    assert fulladd().value((3, 3, 1)) == (3, 1)
    assert fulladd().value((3, 3, 2)) == (0, 0)
    assert fulladd().value((2, 1, 0)) == (3, 0)


def test_mul2_is_the_field_product():
    f = mul2()
    for a in range(4):
        for b in range(4):
            assert f.value((a, b)) == (gf4_mul(a, b),)


def test_reference_rows():
    halfadd_row = REFERENCE_ROWS["halfadd"]
    assert (halfadd_row.max_ancilla, halfadd_row.cost, halfadd_row.prior_cost) == (36, 46, 114)
    assert REFERENCE_ROWS["fulladd"].prior_levels == 40
    assert REFERENCE_ROWS["xor5"].prior_cost is None


def test_benchmark_table_order_and_sources():
    assert list(BENCHMARKS) == ["halfadd", "fulladd", "sum2", "mul2", "xor5", "rd53", "rd73", "ham3"]
    assert all(BENCHMARKS[n].reference_only for n in ("xor5", "rd53", "rd73", "ham3"))
    assert BENCHMARKS["halfadd"].path is None


def test_file_benchmarks_follow_the_bench_dir(monkeypatch, tmp_path):
    monkeypatch.setattr(config, "BENCH_DIR", tmp_path)
    assert not BENCHMARKS["xor5"].available()
    assert BENCHMARKS["halfadd"].available()

    monkeypatch.setattr(config, "BENCH_DIR", SHIPPED)
    assert BENCHMARKS["xor5"].available()
    assert not BENCHMARKS["ham3"].available()
    f = BENCHMARKS["rd53"].load()
    assert f == pack(read_pla(SHIPPED / "rd53.pla"))
    assert f.name == "rd53"
