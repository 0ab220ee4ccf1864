import numpy as np
import pytest

from qsynth4.benchmarks import rd53, xor5
from qsynth4.errors import PlaParseError
from qsynth4.pla import (
    BinaryTable,
    format_pla,
    ingest_pla,
    pack,
    parse_pla,
    qudits_for,
    read_pla,
    unpack,
    write_pla,
)

XOR2 = """\
# two-input parity
.i 2
.o 1
.ilb a b
.ob y
.p 4
11 0
01 1
10 1
00 0
.e
"""


def test_parse_xor2():
    table = parse_pla(XOR2)
    assert table.bits[:, 0].tolist() == [0, 1, 1, 0]
    assert table.input_labels == ("a", "b")
    assert table.output_labels == ("y",)


def test_format_round_trip():
    table = parse_pla(XOR2)
    text = format_pla(table)
    assert text.splitlines()[:4] == [".i 2", ".o 1", ".ilb a b", ".ob y"]
    assert parse_pla(text) == table


def test_cube_expansion_and_unlisted_rows():
    table = parse_pla(".i 3\n.o 1\n1-1 1\n.e\n")
    assert np.flatnonzero(table.bits[:, 0]).tolist() == [5, 7]


def test_fr_conflict():
    with pytest.raises(PlaParseError, match="both 0 and 1"):
        parse_pla(".i 1\n.o 1\n.type fr\n- 1\n0 0\n")


def test_empty_file():
    with pytest.raises(PlaParseError, match="missing .i or .o header"):
        parse_pla("")


def test_dont_care_output_rejected():
    with pytest.raises(PlaParseError) as info:
        parse_pla(".i 2\n.o 2\n00 1-\n")
    assert (info.value.line, info.value.column) == (3, 5)


@pytest.mark.parametrize("text", [
    ".i 2\n.o 1\n.type fd\n",
    ".i 2\n.o 1\n0x 1\n",
    ".i 2\n.o 1\n.p 3\n00 1\n",
    "00 1\n",
])
def test_malformed_input(text):
    with pytest.raises(PlaParseError):
        parse_pla(text)


def test_pack_xor2():
    f = pack(parse_pla(XOR2), "xor2")
    assert (f.m, f.k, f.name) == (1, 1, "xor2")
    assert f.column(0).tolist() == [0, 1, 1, 0]


def test_pack_pads_the_most_significant_side():
    f = pack(xor5())
    assert (f.m, f.k) == (3, 1)
    assert f.value((1, 0, 0)) == (1,)
    assert f.value((2, 0, 0)) == (0,)
    assert f.value((3, 3, 3)) == (1,)


def test_pack_multi_bit_outputs():
    f = pack(rd53())
    assert (f.m, f.k) == (3, 2)
    assert f.value((3, 3, 3)) == (1, 1)
    assert f.value((0, 0, 0)) == (0, 0)
    assert f.value((0, 1, 2)) == (0, 2)


def test_unpack_inverts_pack():
    table = rd53()
    assert unpack(pack(table), table.n_in, table.n_out) == table
    with pytest.raises(PlaParseError):
        unpack(pack(table), 4, 3)


def test_qudits_for():
    assert [qudits_for(b) for b in range(6)] == [0, 1, 1, 2, 2, 3]


def test_ingest_and_file_helpers(tmp_path):
    path = tmp_path / "x.pla"
    write_pla(path, xor5())
    assert read_pla(path) == xor5()
    f = ingest_pla(path.read_text(encoding="utf-8"), "x")
    assert f == pack(xor5())
    assert f.name == "x"


def test_entries_must_be_bits():
    with pytest.raises(PlaParseError):
        BinaryTable(1, 1, np.array([0, 2]))
