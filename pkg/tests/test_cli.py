import csv
import io
import json
import subprocess
import sys

import pytest

from zerodim.cli import run
from zerodim.golden import CODEWORDS_4, DVECTORS_4


def call(*argv):
    out = io.StringIO()
    status = run(list(argv), out)
    return status, out.getvalue()


def test_zdim_t0_plain():
    assert call("zdim-t0", "8") == (0, "60075185\n")


def test_stirling_one():
    assert call("stirling", "1") == (0, "1\n")


def test_stirling_row():
    assert call("stirling", "4") == (0, "1 7 6 1\n")


def test_zdim_nine():
    assert call("zdim", "9") == (0, "7321773414\n")


@pytest.mark.parametrize("algorithm", ["iterative", "recursive", "parallel"])
def test_formats_agree(algorithm):
    _, plain = call("zdim-t0", "12", "--algorithm", algorithm)
    _, js = call("zdim-t0", "12", "--algorithm", algorithm, "--format", "json")
    _, cs = call("zdim-t0", "12", "--algorithm", algorithm, "--format", "csv")
    record = json.loads(js)
    row = next(csv.DictReader(io.StringIO(cs)))
    assert plain.strip() == record["value"] == row["value"] == "17735173202222665"
    assert set(record) >= {"n", "value", "algorithm", "depth", "elapsed_seconds"}
    assert record["algorithm"] == algorithm
    assert isinstance(record["value"], str)


def test_json_parallel_fields():
    _, js = call("zdim-t0", "10", "--algorithm", "parallel", "--depth", "4",
                 "--threads", "3", "--format", "json")
    record = json.loads(js)
    assert (record["n"], record["depth"], record["workers"]) == (10, 4, 3)
    assert record["value"] == "493489876721"


def test_zdim_parallel_and_python_backend():
    assert call("zdim", "6", "--algorithm", "parallel", "--depth", "9") == (0, "75606\n")
    assert call("zdim-t0", "7", "--backend", "python") == (0, "1214256\n")


def test_partitions_codewords_match_table():
    status, text = call("partitions", "4", "--algorithm", "iterative", "--emit", "codewords")
    expected = "".join("(" + ",".join(map(str, c)) + ")\n" for c in CODEWORDS_4)
    assert status == 0 and text == expected


def test_partitions_dvectors():
    _, text = call("partitions", "4", "--emit", "dvectors")
    assert text.splitlines()[0] == "(4,0,0,0)"
    assert len(text.splitlines()) == 15
    _, text = call("partitions", "4", "--emit", "dvectors", "--algorithm", "recursive")
    assert sorted(text.splitlines()) == sorted(
        "(" + ",".join(map(str, d)) + ")" for d in DVECTORS_4
    )


def test_partitions_recursive_codewords():
    _, text = call("partitions", "4", "--algorithm", "recursive")
    assert sorted(text.splitlines()) == sorted(
        "(" + ",".join(map(str, c)) + ")" for c in CODEWORDS_4
    )


def test_ord_tables():
    _, text = call("ord")
    lines = text.splitlines()
    assert len(lines) == 18 and lines[3] == "4 219"
    _, text = call("ord", "--star")
    lines = text.splitlines()
    assert len(lines) == 19 and lines[4] == "5 1095"
    _, js = call("ord", "--format", "json")
    assert json.loads(js)["values"]["18"] == "241939392597201176602897820148085023"


def test_verify_passes():
    status, text = call("verify")
    assert status == 0
    assert "FAIL" not in text
    assert text.strip().endswith("19/19 checks passed")


def test_verify_max_n():
    status, text = call("verify", "--max-n", "3")
    assert status == 0 and "12/12 checks passed" in text


def test_bench_csv():
    status, text = call("bench", "--n", "10", "--depths", "0,3", "--repeats", "2", "--threads", "2")
    lines = text.splitlines()
    assert status == 0
    assert lines[0] == "depth,run,seconds,value"
    assert len(lines) == 5 and all(l.endswith(",493489876721") for l in lines[1:])


@pytest.mark.parametrize("argv", [["zdim-t0", "20"], ["zdim", "25"]])
def test_domain_errors_exit_nonzero(argv, capsys):
    status, out = call(*argv)
    assert status != 0 and out == ""
    assert "ORD" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["zdim-t0", "0"],
        ["zdim-t0", "x"],
        ["zdim-t0", "5", "--threads", "0"],
        ["zdim-t0", "5", "--algorithm", "magic"],
        ["zdim-t0", "5", "--format", "xml"],
        ["partitions", "3", "--emit", "blocks"],
    ],
)
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        run(argv, io.StringIO())
    assert exc.value.code != 0


def test_bad_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("ZERODIM_THREADS", "lots")
    status, _ = call("zdim-t0", "6", "--algorithm", "parallel")
    assert status == 1
    assert "ZERODIM_THREADS" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zerodim", "zdim-t0", "5", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["value"] == "1826"
