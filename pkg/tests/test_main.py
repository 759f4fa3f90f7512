import csv
import io
import json

import pytest

from main import DeltaApp
from utils.textgen import GenSpec, generate

from conftest import EXAMPLE_WORD, FIG_WORD


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    status = DeltaApp(argv, stdout=out, stderr=err).run()
    return status, out.getvalue(), err.getvalue()


@pytest.fixture
def word_file(tmp_path, isolated_config):
    path = tmp_path / "word.txt"
    path.write_bytes(EXAMPLE_WORD)
    return path


def test_csv_records(word_file):
    status, out, err = run_cli([str(word_file), "--engine", "amortized", "--emit-every", "1", "--format", "csv"])
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 11
    assert (rows[-1]["delta_num"], rows[-1]["delta_den"]) == ("2", "1")
    assert float(rows[-1]["delta_float"]) == 2.0
    assert out.splitlines()[0] == "i,delta_num,delta_den,delta_float,maximizing_length,alpha,step_kind"
    summary = json.loads(err.strip().splitlines()[-1])
    assert summary["delta"] == "2/1"
    assert summary["n"] == 11


def test_jsonl_matches_csv(word_file):
    _, csv_out, _ = run_cli([str(word_file)])
    _, jsonl_out, _ = run_cli([str(word_file), "--format", "jsonl"])
    rows = list(csv.DictReader(io.StringIO(csv_out)))
    records = [json.loads(line) for line in jsonl_out.splitlines()]
    assert len(rows) == len(records)
    for row, record in zip(rows, records):
        assert {k: str(v) for k, v in record.items()} == row


@pytest.mark.parametrize("engine", ["worstcase", "oracle"])
def test_engines_print_the_same_records(word_file, engine):
    _, reference, _ = run_cli([str(word_file)])
    _, other, _ = run_cli([str(word_file), "--engine", engine])
    assert other == reference


def test_emit_every(word_file):
    _, out, _ = run_cli([str(word_file), "--emit-every", "4"])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [row["i"] for row in rows] == ["4", "8", "11"]


def test_snapshot(tmp_path, isolated_config):
    path = tmp_path / "fig.txt"
    path.write_bytes(FIG_WORD)
    status, _, _ = run_cli([str(path), "--snapshot-at", "33", "--snapshot-dir", str(tmp_path / "snaps")])
    assert status == 0
    files = list((tmp_path / "snaps").iterdir())
    assert len(files) == 1
    snapshot = json.loads(files[0].read_text())
    assert snapshot["delta"] == "20/7"
    assert snapshot["tangency_k"] == 7
    assert snapshot["R"] == 10
    assert [7, 20] in snapshot["points"]


def test_oracle_cap_from_env(tmp_path, isolated_config, monkeypatch):
    monkeypatch.setenv("DELTA_ORACLE_CAP", "100")
    path = tmp_path / "long.bin"
    path.write_bytes(generate(GenSpec(length=200, seed=1)))
    status, out, err = run_cli([str(path), "--engine", "oracle"])
    assert status == 3
    assert out == ""
    assert "capped" in err


@pytest.mark.slow
def test_oracle_default_cap(tmp_path, isolated_config):
    path = tmp_path / "long.bin"
    path.write_bytes(generate(GenSpec(length=10000, seed=1)))
    status, _, err = run_cli([str(path), "--engine", "oracle", "--emit-every", "1000"])
    assert status == 3
    assert "5000" in err


def test_missing_file(tmp_path, isolated_config):
    status, out, err = run_cli([str(tmp_path / "nope.txt")])
    assert status == 2
    assert "cannot read" in err


def test_empty_file(tmp_path, isolated_config):
    path = tmp_path / "empty.txt"
    path.write_bytes(b"")
    status, _, _ = run_cli([str(path)])
    assert status == 1


@pytest.mark.parametrize("argv", [
    ["--emit-every", "0"],
    ["--engine", "quick"],
    ["--no-such-flag"],
    ["--snapshot-at", "x"],
])
def test_usage_errors(word_file, argv):
    status, _, err = run_cli([str(word_file)] + argv)
    assert status == 1
    assert err.startswith("delta")


def test_strip_newlines(tmp_path, isolated_config):
    path = tmp_path / "lines.txt"
    path.write_bytes(b"abaab\nbabbab\n")
    _, out, _ = run_cli([str(path), "--strip-newlines"])
    assert len(out.splitlines()) == 12


def test_check_mode(word_file):
    status, _, _ = run_cli([str(word_file), "--check", "--engine", "worstcase"])
    assert status == 0


def test_stats_in_summary(word_file):
    _, _, err = run_cli([str(word_file), "--stats"])
    summary = json.loads(err.strip().splitlines()[-1])
    assert "pops" in summary["counters"]
    assert summary["counters"]["suffix_tree_steps"] >= 11
    assert summary["pullbacks"]["i"] == 11


def test_gen_to_file(tmp_path, isolated_config):
    out_path = tmp_path / "fib.txt"
    status, _, _ = run_cli(["gen", "--kind", "fibonacci", "--length", "8", "--output", str(out_path)])
    assert status == 0
    assert out_path.read_bytes() == b"abaababa"


def test_gen_bad_spec(isolated_config):
    status, _, _ = run_cli(["gen", "--kind", "random", "--length", "0"])
    assert status == 1


def test_bench_small_sizes(isolated_config):
    status, out, _ = run_cli(["--bench", "--bench-sizes", "256,512", "--engine", "worstcase"])
    assert status == 0
    report = json.loads(out)
    assert [run["n"] for run in report["runs"]] == [256, 512]
    assert len(report["doubling_ratios"]) == 1
    assert all(run["pullback_distance_within_n"] for run in report["runs"])
    assert report["runs"][0]["counters"]["max_nodes_touched"] <= 2 * 9 + 4


def test_view_needs_input(isolated_config):
    status, _, _ = run_cli(["view"])
    assert status == 1
