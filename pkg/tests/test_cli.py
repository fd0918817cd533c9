from __future__ import annotations

import json
import pathlib
import subprocess
import sys

import pytest

from torsorcount.cli import COLUMNS, main

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_csv_matches_golden_file(capsys):
    code, out, _ = run(["count", "--q", "2", "--nmax", "6", "--method", "all"], capsys)
    assert code == 0
    assert out == (GOLDEN / "count_q2_n6_all.csv").read_text(encoding="utf-8")


def test_csv_schema_frozen(capsys):
    _, out, _ = run(["count", "--q", "3", "--nmax", "2"], capsys)
    lines = out.splitlines()
    assert lines[0] == "n,method,count,predicted,ratio,seconds"
    assert COLUMNS == ("n", "method", "count", "predicted", "ratio", "seconds")
    assert all(len(line.split(",")) == 6 for line in lines)
    assert "\r" not in out and '"' not in out


@pytest.mark.parametrize("method", ["torsor", "geometric", "moebius", "all"])
def test_output_identical_across_thread_counts(method, capsys):
    base = ["count", "--q", "2", "--nmax", "6", "--method", method]
    _, one, _ = run(base + ["--threads", "1"], capsys)
    _, three, _ = run(base + ["--threads", "3"], capsys)
    assert one == three


def test_all_methods_at_degree_zero(capsys):
    code, out, _ = run(["count", "--q", "3", "--nmax", "0", "--method", "all"], capsys)
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:]]
    assert [(r[1], r[2]) for r in rows] == [("torsor", "2"), ("geometric", "2"), ("moebius", "2")]


def test_degree_one_row_is_zero(capsys):
    _, out, _ = run(["count", "--q", "2", "--nmax", "1"], capsys)
    assert out.splitlines()[2].split(",")[:3] == ["1", "torsor", "0"]


def test_json_output(capsys, tmp_path):
    target = tmp_path / "t.json"
    code, out, _ = run(["count", "--q", "2", "--nmax", "4", "--format", "json", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    rows = json.loads(target.read_text())
    assert [set(r) for r in rows] == [set(COLUMNS)] * 5
    assert [r["count"] for r in rows] == [0, 0, 18, 0, 144]
    assert rows[0]["predicted"] is None and rows[0]["seconds"] is None


def test_timing_fills_seconds(capsys):
    _, out, _ = run(["count", "--q", "2", "--nmax", "2", "--timing"], capsys)
    assert all(line.split(",")[5] for line in out.splitlines()[1:])


@pytest.mark.parametrize("argv", [
    ["count", "--q", "x", "--nmax", "2"],
    ["count", "--q", "7", "--nmax", "2"],
    ["count", "--q", "2"],
    ["count", "--q", "2", "--nmax", "2", "--method", "other"],
    ["count", "--q", "2", "--nmax", "15"],
    ["count", "--q", "2", "--nmax", "2", "--threads", "0"],
    ["verify", "--suite", "nothing"],
    [],
])
def test_usage_errors_exit_two(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert err and not out


def test_budget_override(capsys):
    code, out, _ = run(["count", "--q", "5", "--nmax", "6", "--budget", "6", "--method", "geometric"], capsys)
    assert code == 0
    assert len(out.splitlines()) == 8


def test_mismatch_exits_one(monkeypatch, capsys):
    from torsorcount import cli
    from torsorcount.heights import CountRecord

    def broken(q, n_max, threads=1, budget=None):
        return [CountRecord(n, 99, "geometric") for n in range(n_max + 1)]

    monkeypatch.setitem(cli._COUNTERS, "geometric", broken)
    code, _, err = run(["count", "--q", "2", "--nmax", "2", "--method", "all"], capsys)
    assert code == 1
    assert "geometric disagrees with torsor" in err


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "local", "--qv", "2,3,4,5"],
    ["verify", "--suite", "series", "--trunc", "6"],
    ["verify", "--suite", "decomposition", "--q", "2"],
    ["verify", "--suite", "moebius"],
])
def test_verify_examples_pass(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.splitlines()[-1].startswith("pass suite")


def test_verify_verbose_lists_identities(capsys):
    _, out, _ = run(["verify", "--suite", "moebius", "--verbose"], capsys)
    assert "pass moebius/indicator_inversion" in out


def test_failed_check_exits_one(monkeypatch, capsys):
    from torsorcount import checks

    monkeypatch.setattr(checks, "suite_moebius", lambda: [checks.Check("moebius", "x", "c", "1", "2", False)])
    code, out, _ = run(["verify", "--suite", "moebius"], capsys)
    assert code == 1
    assert "FAIL moebius/x" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "torsorcount", "count", "--q", "2", "--nmax", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "2,torsor,18,0.306979679522497,58.6358029560743,"
