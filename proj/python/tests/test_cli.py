# Part of fracl1: discrete fractional calculus on uniform meshes.
# Copyright 2026 the fracl1 authors
# SPDX-License-Identifier: Apache-2.0

import math
import os
import subprocess

import pytest

CLI = os.environ.get("FRACL1_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="FRACL1_CLI is not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def data_rows(stdout):
    lines = stdout.strip().splitlines()
    assert lines, "empty output"
    header, rest = lines[0], lines[1:]
    rows = [ln for ln in rest if not ln.startswith("#")]
    meta = {}
    for ln in rest:
        if ln.startswith("#"):
            key, _, value = ln[1:].partition("=")
            meta[key.strip()] = value.strip()
    return header, rows, meta


def test_weights_csv():
    proc = run("weights", "--beta", "0.5", "--n", "4")
    assert proc.returncode == 0
    header, rows, meta = data_rows(proc.stdout)
    assert header == "index,value"
    assert len(rows) == 4
    assert float(rows[0].split(",")[1]) == 1.0
    assert meta["beta"] == "0.5"
    assert meta["n"] == "4"


def test_kernel_csv_carries_limit():
    proc = run("kernel", "--alpha", "0.5", "--n", "10")
    assert proc.returncode == 0
    header, rows, meta = data_rows(proc.stdout)
    assert header == "index,value"
    assert len(rows) == 10
    assert float(meta["limit"]) == pytest.approx(math.pi / 4.0, abs=1e-13)


def test_apply_compose_matches_hand_value():
    proc = run("apply", "--op", "compose", "--func", "monomial:1",
               "--alpha", "0.5", "--n", "2", "--t", "1.0")
    assert proc.returncode == 0
    header, rows, meta = data_rows(proc.stdout)
    assert header == "t,value"
    assert len(rows) == 3
    s2 = 2.0 * (math.sqrt(2.0) - 1.0)
    want = 0.5 * (s2 + 1.0) / (math.pi / 4.0)
    assert float(rows[-1].split(",")[1]) == pytest.approx(want, rel=1e-12)
    assert meta["op"] == "compose"


def test_residue_report_and_determinism():
    args = ("residue", "--func", "cubic", "--alpha", "0.5", "--n-list",
            "8,16,32,64")
    first = run(*args)
    second = run(*args)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    header, rows, meta = data_rows(first.stdout)
    assert header == "abscissa,error"
    assert len(rows) == 4
    assert "slope" in meta


def test_em_report():
    proc = run("em", "--alpha", "0.75", "--m-list", "100,1000")
    assert proc.returncode == 0
    _, rows, meta = data_rows(proc.stdout)
    assert len(rows) == 2
    assert float(rows[1].split(",")[1]) < float(rows[0].split(",")[1])
    assert meta["alpha"] == "0.75"


def test_rates_report():
    proc = run("rates", "--which", "integral", "--func", "monomial:1",
               "--alpha", "0.5", "--n-list", "64,128,256")
    assert proc.returncode == 0
    _, rows, meta = data_rows(proc.stdout)
    assert len(rows) == 3
    assert float(meta["slope"]) == pytest.approx(1.0, abs=0.1)


def test_output_file_matches_stdout(tmp_path):
    target = tmp_path / "report.csv"
    args = ("em", "--alpha", "0.5", "--m-list", "100")
    streamed = run(*args)
    filed = run(*args, "--output", str(target))
    assert streamed.returncode == 0
    assert filed.returncode == 0
    assert target.read_text() == streamed.stdout


def test_invalid_arguments_exit_2():
    assert run("kernel", "--alpha", "1.5", "--n", "10").returncode == 2
    assert run("weights", "--beta", "0.5").returncode == 2
    assert run("weights", "--beta", "0.5", "--n", "4",
               "--bogus").returncode == 2
    assert run("rates", "--which", "integral", "--func", "kink",
               "--alpha", "0.5").returncode == 2
    assert run("apply", "--op", "squint", "--func", "cubic", "--alpha",
               "0.5", "--n", "4").returncode == 2
    assert run("apply", "--op", "compose", "--func", "monomial:abc",
               "--alpha", "0.5", "--n", "4").returncode == 2
    assert run("residue", "--func", "cubic", "--alpha", "0.5", "--n-list",
               "8,16", "--decades", "2").returncode == 2
    assert run().returncode == 2


def test_tolerance_failure_exits_3():
    proc = run("em", "--alpha", "0.5", "--m-list", "100",
               "--quad-subdivisions", "1")
    assert proc.returncode == 3
    assert "tolerance" in proc.stderr


def test_help_exits_0():
    proc = run("--help")
    assert proc.returncode == 0
    assert "residue" in proc.stdout
