import math
import os
import subprocess
import sys

import pytest

from adrdiagram import cli
from adrdiagram.core import disk, dumps
from adrdiagram.shapes import slice_area


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _report(out):
    rows = {}
    for line in out.splitlines():
        parts = line.split()
        rows[parts[0]] = dict(zip(parts[1::2], map(float, parts[2::2])))
    return rows


def test_construct_slice_report(capsys, tmp_path):
    path = tmp_path / "slice.arc"
    code, out, _ = run(capsys, "construct", "slice", "--D", "3", "--r", "1", "--out", str(path))
    assert code == 0 and path.exists()
    rep = _report(out)
    assert len(out.splitlines()) == 3
    assert abs(rep["A"]["closed-form"] - slice_area(3.0)) <= 1e-13
    assert abs(rep["A"]["measured"] - slice_area(3.0)) <= 1e-9


@pytest.mark.parametrize("argv", [("construct", "nonagon-e", "--D", "4"),
                                  ("construct", "two-cap", "--D", "2", "--r", "1"),
                                  ("construct", "slice", "--D", "nan"),
                                  ("construct", "cube", "--D", "3")])
def test_construct_domain_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


@pytest.mark.parametrize("shape", ["two-cap", "slice", "nonagon-e", "nonagon-c"])
def test_construct_then_measure_round_trip(capsys, tmp_path, shape):
    path = tmp_path / "body.arc"
    code, out, _ = run(capsys, "construct", shape, "--D", "5", "--r", "2", "--out", str(path))
    assert code == 0
    built = _report(out)
    code, out, _ = run(capsys, "measure", str(path))
    assert code == 0
    got = {k: float(v) for k, v in (ln.split() for ln in out.splitlines())}
    for key in "ADr":
        assert abs(got[key] - built[key]["measured"]) <= 1e-9 * max(1.0, abs(got[key]))
    assert abs(got["D"] - 5.0) <= 1e-6 and abs(got["r"] - 2.0) <= 1e-6
    assert math.isclose(got["x"], 2 * got["r"] / got["D"], rel_tol=1e-12)


def test_measure_flag_form(capsys, tmp_path):
    path = tmp_path / "disk.arc"
    path.write_text(dumps(disk()))
    code, out, _ = run(capsys, "measure", "--in", str(path))
    got = {k: float(v) for k, v in (ln.split() for ln in out.splitlines())}
    assert code == 0
    assert abs(got["x"] - 1) <= 1e-9 and abs(got["y"] - 1) <= 1e-9


def test_measure_malformed_header(capsys, tmp_path):
    path = tmp_path / "bad.arc"
    path.write_text("ARCGON v2\n1\nS 0 0 1 0\n")
    code, _, err = run(capsys, "measure", str(path))
    assert code == 2 and "line 1" in err


def test_measure_missing_file_is_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "measure", str(tmp_path / "nope.arc"))
    assert code == 3 and "I/O" in err


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--D", "3", "--y", "0.5")
    assert code == 0
    rows = dict(ln.split() for ln in out.splitlines())
    assert abs(float(rows["A_max"]) - slice_area(3.0)) <= 1e-12
    assert rows["inside_band"] in {"true", "false"}
    assert run(capsys, "bounds", "--x", "0.5", "--D", "3")[0] == 2
    assert run(capsys, "bounds", "--x", "1.5")[0] == 2


def test_diagram_rejects_single_column(capsys):
    assert run(capsys, "diagram", "--columns", "1")[0] == 2


def test_diagram_outputs_are_deterministic(capsys, tmp_path):
    a, b, svg = tmp_path / "a.csv", tmp_path / "b.csv", tmp_path / "d.svg"
    assert run(capsys, "diagram", "--columns", "2", "--per-column", "2", "--seed", "3",
               "--csv", str(a), "--svg", str(svg))[0] == 0
    assert run(capsys, "diagram", "--columns", "2", "--per-column", "2", "--seed", "3",
               "--csv", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert len(a.read_text().splitlines()) == 1 + 2 * 4
    text = svg.read_text()
    assert text.count("<polyline") >= 2 and text.count("stroke-dasharray") == 2


def test_diagram_to_stdout(capsys):
    code, out, _ = run(capsys, "diagram", "--columns", "2", "--per-column", "1")
    assert code == 0 and out.startswith("x,y,witness\n")


def test_failed_write_leaves_nothing_behind(capsys, tmp_path):
    target = tmp_path / "missing-dir" / "out.arc"
    code, _, _ = run(capsys, "construct", "slice", "--D", "3", "--out", str(target))
    assert code == 3 and not target.exists()


def test_atomic_write_cleans_up_on_error(tmp_path, monkeypatch):
    target = tmp_path / "keep.txt"
    target.write_text("old")

    def boom(src, dst):
        raise OSError("rename failed")

    monkeypatch.setattr(os, "replace", boom)
    with pytest.raises(OSError):
        cli.write_atomic(str(target), "new")
    assert target.read_text() == "old"
    assert sorted(p.name for p in tmp_path.iterdir()) == ["keep.txt"]


def test_verify_nd(capsys):
    code, out, _ = run(capsys, "verify", "nd")
    assert code == 0 and out.startswith("PASS") and "1/1 checks passed" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from adrdiagram.verify import Check
    monkeypatch.setitem(cli.SUITES, "nd", [lambda: Check("broken", False, "forced")])
    code, out, _ = run(capsys, "verify", "nd")
    assert code == 1 and out.startswith("FAIL")


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "adrdiagram.cli", "bounds", "--x", "1"],
                         capture_output=True, text=True, timeout=120)
    assert out.returncode == 0 and "y_upper 1" in out.stdout


def test_no_subcommand_is_usage_error(capsys):
    assert run(capsys)[0] == 2
