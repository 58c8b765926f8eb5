import csv
import io
import json
import subprocess
import sys

import pytest

from hypmono.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_ka_at_origin(capsys):
    code, out, _ = run(capsys, "eval", "--fn", "ka", "--a", "0.5", "--r", "0")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1 and doc["command"] == "eval"
    assert doc["value"] == 1.5707963267948966


def test_eval_2f1_origin_and_lambda(capsys):
    _, out, _ = run(capsys, "eval", "--fn", "2f1", "--a", "0.3", "--b", "0.4", "--c", "1.2", "--x", "0")
    assert json.loads(out)["value"] == 1.0
    _, out, _ = run(capsys, "eval", "--fn", "lambda", "--i", "3", "--a", "0.25", "--c", "1")
    assert abs(json.loads(out)["value"] - 0.7853981633974483) <= 1e-14


def test_threshold_lambda0(capsys):
    code, out, _ = run(capsys, "threshold", "--id", "lambda0")
    doc = json.loads(out)
    assert code == 0
    assert abs(doc["value"] - 1.1187633902750) <= 1e-10
    assert doc["bracket_width"] <= 1e-10


def test_threshold_boundary_and_sweep(capsys):
    _, out, _ = run(capsys, "threshold", "--id", "lambda10bar", "--n", "0")
    doc = json.loads(out)
    assert doc["value"] == 2.0 and doc["attained_on_boundary"] is True
    code, out, _ = run(capsys, "threshold", "--id", "lambda3star", "--sweep", "3", "--sweep-points", "3")
    doc = json.loads(out)
    assert code == 0 and doc["sweep"]["c_max"] == 3.0 and len(doc["rows"]) == 3


def test_scan_csv_and_dump(capsys):
    code, out, _ = run(capsys, "scan", "--family", "f1", "--lambda", "0", "--c", "1",
                       "--a-grid", "4", "--x-grid", "4", "--dump-grid", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and list(rows[0]) == ["a", "arg", "value"] and len(rows) == 16


def test_scan_json_verdict(capsys):
    _, out, _ = run(capsys, "scan", "--family", "f7", "--lambda", "2", "--c", "1",
                    "--a-grid", "16", "--r-grid", "8")
    doc = json.loads(out)
    assert doc["verdict"] == "decreasing" and doc["a_grid_size"] == 16


def test_bounds_exit_codes(capsys):
    code, out, _ = run(capsys, "bounds", "--ineq", "th3", "--samples", "20", "--format", "csv")
    header = out.splitlines()[0].split(",")
    assert code == 0
    assert header[:4] == ["inequality_id", "a", "c", "x"] and "lower_slack" in header
    # the log upper bound of th1 breaks for c > 1
    code, _, _ = run(capsys, "bounds", "--ineq", "th1", "--samples", "200")
    assert code == 4


def test_bounds_fixed_coordinates(capsys):
    _, out, _ = run(capsys, "bounds", "--ineq", "cor33", "--samples", "1", "--a", "0.5", "--r", "0.6",
                    "--format", "csv")
    row = next(csv.DictReader(io.StringIO(out)))
    assert float(row["a"]) == 0.5 and float(row["r"]) == 0.6
    assert abs(float(row["lower_slack"])) <= 1e-12


def test_error_codes(capsys):
    code, _, err = run(capsys, "eval", "--fn", "2f1", "--a", "1", "--b", "1", "--c", "2", "--x", "1.5")
    assert code == 2
    assert json.loads(err)["error"]["type"] == "domain_error"
    code, _, err = run(capsys, "eval", "--fn", "2f1", "--a", "0.25", "--b", "0.75", "--c", "1",
                       "--x", "0.99999999")
    assert code == 3
    assert json.loads(err)["error"]["type"] == "convergence_error"
    code, _, _ = run(capsys, "threshold", "--id", "lambda3star", "--c", "0.5")
    assert code == 2


def test_deterministic_output(capsys):
    argv = ("bounds", "--ineq", "th2", "--samples", "30", "--seed", "9")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    _, c, _ = run(capsys, "bounds", "--ineq", "th2", "--samples", "30", "--seed", "10")
    assert a == b and a != c


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "eval", "--fn", "agm", "--r", "0.6", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["command"] == "eval"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hypmono", "eval", "--fn", "gauss",
                           "--a", "-0.5", "--b", "0.5", "--c", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert abs(json.loads(proc.stdout)["value"] - 0.6366197723675814) <= 1e-12


@pytest.mark.parametrize("argv", [
    ("scan", "--family", "f5", "--lambda", "1", "--c", "2", "--n", "1"),
    ("eval", "--fn", "ka", "--a", "0.5", "--r", "1.5"),
    ("scan", "--family", "f2", "--lambda", "0", "--a-grid", "0.1,0.7", "--c", "1"),
])
def test_domain_rejections(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2
