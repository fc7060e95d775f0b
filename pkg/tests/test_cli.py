import csv
import io
import json
import subprocess
import sys

import pytest

from auxfield.cli import CSV_COLUMNS, main, parse_range, parse_sweep
from auxfield.errors import SpecError

COULOMB = {
    "N": 2,
    "kinematics": {"type": "NR", "m": 1.0},
    "two_body": {"form": "coulomb", "g": 1.0},
    "quantum": {"mode": "explicit", "states": [[0, 0]], "aux": "coulomb"},
    "perturbation": {"eps": {"coupling": 0.001, "form": "linear", "a": 1.0}},
}


@pytest.fixture
def coulomb_file(tmp_path):
    p = tmp_path / "coulomb.json"
    p.write_text(json.dumps(COULOMB))
    return str(p)


def run(args):
    out, err = io.StringIO(), io.StringIO()
    code = main(args, out, err)
    return code, out.getvalue(), err.getvalue()


def test_solve_json(coulomb_file):
    code, out, _ = run(["solve", "--input", coulomb_file, "--format", "json"])
    assert code == 0
    d = json.loads(out)
    assert d["M0"] == pytest.approx(1.75, rel=1e-14)
    assert d["bound"] == "exact"


def test_solve_json_round_trip(coulomb_file):
    _, out, _ = run(["solve", "--input", coulomb_file, "--format", "json"])
    d = json.loads(out)
    assert json.loads(json.dumps(d)) == d


def test_spectrum_csv_sorted(coulomb_file):
    code, out, _ = run(["spectrum", "--input", coulomb_file, "--sweep", "n=0..2,l=0..1", "--format", "csv"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == CSV_COLUMNS
    keys = [(int(r[2]), int(r[3])) for r in rows[1:]]
    assert keys == sorted(keys) and len(keys) == 6


def test_spectrum_over_n(tmp_path):
    spec = {"N": 2, "kinematics": {"type": "NR", "m": 1.0}, "two_body": {"form": "harmonic", "a": 1.0}}
    p = tmp_path / "h.json"
    p.write_text(json.dumps(spec))
    code, out, _ = run(["spectrum", "--input", str(p), "--sweep", "N=2..4,n=0..1", "--format", "json"])
    rows = json.loads(out)
    assert code == 0 and [r["N"] for r in rows] == [2, 2, 3, 3, 4, 4]


def test_critical_ratios(tmp_path):
    plot = tmp_path / "g.dat"
    code, out, _ = run(["critical", "--shape", "yukawa", "--beta", "1", "--m", "1", "--N", "2..6", "--gs",
                        "--format", "json", "--gnuplot", str(plot)])
    assert code == 0
    rows = json.loads(out)
    for row in rows[:-1]:
        assert row["ratio_next"] == pytest.approx(row["N"] / (row["N"] + 1), rel=1e-12)
    assert len(plot.read_text().splitlines()) == 6


def test_perturb_and_observables(coulomb_file):
    code, out, _ = run(["perturb", "--input", coulomb_file, "--format", "json"])
    assert code == 0 and json.loads(out)["M1"] == pytest.approx(1.752, rel=1e-14)
    code, out, _ = run(["observables", "--input", coulomb_file, "--format", "json"])
    assert code == 0 and json.loads(out)["mean_p_sq"] == pytest.approx(0.25)


def test_verify_bounds():
    code, out, _ = run(["verify", "--suite", "bounds"])
    assert code == 0
    assert out.strip().splitlines()[-1] == "violations: 0"


def test_exit_codes(tmp_path):
    code, out, _ = run(["solve", "--input", str(tmp_path / "missing.json"), "--error-json"])
    assert code == 1 and json.loads(out)["exit_code"] == 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"N": 2, "kinematics": {"type": "NR", "m": 1.0},
                               "two_body": {"form": "yukawa", "g": 0.5, "beta": 1.0},
                               "quantum": {"aux": "coulomb"}}))
    code, out, _ = run(["solve", "--input", str(bad), "--error-json"])
    assert code == 2 and json.loads(out)["error"] == "NoRoot"
    code, _, err = run(["solve", "--input", str(bad)])
    assert code == 2 and "NoRoot" in err
    code, _, _ = run(["solve"])
    assert code == 1


def test_option_overrides(coulomb_file):
    code, out, _ = run(["solve", "--input", coulomb_file, "--aux", "quadratic", "--modifier", "2,1,1.2",
                        "--format", "json"])
    d = json.loads(out)
    assert code == 0 and d["Q"] == pytest.approx(1.2) and d["bound"] == "indefinite"


def test_parsers():
    assert parse_range("2..4") == (2, 3, 4)
    assert parse_sweep("n=0..1,l=2") == {"n": (0, 1), "l": (2,)}
    with pytest.raises(SpecError):
        parse_range("4..2")
    with pytest.raises(SpecError):
        parse_sweep("x=1")


def test_module_entry_point(coulomb_file):
    proc = subprocess.run([sys.executable, "-m", "auxfield", "solve", "--input", coulomb_file],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "1.75" in proc.stdout
