import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from twobytwo.cli import SWEEPS, main, parse_number, parse_range


def _read_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], np.array([[float(v) if v not in ("oscillation", "transition", "damping", "elliptic", "parabolic", "hyperbolic", "massive", "massless", "imaginary") else np.nan for v in r] for r in rows[1:]])


@pytest.mark.parametrize("text,value", [("pi/2", math.pi / 2), ("-2pi", -2 * math.pi), ("0.5*pi", 0.5 * math.pi), ("1.25", 1.25)])
def test_parse_number(text, value):
    assert parse_number(text) == pytest.approx(value)


@pytest.mark.parametrize("text", ["abc", "nan", "inf"])
def test_parse_number_rejects(text):
    with pytest.raises(ValueError):
        parse_number(text)


def test_parse_range():
    assert parse_range("0:pi") == (0.0, math.pi)
    with pytest.raises(ValueError):
        parse_range("1:0")
    with pytest.raises(ValueError):
        parse_range("1")


@pytest.mark.parametrize("quantity", sorted(SWEEPS))
@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_sweep_deterministic(tmp_path, quantity, fmt):
    a, b = tmp_path / "a", tmp_path / "b"
    for p in (a, b):
        assert main(["sweep", quantity, "--steps", "21", "--format", fmt, "-o", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes()


def test_poincare_radius_monotone(tmp_path):
    out = tmp_path / "r.csv"
    assert main(["sweep", "poincare_radius", "--range", "0:pi/2", "--steps", "91", "-o", str(out)]) == 0
    header, data = _read_csv(out)
    R = data[:, header.index("R")]
    assert len(R) == 91
    assert np.all(np.diff(R) <= 0)


def test_mass_circle_identity(tmp_path):
    out = tmp_path / "m.csv"
    assert main(["sweep", "mass_circle", "--p0", "1", "--range", "0:pi", "--steps", "181", "-o", str(out)]) == 0
    header, data = _read_csv(out)
    m, p = data[:, header.index("mass")], data[:, header.index("momentum")]
    assert np.max(np.abs(m**2 + p**2 - 1)) < 1e-12


def test_oscillator_transition_continuous(tmp_path):
    out = tmp_path / "o.csv"
    assert main(["sweep", "oscillator_transition", "--mu", "1", "--range", "0.5:1.5", "--steps", "1001", "-o", str(out)]) == 0
    header, data = _read_csv(out)
    cols = [header.index(c) for c in ("p11", "p12", "p21", "p22")]
    steps = np.abs(np.diff(data[:, cols], axis=0))
    # step size 1e-3; a jump would show as an outlier against neighbouring steps
    assert np.max(steps) < 5e-3


def test_json_layout(tmp_path):
    out = tmp_path / "x.json"
    assert main(["sweep", "mass_circle", "--steps", "3", "--format", "json", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["columns"][0] == "xi" and len(doc["rows"]) == 3


def test_csv_precision(tmp_path):
    out = tmp_path / "x.csv"
    main(["sweep", "mass_circle", "--steps", "2", "--range", "0:pi/3", "-o", str(out)])
    row = out.read_text().splitlines()[2].split(",")
    assert float(row[0]) == math.pi / 3


@pytest.mark.parametrize(
    "argv",
    [
        ["sweep", "mass_circle", "--steps", "1"],
        ["sweep", "mass_circle", "--range", "2:1"],
        ["sweep", "mass_circle", "--range", "0:4"],
        ["sweep", "poincare_radius", "--range", "0:pi"],
        ["sweep", "mass_circle", "--p0", "abc"],
        ["sweep", "nothing"],
        ["verify", "unknown"],
        ["verify", "homomorphism", "--samples", "0"],
        ["verify", "homomorphism", "--tol", "-1"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_io_error(tmp_path):
    assert main(["sweep", "mass_circle", "-o", str(tmp_path / "missing" / "x.csv")]) == 3


@pytest.mark.parametrize("suite,count", [("lie_algebra", 18), ("bilinear_table", 16)])
def test_verify_counts(suite, count, capsys):
    assert main(["verify", suite]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1].endswith(f"{count}/{count} passed")


def test_verify_json(tmp_path):
    out = tmp_path / "v.json"
    assert main(["verify", "homomorphism", "--samples", "50", "--format", "json", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["passed"] == doc["total"]


def test_verify_failure_exit_code():
    assert main(["verify", "homomorphism", "--samples", "20", "--tol", "1e-30"]) == 1


def test_verify_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for p in (a, b):
        main(["verify", "stokes_invariant", "--samples", "100", "--seed", "4", "-o", str(p)])
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "twobytwo", "sweep", "mass_circle", "--steps", "2"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.startswith("xi,energy,mass,momentum,mass_sq\n")
