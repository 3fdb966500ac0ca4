"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line. Run directly with
``python tests/test_acceptance.py`` for the summary alone.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

import numpy as np
import pytest

from twobytwo import spinorbilinear as sb
from twobytwo.cli import SWEEPS, main
from twobytwo.suites import CheckResult, SuiteResult, run_suite


def _report(number: int, title: str, res: SuiteResult) -> bool:
    worst = max((c.error / c.tol if c.tol else c.error for c in res.checks), default=0.0)
    status = "PASS" if res.ok else "FAIL"
    detail = f"{res.n_passed}/{len(res.checks)} checks, worst error/tol {worst:.2e}"
    if not res.ok:
        detail += "; failing: " + "; ".join(c.name for c in res.failures)
    line = f"{status} criterion {number} {title}: {detail}"
    if _CAPSYS is not None:
        with _CAPSYS.disabled():
            print("\n" + line, flush=True)
    else:
        print(line, flush=True)
    return res.ok


def _extra(res: SuiteResult, name: str, error: float, tol: float) -> None:
    res.checks.append(CheckResult(name, error <= tol, float(error), tol))


_CAPSYS = None


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    # criterion lines bypass pytest capture so they reach the terminal and any tee
    global _CAPSYS
    _CAPSYS = capsys
    yield
    _CAPSYS = None


def _size(b) -> float:
    return max((abs(c) for c in b.terms.values()), default=0.0)


def test_criterion_1_lie_algebra():
    res = run_suite("lie_algebra", tol2=1e-14, tol4=1e-12)
    assert len(res.checks) == 18
    assert _report(1, "Lie algebra", res)


def test_criterion_2_homomorphism():
    res = run_suite("homomorphism", samples=1000, tol=1e-10)
    assert _report(2, "homomorphism", res)


def test_criterion_3_oscillator():
    res = run_suite("oscillator", n_grid=10, t_max=5.0, tol=1e-8)
    assert _report(3, "oscillator", res)


def test_criterion_4_decomposition():
    res = run_suite("decomposition_roundtrip", samples=1000, tol=1e-10, max_power=20)
    assert _report(4, "decompositions", res)


def test_criterion_5_little_group():
    res = run_suite("wigner_condition", samples=100, tol=1e-12)
    assert _report(5, "little groups", res)


def test_criterion_6_poincare():
    res = run_suite("stokes_invariant", samples=1000, tol_det=1e-11, tol=1e-12)
    assert _report(6, "Poincare sphere", res)


def test_criterion_7_bilinears():
    res = run_suite("bilinear_table", tol=1e-14)
    Sp, Sm = sb.scalars()
    _extra(res, "S+ parity eigenvalue +1", _size(sb.dot_conjugate(Sp) - Sp), 0.0)
    _extra(res, "S- parity eigenvalue -1", _size(sb.dot_conjugate(Sm) + Sm), 0.0)
    rng = np.random.default_rng(0)
    worst = {}
    for uu, vd in rng.normal(size=(200, 2)) + 1j * rng.normal(size=(200, 2)):
        for key, r in sb.massless_identities(sb.massless_limit_tensor(uu, vd)).items():
            worst[key] = max(worst.get(key, 0.0), r)
    _extra(res, "massless E_x = B_y", worst["Ex_minus_By"], 0.0)
    _extra(res, "massless E_y = -B_x", worst["Ey_plus_Bx"], 0.0)
    _extra(res, "massless E.B = 0", worst["E_dot_B"], 1e-14)
    assert _report(7, "bilinears", res)


def test_criterion_8_cli_determinism():
    res = SuiteResult("cli_determinism")
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        for quantity in sorted(SWEEPS):
            for fmt in ("csv", "json"):
                outs = []
                for run in range(2):
                    path = tmp / f"{quantity}-{run}.{fmt}"
                    code = main(["sweep", quantity, "--steps", "101", "--format", fmt, "-o", str(path)])
                    outs.append((code, path.read_bytes()))
                same = outs[0] == outs[1] and outs[0][0] == 0
                res.add(f"{quantity} {fmt}", 0.0 if same else 1.0, 0.0)
        outs = []
        for run in range(2):
            path = tmp / f"verify-{run}.txt"
            subprocess.run(
                [sys.executable, "-m", "twobytwo", "verify", "stokes_invariant", "--samples", "200", "-o", str(path)],
                check=True,
            )
            outs.append(path.read_bytes())
        res.add("verify stokes_invariant in separate processes", 0.0 if outs[0] == outs[1] else 1.0, 0.0)
    assert _report(8, "CLI determinism", res)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
