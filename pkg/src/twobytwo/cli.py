"""Command-line front end: ``twobytwo sweep`` and ``twobytwo verify``.

Exit codes: 0 success, 1 a verification check failed, 2 invalid arguments,
3 output could not be written.
"""

from __future__ import annotations

import argparse
import inspect
import io
import json
import math
import re
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .decomp import classify, equidiagonal, wigner_decompose
from .littlegroup import ParticleClass, boosted_little_group, boosted_momentum, wigner_condition_holds
from .oscillator import OscillatorSystem, propagator, signed_rate
from .poincare import JonesVector, coherency_from_jones, mass_circle, stokes
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3


class UsageError(ValueError):
    pass


_PI_RE = re.compile(r"^\s*([-+]?\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d*\.?\d+))?\s*$")


def parse_number(text: str) -> float:
    """A float, or a multiple of pi such as ``pi/2``, ``-2pi`` or ``0.5*pi``."""
    text = text.strip()
    m = _PI_RE.match(text)
    if m:
        coef = m.group(1)
        if coef in ("", "+"):
            c = 1.0
        elif coef == "-":
            c = -1.0
        else:
            c = float(coef)
        d = float(m.group(2)) if m.group(2) else 1.0
        return c * math.pi / d
    try:
        value = float(text)
    except ValueError:
        raise UsageError(f"cannot parse number {text!r}") from None
    if not math.isfinite(value):
        raise UsageError(f"number must be finite, got {text!r}")
    return value


def parse_range(text: str) -> tuple[float, float]:
    parts = re.split(r"[:,]", text)
    if len(parts) != 2:
        raise UsageError(f"range must look like START:STOP, got {text!r}")
    start, stop = (parse_number(p) for p in parts)
    if not start < stop:
        raise UsageError(f"range start must be below stop, got {start} >= {stop}")
    return start, stop


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Sweep:
    variable: str
    default_range: tuple[float, float]
    columns: tuple[str, ...]
    row: Callable[[float, argparse.Namespace], tuple]
    help: str


def _osc_row(omega: float, a: argparse.Namespace) -> tuple:
    sys_ = OscillatorSystem(omega, a.mu)
    P = propagator(sys_, a.time)
    return (omega, a.mu, a.time, sys_.mode().value, signed_rate(sys_, a.time), P[0, 0], P[0, 1], P[1, 0], P[1, 1])


def _radius_row(xi: float, a: argparse.Namespace) -> tuple:
    C = coherency_from_jones(JonesVector(a.amplitude, a.phase), xi)
    s = stokes(C)
    return (xi, s.S0, s.S3, s.S1, s.S2, s.radius, C.det)


def _mass_row(xi: float, a: argparse.Namespace) -> tuple:
    e, m, p = mass_circle(a.p0, xi)
    return (xi, e, m, p, m * m)


def _trace_row(alpha: float, a: argparse.Namespace) -> tuple:
    M = equidiagonal(alpha, a.chi)
    wp = wigner_decompose(M)
    return (alpha, a.chi, M[0, 0] + M[1, 1], classify(M).value, wp.kind.value, wp.value, wp.eta, wp.sign)


def _little_row(eta: float, a: argparse.Namespace) -> tuple:
    out = [eta]
    for cls in (ParticleClass.MASSIVE, ParticleClass.IMAGINARY_MASS):
        W = boosted_little_group(cls, a.param, eta)
        out.append(wigner_condition_holds(W, boosted_momentum(cls, eta)).residual)
    out.append(math.sin(a.param / 2) * math.exp(eta))
    return tuple(out)


SWEEPS: dict[str, Sweep] = {
    "oscillator_transition": Sweep(
        "omega", (0.5, 1.5),
        ("omega", "mu", "t", "mode", "signed_rate", "p11", "p12", "p21", "p22"),
        _osc_row, "propagator entries against omega at fixed --mu and --time",
    ),
    "poincare_radius": Sweep(
        "xi", (0.0, math.pi / 2),
        ("xi", "S0", "S3", "S1", "S2", "R", "det"),
        _radius_row, "Stokes parameters and radius against the decoherence angle",
    ),
    "mass_circle": Sweep(
        "xi", (0.0, math.pi),
        ("xi", "energy", "mass", "momentum", "mass_sq"),
        _mass_row, "energy, mass and momentum against xi at fixed --p0",
    ),
    "trace_class_map": Sweep(
        "alpha", (-math.pi, math.pi),
        ("alpha", "chi", "trace", "trace_class", "wigner_kind", "wigner_value", "wigner_eta", "wigner_sign"),
        _trace_row, "trace class of the equidiagonal matrix against alpha at fixed --chi",
    ),
    "little_group_check": Sweep(
        "eta", (-5.0, 5.0),
        ("eta", "massive_residual", "imaginary_residual", "massless_gamma"),
        _little_row, "Wigner-condition residuals of boosted little groups against eta",
    ),
}


def _fmt(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    v = float(value)
    if v == 0.0:
        v = 0.0  # drop the sign of negative zero
    return format(v, ".17g")


def _jsonable(value):
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return int(value)
    v = float(value)
    return 0.0 if v == 0.0 else v


def compute_sweep(quantity: str, start: float, stop: float, steps: int, args: argparse.Namespace):
    sweep = SWEEPS[quantity]
    grid = np.linspace(start, stop, steps)
    rows = [sweep.row(float(x), args) for x in grid]
    return sweep.columns, rows


def render(columns, rows, fmt: str, meta: dict) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(",".join(columns) + "\n")
        for r in rows:
            buf.write(",".join(_fmt(v) for v in r) + "\n")
        return buf.getvalue()
    doc = {**meta, "columns": list(columns), "rows": [[_jsonable(v) for v in r] for r in rows]}
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def _write(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
        return
    with open(output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_sweep(a: argparse.Namespace) -> int:
    sweep = SWEEPS[a.quantity]
    start, stop = parse_range(a.range) if a.range else sweep.default_range
    if a.steps < 2:
        raise UsageError(f"--steps must be at least 2, got {a.steps}")
    if a.quantity == "mass_circle" and not (0.0 <= start and stop <= math.pi + 1e-15):
        raise UsageError("mass_circle needs xi within [0, pi]")
    if a.quantity == "poincare_radius" and not (0.0 <= start and stop <= math.pi / 2 + 1e-15):
        raise UsageError("poincare_radius needs xi within [0, pi/2]")
    try:
        columns, rows = compute_sweep(a.quantity, start, stop, a.steps, a)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    meta = {"quantity": a.quantity, "variable": sweep.variable, "range": [start, stop], "steps": a.steps}
    text = render(columns, rows, a.format, meta)
    _write(text, a.output)
    return EXIT_OK


def cmd_verify(a: argparse.Namespace) -> int:
    fn = SUITES[a.suite]
    params = inspect.signature(fn).parameters
    kwargs = {}
    if a.samples is not None:
        if a.samples < 1:
            raise UsageError("--samples must be positive")
        if "samples" in params:
            kwargs["samples"] = a.samples
    if "seed" in params:
        kwargs["seed"] = a.seed
    if a.tol is not None:
        if not a.tol > 0:
            raise UsageError("--tol must be positive")
        if "tol" in params:
            kwargs["tol"] = a.tol
    res = run_suite(a.suite, **kwargs)
    if a.format == "json":
        doc = {
            "suite": res.name,
            "passed": res.n_passed,
            "total": len(res.checks),
            "checks": [
                {"name": c.name, "passed": c.passed, "error": c.error, "tol": c.tol} for c in res.checks
            ],
        }
        text = json.dumps(doc, indent=1, sort_keys=True) + "\n"
    else:
        text = "".join(c.line() + "\n" for c in res.checks) + res.summary() + "\n"
    _write(text, a.output)
    return EXIT_OK if res.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twobytwo", description="Two-by-two Lorentz-group numerics.")
    sub = p.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="tabulate a quantity over a parameter range")
    sw.add_argument("quantity", choices=sorted(SWEEPS))
    sw.add_argument("--range", help="START:STOP; numbers or multiples of pi (e.g. 0:pi/2)")
    sw.add_argument("--steps", type=int, default=101)
    sw.add_argument("--output", "-o", help="output file (default: standard output)")
    sw.add_argument("--format", choices=("csv", "json"), default="csv")
    sw.add_argument("--mu", type=parse_number, default=1.0, help="damping rate (oscillator_transition)")
    sw.add_argument("--time", type=parse_number, default=1.0, help="time (oscillator_transition)")
    sw.add_argument("--amplitude", type=parse_number, default=1.0, help="Jones amplitude (poincare_radius)")
    sw.add_argument("--phase", type=parse_number, default=0.0, help="relative phase (poincare_radius)")
    sw.add_argument("--p0", type=parse_number, default=1.0, help="energy (mass_circle)")
    sw.add_argument("--chi", type=parse_number, default=0.5, help="squeeze parameter (trace_class_map)")
    sw.add_argument("--param", type=parse_number, default=0.5, help="little-group angle or rapidity")
    sw.set_defaults(func=cmd_sweep)

    ve = sub.add_parser("verify", help="run an invariant suite")
    ve.add_argument("suite", choices=sorted(SUITES))
    ve.add_argument("--samples", type=int, default=None, help="random samples (suite default if omitted)")
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--tol", type=float, default=None, help="override the suite's main tolerance")
    ve.add_argument("--output", "-o")
    ve.add_argument("--format", choices=("text", "json"), default="text")
    ve.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"twobytwo: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"twobytwo: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
