"""Invariant suites shared by ``twobytwo verify`` and the test-suite.

Every suite returns a :class:`SuiteResult`; each check records the measured
error next to its tolerance so failures are diagnosable from the report alone.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import _kernels
from .decomp import (
    KIND_OF_CLASS,
    bargmann_compose,
    bargmann_decompose,
    classify,
    decompose,
    equidiagonal,
    wigner_compose,
    wigner_power,
)
from .littlegroup import (
    GaugeParams,
    ParticleClass,
    boosted_little_group,
    boosted_momentum,
    gauge_element,
    gauge_element_4x4,
    gauge_violation,
    little_group_element,
    wigner_condition_holds,
)
from .mat2core import (
    GENERATORS,
    boost_z,
    commutator,
    dagger,
    expm2,
    four_vector_matrix,
    levi_civita,
    matrix_four_vector,
    rotation_y,
    squeeze_x,
    to_four_by_four,
)
from .oscillator import (
    OscillatorSystem,
    propagator,
    transition_curves,
)
from .poincare import (
    JonesVector,
    coherency_from_jones,
    det_relative_change,
    mass_circle,
    poincare_radius,
    stokes,
    transform_coherency,
    unstokes,
)
from .spinorbilinear import (
    BILINEAR_TABLE,
    q_transform,
    weight_exponents,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    error: float
    tol: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark}  {self.name}  (error {self.error:.3e}, tol {self.tol:.1e})"


@dataclass
class SuiteResult:
    name: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, error: float, tol: float, passed: bool | None = None) -> CheckResult:
        error = float(error)
        ok = (error <= tol) if passed is None else bool(passed)
        if not math.isfinite(error):
            ok = False
        c = CheckResult(name, ok, error, tol)
        self.checks.append(c)
        return c

    @property
    def n_passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and self.n_passed == len(self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> str:
        return f"{self.name}: {self.n_passed}/{len(self.checks)} passed"


def _maxabs(a) -> float:
    return float(np.max(np.abs(a)))


def _rel(a, b) -> float:
    """Max-norm difference relative to max(1, |b|)."""
    return _maxabs(np.asarray(a) - np.asarray(b)) / max(1.0, _maxabs(b))


def random_sl2c(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    """n unimodular matrices exp(-i sum c_k X_k), c_k uniform in [-scale, scale]."""
    labels = ("J1", "J2", "J3", "K1", "K2", "K3")
    gens = np.stack([GENERATORS[k].two_by_two for k in labels])
    coeffs = rng.uniform(-scale, scale, size=(n, 6))
    return np.stack([expm2(-1j * np.tensordot(c, gens, axes=1)) for c in coeffs])


def random_sp2(rng: np.random.Generator, n_factors: int = 5) -> np.ndarray:
    """Product of random rotation, squeeze and boost factors (real, unimodular)."""
    M = np.eye(2)
    for _ in range(n_factors):
        kind = rng.integers(3)
        if kind == 0:
            F = rotation_y(rng.uniform(-math.pi, math.pi)).real
        elif kind == 1:
            F = squeeze_x(rng.uniform(-1.5, 1.5)).real
        else:
            F = boost_z(rng.uniform(-1.5, 1.5)).real
        M = M @ F
    return M


def random_parabolic(rng: np.random.Generator) -> np.ndarray:
    """+-R(a) [[1, g], [0, 1]] R(-a): trace exactly +-2 up to rounding."""
    a = rng.uniform(-math.pi, math.pi)
    g = rng.uniform(-2, 2)
    sign = 1.0 if rng.random() < 0.8 else -1.0
    return sign * rotation_y(a).real @ np.array([[1.0, g], [0.0, 1.0]]) @ rotation_y(-a).real


# ---------------------------------------------------------------------------
# Lie algebra
# ---------------------------------------------------------------------------

_LABELS = ("J1", "J2", "J3", "K1", "K2", "K3")


def _expected_commutator(a: str, b: str, rep: str) -> np.ndarray:
    """Structure constants: [J,J] = i eps J, [J,K] = i eps K, [K,K] = -i eps J."""
    i, j = int(a[1]), int(b[1])
    out = 0
    for k in (1, 2, 3):
        e = levi_civita(i, j, k)
        if e == 0:
            continue
        if a[0] == "J" and b[0] == "J":
            term = 1j * e * getattr(GENERATORS[f"J{k}"], rep)
        elif a[0] == "K" and b[0] == "K":
            term = -1j * e * getattr(GENERATORS[f"J{k}"], rep)
        else:
            # [J_i, K_j] = i eps K_k and [K_i, J_j] = i eps K_k
            term = 1j * e * getattr(GENERATORS[f"K{k}"], rep)
        out = out + term
    size = 2 if rep == "two_by_two" else 4
    return np.zeros((size, size), dtype=complex) + out


def _e2_residuals(g: dict) -> dict[str, np.ndarray]:
    N1, N2 = g["K1"] - g["J2"], g["K2"] + g["J1"]
    return {
        "[N1,N2]=0": commutator(N1, N2),
        "[N1,J3]=-iN2": commutator(N1, g["J3"]) + 1j * N2,
        "[N2,J3]=iN1": commutator(N2, g["J3"]) - 1j * N1,
    }


def suite_lie_algebra(tol2: float = 1e-14, tol4: float = 1e-12, tol: float | None = None, **_) -> SuiteResult:
    """15 Lorentz commutators plus 3 of the E(2)-like subalgebra, in both representations.

    ``tol`` overrides both representation tolerances.
    """
    if tol is not None:
        tol2 = tol4 = tol
    res = SuiteResult("lie_algebra")

    def record(name, e2, e4):
        res.add(name, max(e2, e4), tol4, passed=e2 <= tol2 and e4 <= tol4)

    for a, b in itertools.combinations(_LABELS, 2):
        e2 = _maxabs(commutator(GENERATORS[a].two_by_two, GENERATORS[b].two_by_two) - _expected_commutator(a, b, "two_by_two"))
        e4 = _maxabs(commutator(GENERATORS[a].four_by_four, GENERATORS[b].four_by_four) - _expected_commutator(a, b, "four_by_four"))
        record(f"[{a},{b}]", e2, e4)
    r2 = _e2_residuals({k: GENERATORS[k].two_by_two for k in _LABELS})
    r4 = _e2_residuals({k: GENERATORS[k].four_by_four for k in _LABELS})
    for name in r2:
        record(name, _maxabs(r2[name]), _maxabs(r4[name]))
    return res


# ---------------------------------------------------------------------------
# Homomorphism
# ---------------------------------------------------------------------------

def suite_homomorphism(samples: int = 1000, seed: int = 0, tol: float = 1e-10, **_) -> SuiteResult:
    rng = np.random.default_rng(seed)
    G1 = random_sl2c(rng, samples)
    G2 = random_sl2c(rng, samples)
    L1 = _kernels.lorentz_batch(G1)
    L2 = _kernels.lorentz_batch(G2)
    L12 = _kernels.lorentz_batch(_kernels.matmul2_batch(G1, G2))
    res = SuiteResult("homomorphism")
    res.add("Lambda(G1 G2) = Lambda(G1) Lambda(G2)", max(_rel(L12[i], L1[i] @ L2[i]) for i in range(samples)), tol)
    res.add(
        "trace formula = basis conjugation",
        max(_rel(L1[i], to_four_by_four(G1[i])) for i in range(samples)),
        tol,
    )
    worst = 0.0
    for i in range(samples):
        v = rng.normal(size=4)
        X = four_vector_matrix(v)
        lhs = matrix_four_vector(G1[i] @ X @ dagger(G1[i]))
        worst = max(worst, _rel(lhs, L1[i] @ v))
    res.add("G X G^dagger = Lambda(G) v", worst, tol)
    metric = np.diag([1.0, -1.0, -1.0, -1.0])
    res.add(
        "Lambda^T g Lambda = g",
        max(_rel(L1[i].T @ metric @ L1[i], metric) for i in range(samples)),
        tol,
    )
    return res


# ---------------------------------------------------------------------------
# Oscillator
# ---------------------------------------------------------------------------

def suite_oscillator(
    n_grid: int = 10,
    t_max: float = 5.0,
    n_times: int = 10,
    h: float = 1e-5,
    tol: float = 1e-8,
    fd_step: float = 1e-4,
    **_,
) -> SuiteResult:
    """Closed form vs RK4 on an (omega, mu) grid, plus smoothness at the critical point."""
    res = SuiteResult("oscillator")
    vals = np.linspace(0.1, 1.0, n_grid)
    pairs = [(w, m) for w in vals for m in vals]
    omega = np.array([p[0] for p in pairs])
    mu = np.array([p[1] for p in pairs])
    t_out = np.linspace(t_max / n_times, t_max, n_times)
    psi0 = np.broadcast_to(np.eye(2), (len(pairs), 2, 2)).copy()
    num = _kernels.rk4_first_order(omega, mu, psi0, t_out, h)
    worst = 0.0
    modes = set()
    for k, (w, m) in enumerate(pairs):
        sys = OscillatorSystem(w, m)
        modes.add(sys.mode())
        for j, t in enumerate(t_out):
            worst = max(worst, _rel(propagator(sys, t), num[j, k]))
    res.add(f"closed form vs RK4 ({n_grid}x{n_grid} grid, t<= {t_max})", worst, tol)
    res.add("grid covers all three modes", 0.0 if len(modes) == 3 else 1.0, 0.5)

    # smoothness of the cos->cosh and -sin->sinh curves in the signed rate variable
    d = fd_step
    left = transition_curves(np.array([-2 * d, -d, 0.0]))
    right = transition_curves(np.array([0.0, d, 2 * d]))
    for label, idx in (("diag", 0), ("off", 1)):
        L, R = left[idx], right[idx]
        jump0 = abs(L[2] - R[0])
        d1_left = (3 * L[2] - 4 * L[1] + L[0]) / (2 * d)
        d1_right = (-3 * R[0] + 4 * R[1] - R[2]) / (2 * d)
        d2_left = (L[2] - 2 * L[1] + L[0]) / d**2
        d2_right = (R[0] - 2 * R[1] + R[2]) / d**2
        res.add(f"{label}: continuous at critical point", jump0, 1e-12)
        res.add(f"{label}: first derivative continuous", abs(d1_left - d1_right), 1e-6)
        if label == "diag":
            # expected jump 2 (-cos'' = -1 on one side, cosh'' = +1 on the other)
            res.add("diag: second derivative jumps by 2", abs(abs(d2_right - d2_left) - 2.0), 1e-3)

    # the physical propagator at fixed mu is continuous through omega = mu
    mu0, t0, eps = 1.0, 1.3, 1e-7
    below = propagator(OscillatorSystem(mu0 - eps, mu0), t0)
    at = propagator(OscillatorSystem(mu0, mu0), t0)
    above = propagator(OscillatorSystem(mu0 + eps, mu0), t0)
    res.add("propagator continuous across omega = mu", max(_maxabs(below - at), _maxabs(above - at)), 1e-6)
    return res


# ---------------------------------------------------------------------------
# Decompositions
# ---------------------------------------------------------------------------

def suite_decomposition(
    samples: int = 1000, seed: int = 0, tol: float = 1e-10, max_power: int = 20, parabolic_fraction: float = 0.1, **_
) -> SuiteResult:
    rng = np.random.default_rng(seed)
    n_par = int(round(samples * parabolic_fraction))
    mats = [random_sp2(rng) for _ in range(samples - n_par)] + [random_parabolic(rng) for _ in range(n_par)]
    res = SuiteResult("decomposition_roundtrip")
    rt, wig, pw, full_pw = 0.0, 0.0, 0.0, 0.0
    agree = 0
    kinds = set()
    for M in mats:
        delta, bp = bargmann_decompose(M)
        rt = max(rt, _rel(bargmann_compose(bp), M))
        _, _, wp = decompose(M)
        core = equidiagonal(bp.alpha, bp.chi)
        wig = max(wig, _rel(wigner_compose(wp), core))
        kinds.add(wp.kind)
        agree += wp.kind is KIND_OF_CLASS[classify(M)]
        R = rotation_y(delta).real
        Rinv = rotation_y(-delta).real
        P = np.eye(2)
        for n in range(1, max_power + 1):
            P = P @ core
            pw = max(pw, _rel(wigner_power(wp, n), P))
        full_pw = max(full_pw, _rel(R @ wigner_power(wp, max_power) @ Rinv, np.linalg.matrix_power(M, max_power)))
    res.add(f"Bargmann round trip ({samples} samples)", rt, tol)
    res.add("Wigner sandwich reproduces the core", wig, tol)
    res.add(f"Wigner power vs repeated multiplication (n <= {max_power})", pw, tol)
    res.add(f"M^{max_power} through both decompositions", full_pw, tol)
    res.add("trace class agrees with Wigner kind", 1.0 - agree / len(mats), 0.0)
    res.add("all three kinds sampled", 0.0 if len(kinds) == 3 else 1.0, 0.5)
    return res


# ---------------------------------------------------------------------------
# Little groups
# ---------------------------------------------------------------------------

def suite_wigner_condition(samples: int = 100, seed: int = 0, tol: float = 1e-12, **_) -> SuiteResult:
    rng = np.random.default_rng(seed)
    res = SuiteResult("wigner_condition")
    for cls in ParticleClass:
        worst = 0.0
        for _ in range(samples):
            param = rng.uniform(-3, 3) if cls is not ParticleClass.MASSIVE else rng.uniform(-2 * math.pi, 2 * math.pi)
            W = little_group_element(cls, param, phi=rng.uniform(-math.pi, math.pi))
            worst = max(worst, wigner_condition_holds(W, cls.momentum).residual)
        res.add(f"W P W^dagger = P ({cls.value})", worst, tol)
    for cls in (ParticleClass.MASSIVE, ParticleClass.IMAGINARY_MASS):
        worst = 0.0
        for eta in np.linspace(-5, 5, 41):
            P = boosted_momentum(cls, eta)
            W = boosted_little_group(cls, rng.uniform(-3, 3), eta)
            worst = max(worst, wigner_condition_holds(W, P, tol=np.inf).residual / max(1.0, _maxabs(P)))
        res.add(f"boosted little group preserves boosted momentum ({cls.value}, |eta| <= 5)", worst, tol)
    worst = 0.0
    worst_hom = 0.0
    k = np.array([1.0, 1.0, 0.0, 0.0])
    for _ in range(samples):
        g = GaugeParams(rng.uniform(-3, 3), rng.uniform(-math.pi, math.pi))
        G4 = gauge_element_4x4(g)
        # rounding of the 1 + gamma^2/2 entry is the only source of error
        worst = max(worst, _maxabs(G4 @ k - k) / np.spacing(1.0 + g.gamma**2 / 2))
        worst_hom = max(worst_hom, _maxabs(G4 - to_four_by_four(gauge_element(g))))
    res.add("gauge 4x4 fixes (1,1,0,0) (in ulps of 1 + gamma^2/2)", worst, 1.0)
    res.add("gauge 4x4 equals the image of the 2x2 gauge matrix", worst_hom, tol)
    ratios = np.logspace(-4, -1, 31)
    gamma = 1.0
    norms = np.array([gauge_violation(gamma, 2 * r, 1.0).norm for r in ratios])
    slope = np.polyfit(np.log(ratios), np.log(norms), 1)[0]
    res.add("gauge violation scales as m^2 (log-log slope)", abs(slope - 2.0), 0.01)
    return res


# ---------------------------------------------------------------------------
# Polarization optics
# ---------------------------------------------------------------------------

def suite_stokes_invariant(samples: int = 1000, seed: int = 0, tol_det: float = 1e-11, tol: float = 1e-12, **_) -> SuiteResult:
    rng = np.random.default_rng(seed)
    res = SuiteResult("stokes_invariant")
    Gs = random_sl2c(rng, samples)
    worst_det, worst_diag = 0.0, 0.0
    for G in Gs:
        C = coherency_from_jones(
            JonesVector(rng.uniform(0.5, 2.0), rng.uniform(-math.pi, math.pi), eta=rng.uniform(-1, 1)),
            rng.uniform(0, math.pi / 2),
        )
        worst_det = max(worst_det, det_relative_change(G, C))
        s_after = stokes(transform_coherency(G, C)).as_array()
        s_pred = to_four_by_four(np.conj(G)) @ stokes(C).as_array()
        worst_diag = max(worst_diag, _rel(s_after, s_pred))
    res.add(f"det C invariant under {samples} random transforms (relative)", worst_det, tol_det)
    res.add("Stokes vector transforms as a four-vector", worst_diag, 1e-10)
    worst = 0.0
    a = 1.3
    for xi in np.linspace(0, math.pi / 2, 91):
        s = stokes(coherency_from_jones(JonesVector(a, 0.4), xi))
        worst = max(worst, abs(s.S0**2 - poincare_radius(unstokes(s)) ** 2 - a**4 * math.sin(xi) ** 2))
    res.add("S0^2 - R^2 = a^4 sin^2 xi (91 points)", worst, tol)
    worst = 0.0
    for xi in np.linspace(0, math.pi, 181):
        e, m, p = mass_circle(1.0, xi)
        worst = max(worst, abs(e * e - (m * m + p * p)))
    res.add("energy^2 = mass^2 + momentum^2 (181 points)", worst, tol)
    return res


# ---------------------------------------------------------------------------
# Bilinears
# ---------------------------------------------------------------------------

#: Transcribed reference: (eta power, e^{i phi} power) of every term in the
#: sixteen combinations after Q and Qdot, block by block. Spinors are written
#: as u, v, U, V with capitals for dotted.
REFERENCE_WEIGHTS: tuple[tuple[dict[str, tuple[int, int]], ...], ...] = (
    ({"uu": (1, -1)}, {"uv": (0, 0), "vu": (0, 0)}, {"vv": (-1, 1)}, {"uv": (0, 0), "vu": (0, 0)}),
    ({"UU": (-1, -1)}, {"UV": (0, 0), "VU": (0, 0)}, {"VV": (1, 1)}, {"UV": (0, 0), "VU": (0, 0)}),
    ({"uU": (0, -1)}, {"uV": (1, 0), "vU": (-1, 0)}, {"vV": (0, 1)}, {"uV": (1, 0), "vU": (-1, 0)}),
    ({"Uu": (0, -1)}, {"Uv": (-1, 0), "Vu": (1, 0)}, {"Vv": (0, 1)}, {"Uv": (-1, 0), "Vu": (1, 0)}),
)


def _code(s) -> str:
    return s.base.upper() if s.dotted else s.base


def suite_bilinear_table(samples: int = 20, seed: int = 0, tol: float = 1e-14, **_) -> SuiteResult:
    """Each of the 16 entries: exact exponents and numeric weights at random (eta, phi)."""
    rng = np.random.default_rng(seed)
    params = rng.uniform(-1, 1, size=(samples, 2))
    res = SuiteResult("bilinear_table")
    for blk, ref_blk in zip(BILINEAR_TABLE, REFERENCE_WEIGHTS):
        for idx, (member, ref) in enumerate(zip(blk.members, ref_blk)):
            exact_ok = set(_code(l) + _code(r) for l, r in member.terms) == set(ref)
            num_err = 0.0
            for (l, r), c in member.terms.items():
                we_l, wp_l = weight_exponents(l)
                we_r, wp_r = weight_exponents(r)
                if (we_l + we_r, wp_l + wp_r) != ref.get(_code(l) + _code(r)):
                    exact_ok = False
                ke, kp = ref.get(_code(l) + _code(r), (0, 0))
                for eta, phi in params:
                    w = q_transform(eta, phi, l)[1] * q_transform(eta, phi, r)[1]
                    num_err = max(num_err, abs(w - np.exp(ke * eta + 1j * kp * phi)))
            label = "spin-0" if idx == 3 else f"spin-1[{idx}]"
            res.add(f"{blk.label} {label}", num_err, tol, passed=exact_ok and num_err <= tol)
    return res


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

SUITES: dict[str, Callable[..., SuiteResult]] = {
    "lie_algebra": suite_lie_algebra,
    "homomorphism": suite_homomorphism,
    "decomposition_roundtrip": suite_decomposition,
    "wigner_condition": suite_wigner_condition,
    "stokes_invariant": suite_stokes_invariant,
    "bilinear_table": suite_bilinear_table,
    "oscillator": suite_oscillator,
}

#: suites whose sampling is controlled by --samples
RANDOMIZED = {"homomorphism", "decomposition_roundtrip", "stokes_invariant"}


def run_suite(name: str, **kwargs) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}") from None
    return fn(**kwargs)
