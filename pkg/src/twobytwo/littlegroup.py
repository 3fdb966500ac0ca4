"""Wigner's little groups in the two-by-two representation.

A little-group element W leaves a momentum matrix P fixed: ``W P W^dagger = P``.
Canonical momenta (unit scale) are diag(1, 1) for a massive particle at rest,
diag(1, 0) for a massless particle along z, and diag(1, -1) for an
imaginary-mass particle with zero energy.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .mat2core import (
    TOL,
    boost_z,
    dagger,
    four_vector_matrix,
    matrix_four_vector,
    rotation_y,
    rotation_z,
    squeeze_x,
    to_four_by_four,
)


class ParticleClass(enum.Enum):
    MASSIVE = "massive"
    MASSLESS = "massless"
    IMAGINARY_MASS = "imaginary"

    @property
    def momentum(self) -> np.ndarray:
        return _CANONICAL[self].copy()

    @property
    def four_momentum(self) -> np.ndarray:
        return matrix_four_vector(_CANONICAL[self])


_CANONICAL = {
    ParticleClass.MASSIVE: np.diag([1.0, 1.0]).astype(np.complex128),
    ParticleClass.MASSLESS: np.diag([1.0, 0.0]).astype(np.complex128),
    ParticleClass.IMAGINARY_MASS: np.diag([1.0, -1.0]).astype(np.complex128),
}


@dataclass(frozen=True)
class WignerCheck:
    holds: bool
    residual: float

    def __bool__(self) -> bool:
        return self.holds


def wigner_condition_holds(W, P, tol: float = TOL) -> WignerCheck:
    """Check W P W^dagger = P in the max norm; the residual is always reported."""
    W = np.asarray(W, dtype=np.complex128)
    P = np.asarray(P, dtype=np.complex128)
    residual = float(np.max(np.abs(W @ P @ dagger(W) - P)))
    return WignerCheck(residual <= tol, residual)


def little_group_element(cls: ParticleClass, param: float, phi: float = 0.0) -> np.ndarray:
    """Z(phi) times R(theta), [[1, gamma], [0, 1]] or S(lambda) by particle class."""
    if cls is ParticleClass.MASSIVE:
        core = rotation_y(param)
    elif cls is ParticleClass.MASSLESS:
        core = np.array([[1.0, param], [0.0, 1.0]], dtype=np.complex128)
    else:
        core = squeeze_x(param)
    if phi == 0.0:
        return core
    return rotation_z(phi) @ core


def boosted_momentum(cls: ParticleClass, eta: float) -> np.ndarray:
    """B(eta) P B(eta)^dagger: diag(e^eta, e^-eta), diag(e^eta, 0), diag(e^eta, -e^-eta)."""
    B = boost_z(eta)
    return B @ _CANONICAL[cls] @ dagger(B)


def boosted_little_group(cls: ParticleClass, core_param: float, eta: float) -> np.ndarray:
    """B(eta) W B(-eta) for the massive and imaginary-mass classes.

    Leaves :func:`boosted_momentum` invariant. For the massless class the
    boost parameter runs off to infinity; use :func:`gauge_element` instead.
    """
    if cls is ParticleClass.MASSLESS:
        raise ValueError(
            "the massless little group has no finite boost sandwich; "
            "use gauge_element (triangular/Iwasawa form) instead"
        )
    return boost_z(eta) @ little_group_element(cls, core_param) @ boost_z(-eta)


def momentum_rapidity(p0: float, pz: float) -> float:
    """eta with e^{2 eta} = (p0 + pz)/(p0 - pz) (massive) or (p0 + pz)/(pz - p0) (imaginary)."""
    return 0.5 * math.log(abs((p0 + pz) / (p0 - pz)))


# ---------------------------------------------------------------------------
# Gauge transformations of the E(2)-like little group
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaugeParams:
    gamma: float
    phi: float = 0.0


def gauge_element(g: GaugeParams) -> np.ndarray:
    """G(gamma, phi) = exp[-i gamma (N1 cos phi + N2 sin phi)] = [[1, gamma e^{-i phi}], [0, 1]]."""
    return np.array([[1.0, g.gamma * np.exp(-1j * g.phi)], [0.0, 1.0]], dtype=np.complex128)


def gauge_element_4x4(g: GaugeParams) -> np.ndarray:
    """Closed-form 4x4 gauge matrix on (t, z, x, y); fixes (1, 1, 0, 0)."""
    gm, c, s = g.gamma, math.cos(g.phi), math.sin(g.phi)
    h = gm * gm / 2
    return np.array(
        [
            [1 + h, -h, gm * c, gm * s],
            [h, 1 - h, gm * c, gm * s],
            [gm * c, -gm * c, 1.0, 0.0],
            [gm * s, -gm * s, 0.0, 1.0],
        ]
    )


@dataclass(frozen=True)
class PhotonPotential:
    """Four-potential (A0, A3, A1, A2) in (t, z, x, y) order; massless Lorentz condition A3 = A0."""

    A0: float
    A3: float
    A1: float
    A2: float

    def as_array(self) -> np.ndarray:
        return np.array([self.A0, self.A3, self.A1, self.A2], dtype=float)

    def satisfies_lorentz_condition(self, tol: float = TOL) -> bool:
        return abs(self.A3 - self.A0) <= tol * max(1.0, abs(self.A0))

    def to_matrix(self) -> np.ndarray:
        """[[2 A0, A1 - i A2], [A1 + i A2, 0]] when A3 = A0."""
        return four_vector_matrix(self.as_array())


def gauge_transform_potential(g: GaugeParams, A: PhotonPotential, route: str = "4x4") -> PhotonPotential:
    """Add gamma (A1 cos phi + A2 sin phi) to A0 and A3.

    ``route="2x2"`` computes the same thing as G X G^dagger on the potential
    matrix; both routes must agree.
    """
    if not A.satisfies_lorentz_condition():
        raise ValueError(f"potential violates the Lorentz condition A3 = A0: {A}")
    if route == "4x4":
        out = gauge_element_4x4(g) @ A.as_array()
    elif route == "2x2":
        G = gauge_element(g)
        out = matrix_four_vector(G @ A.to_matrix() @ dagger(G))
    else:
        raise ValueError(f"unknown route {route!r}")
    return PhotonPotential(*(float(v) for v in out))


# ---------------------------------------------------------------------------
# Massless spinors
# ---------------------------------------------------------------------------

SPINORS = {
    "u": np.array([1.0, 0.0], dtype=np.complex128),
    "v": np.array([0.0, 1.0], dtype=np.complex128),
    "udot": np.array([1.0, 0.0], dtype=np.complex128),
    "vdot": np.array([0.0, 1.0], dtype=np.complex128),
}


def neutrino_gauge_matrix(gamma: float) -> np.ndarray:
    """Massless limit acting on (u, v): [[1, 0], [gamma, 1]]."""
    return np.array([[1.0, 0.0], [gamma, 1.0]], dtype=np.complex128)


def antineutrino_gauge_matrix(gamma: float) -> np.ndarray:
    """Massless limit acting on the dotted pair: [[1, -gamma], [0, 1]]."""
    return np.array([[1.0, -gamma], [0.0, 1.0]], dtype=np.complex128)


@dataclass(frozen=True)
class SpinorResult:
    spinor: np.ndarray
    invariant: bool


def gauge_transform_spinor(g, which: str, tol: float = TOL) -> SpinorResult:
    """Apply a gauge transformation to one of u, v, udot, vdot.

    ``g`` is either :class:`GaugeParams`, in which case undotted spinors get
    G(gamma, phi) and dotted ones its dot conjugate, or an explicit 2x2
    matrix applied as given. Invariance is read off from the action.
    """
    try:
        s = SPINORS[which]
    except KeyError:
        raise ValueError(f"unknown spinor {which!r}; expected one of {sorted(SPINORS)}") from None
    if isinstance(g, GaugeParams):
        matrix = dotted_gauge(g) if which.endswith("dot") else undotted_gauge(g)
    else:
        matrix = np.asarray(g, dtype=np.complex128)
    out = matrix @ s
    return SpinorResult(out, bool(np.max(np.abs(out - s)) <= tol))


def undotted_gauge(g: GaugeParams):
    """G(gamma, phi) on undotted spinors (u is the invariant one)."""
    return gauge_element(g)


def dotted_gauge(g: GaugeParams):
    """Dot-conjugated gauge matrix on dotted spinors: [[1, 0], [-gamma e^{i phi}, 1]]."""
    return np.array([[1.0, 0.0], [-g.gamma * np.exp(1j * g.phi), 1.0]], dtype=np.complex128)


# ---------------------------------------------------------------------------
# Small mass: violation of gauge invariance
# ---------------------------------------------------------------------------

def small_mass_matrices(gamma: float, eps_sq: float) -> tuple[np.ndarray, np.ndarray]:
    """First-order neutrino and antineutrino matrices near zero mass.

    With e^eta sin(theta/2) = gamma and e^-eta sin(theta/2) = eps^2 the
    Wigner-decomposed D and its dot conjugate reduce to

        [[1 - gamma eps^2/2, -eps^2], [gamma, 1 - gamma eps^2/2]]
        [[1 - gamma eps^2/2, -gamma], [eps^2, 1 - gamma eps^2/2]]
    """
    d = 1 - gamma * eps_sq / 2
    nu = np.array([[d, -eps_sq], [gamma, d]], dtype=np.complex128)
    anti = np.array([[d, -gamma], [eps_sq, d]], dtype=np.complex128)
    return nu, anti


def exact_small_mass_matrices(gamma: float, eps_sq: float) -> tuple[np.ndarray, np.ndarray]:
    """Same pair without truncation: diagonal sqrt(1 - gamma eps^2)."""
    d = math.sqrt(1 - gamma * eps_sq)
    nu = np.array([[d, -eps_sq], [gamma, d]], dtype=np.complex128)
    anti = np.array([[d, -gamma], [eps_sq, d]], dtype=np.complex128)
    return nu, anti


@dataclass(frozen=True)
class GaugeViolation:
    state: np.ndarray
    correction: np.ndarray
    eps_sq: float
    norm: float


def gauge_violation(gamma: float, m: float, p: float, which: str = "neutrino", exact: bool = False) -> GaugeViolation:
    """Deviation of the gauge-protected spinor once the particle has mass m.

    eps^2 = gamma (m/2p)^2. The neutrino matrix acts on v = (0, 1), the
    antineutrino matrix on udot = (1, 0); ``norm`` is the max norm of the
    correction column (eps^2 max(1, |gamma|/2) for the truncated matrices).
    """
    if p <= 0:
        raise ValueError("p must be positive")
    if m < 0:
        raise ValueError("m must be non-negative")
    eps_sq = gamma * (m / (2 * p)) ** 2
    build = exact_small_mass_matrices if exact else small_mass_matrices
    nu, anti = build(gamma, eps_sq)
    if which == "neutrino":
        base = SPINORS["v"]
        state = nu @ base
    elif which == "antineutrino":
        base = SPINORS["udot"]
        state = anti @ base
    else:
        raise ValueError(f"which must be 'neutrino' or 'antineutrino', got {which!r}")
    corr = state - base
    return GaugeViolation(state, corr, eps_sq, float(np.max(np.abs(corr))))


def lorentz_of(G) -> np.ndarray:
    """Alias for the 4x4 image, kept next to the gauge helpers for symmetry."""
    return to_four_by_four(G)
