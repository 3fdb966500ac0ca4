"""Damped harmonic oscillator as a first-order two-by-two system.

The physical displacement obeys ``y'' + 2 mu y' + omega^2 y = 0``. With
``psi = e^{mu t} y`` the pair (psi1, psi2) evolves as

    d/dt psi = [[0, mu - omega], [mu + omega, 0]] psi

and the propagator ``exp(A t)`` has a closed form in each regime: cos/sin for
omega > mu, cosh/sinh for mu > omega, and a lower-triangular matrix at the
critical point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

#: relative band around omega == mu treated as the transition mode
MODE_TOL = 1e-9
#: documented validity range of the near-critical expansion
TRANSITION_EPS_MAX = 0.1


class Mode(enum.Enum):
    OSCILLATION = "oscillation"
    TRANSITION = "transition"
    DAMPING = "damping"


@dataclass(frozen=True)
class OscillatorSystem:
    """omega = sqrt(K/m) natural frequency, mu = b/2m damping rate."""

    omega: float
    mu: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.omega) and self.omega > 0):
            raise ValueError(f"omega must be positive and finite, got {self.omega!r}")
        if not (math.isfinite(self.mu) and self.mu >= 0):
            raise ValueError(f"mu must be non-negative and finite, got {self.mu!r}")

    @classmethod
    def from_physical(cls, mass: float, stiffness: float, friction: float) -> "OscillatorSystem":
        """From m, K, b. The series LRC circuit maps as m->L, b->R, K->1/C."""
        return cls(math.sqrt(stiffness / mass), friction / (2 * mass))

    def mode(self) -> Mode:
        w, m = self.omega, self.mu
        if abs(w - m) <= MODE_TOL * max(w, m):
            return Mode.TRANSITION
        return Mode.OSCILLATION if w > m else Mode.DAMPING

    @property
    def rate(self) -> float:
        """omega' = sqrt(w^2 - mu^2) or mu' = sqrt(mu^2 - w^2); 0 at transition."""
        if self.mode() is Mode.TRANSITION:
            return 0.0
        return math.sqrt(abs((self.omega - self.mu) * (self.omega + self.mu)))

    def generator(self) -> np.ndarray:
        """The matrix A in d/dt psi = A psi."""
        return np.array([[0.0, self.mu - self.omega], [self.mu + self.omega, 0.0]])


@dataclass(frozen=True)
class StateVector:
    """psi = (psi1, psi2). Initial values are the constants C7 = psi1(0), C8 = psi2(0)."""

    psi1: float
    psi2: float

    def as_array(self) -> np.ndarray:
        return np.array([self.psi1, self.psi2], dtype=float)

    @property
    def c7(self) -> float:
        return self.psi1

    @property
    def c8(self) -> float:
        return self.psi2


@dataclass(frozen=True)
class TransitionParams:
    """Near-critical parameters.

    ``eps_mode`` is (mu - omega)/(mu + omega); ``eps_squeeze`` is
    sqrt(gamma) e^{-eta} from the squeeze-sandwich form. Kept separate since the
    two usages share a symbol but not a meaning.
    """

    gamma: float
    eps_mode: float = 0.0
    eta: float = 0.0

    @property
    def eps_squeeze(self) -> float:
        return math.sqrt(self.gamma) * math.exp(-self.eta)

    @classmethod
    def from_system(cls, sys: OscillatorSystem, t: float) -> "TransitionParams":
        return cls(gamma=2 * sys.omega * t, eps_mode=(sys.mu - sys.omega) / (sys.mu + sys.omega))


def _sinc_like(rate: float, t: float, oscillating: bool) -> float:
    """sin(rate t)/rate or sinh(rate t)/rate, finite as rate -> 0."""
    x = rate * t
    if abs(x) < 1e-4:
        x2 = x * x
        sign = -1.0 if oscillating else 1.0
        return t * (1 + sign * x2 / 6 + x2 * x2 / 120)
    return (math.sin(x) if oscillating else math.sinh(x)) / rate


def propagator(sys: OscillatorSystem, t: float) -> np.ndarray:
    """Closed-form exp(A t) for the psi-frame system.

    The off-diagonal factors sqrt((w +- mu)/(w -+ mu)) sin(w' t) are evaluated as
    (w +- mu) sin(w' t)/w', which is regular at the critical point.
    """
    if not math.isfinite(t):
        raise ValueError(f"t must be finite, got {t!r}")
    w, m = sys.omega, sys.mu
    mode = sys.mode()
    if mode is Mode.TRANSITION:
        return np.array([[1.0, 0.0], [2 * w * t, 1.0]])
    rate = sys.rate
    if mode is Mode.OSCILLATION:
        c = math.cos(rate * t)
        s = _sinc_like(rate, t, oscillating=True)
    else:
        c = math.cosh(rate * t)
        s = _sinc_like(rate, t, oscillating=False)
    return np.array([[c, (m - w) * s], [(w + m) * s, c]])


def evolve(sys: OscillatorSystem, initial: StateVector, t: float) -> StateVector:
    psi = propagator(sys, t) @ initial.as_array()
    return StateVector(float(psi[0]), float(psi[1]))


def physical_propagator(sys: OscillatorSystem, t: float) -> np.ndarray:
    """Propagator in the damped frame, y = e^{-mu t} psi."""
    return math.exp(-sys.mu * t) * propagator(sys, t)


def displacement(sys: OscillatorSystem, coeffs: tuple[float, float], t: float) -> float:
    """y(t) for the mode-appropriate textbook form.

    ``coeffs`` is (C1, C2) for oscillation, (C3, C4) for damping and (C5, C6)
    at the critical point:

    * e^{-mu t} [C1 cos(w' t) + C2 sin(w' t)]
    * e^{-mu t} [C3 cosh(mu' t) + C4 sinh(mu' t)]
    * e^{-mu t} [C5 + C6 t]
    """
    if not (math.isfinite(t) and t >= 0):
        raise ValueError(f"t must be finite and non-negative, got {t!r}")
    a, b = coeffs
    env = math.exp(-sys.mu * t)
    mode = sys.mode()
    if mode is Mode.TRANSITION:
        return env * (a + b * t)
    x = sys.rate * t
    if mode is Mode.OSCILLATION:
        return env * (a * math.cos(x) + b * math.sin(x))
    return env * (a * math.cosh(x) + b * math.sinh(x))


def displacement_velocity_coeffs(sys: OscillatorSystem, y0: float, v0: float) -> tuple[float, float]:
    """Constants (C1,C2), (C3,C4) or (C5,C6) matching y(0) = y0, y'(0) = v0."""
    if sys.mode() is Mode.TRANSITION:
        return y0, v0 + sys.mu * y0
    return y0, (v0 + sys.mu * y0) / sys.rate


def transition_family(gamma: float, epsilon: float, side: Mode | None = None) -> np.ndarray:
    """First-order near-critical propagator with fixed lower-left element gamma.

    gamma plays the role of 2 omega t and epsilon = (mu - omega)/(mu + omega).
    Both sides of the critical point share one expression,

        [[1 + eps gamma^2/2, eps gamma], [gamma, 1 + eps gamma^2/2]],

    written as 1 -+ (1/2)(gamma sqrt(-+eps))^2 on the oscillation (eps < 0) and
    damping (eps > 0) sides. ``side`` may be passed to assert which side the
    caller expects; it must agree with the sign of epsilon.
    """
    if side is not None and side is not Mode.TRANSITION:
        expected = Mode.OSCILLATION if epsilon < 0 else Mode.DAMPING
        if epsilon != 0 and side is not expected:
            raise ValueError(f"epsilon={epsilon} lies on the {expected.value} side, not {side.value}")
    if abs(epsilon) > TRANSITION_EPS_MAX:
        raise ValueError(f"|epsilon| must be <= {TRANSITION_EPS_MAX} for the near-critical form")
    if epsilon == 0:
        return np.array([[1.0, 0.0], [gamma, 1.0]])
    if epsilon < 0:
        r = math.sqrt(-epsilon)
        x = gamma * r
        diag = 1 - 0.5 * x * x
        upper = -r * x
    else:
        r = math.sqrt(epsilon)
        x = gamma * r
        diag = 1 + 0.5 * x * x
        upper = r * x
    return np.array([[diag, upper], [gamma, diag]])


def squeeze_sandwich(gamma: float, eta: float, side: Mode) -> np.ndarray:
    """Near-critical matrix as B(-eta) core B(eta) with core entries in eps = sqrt(gamma) e^{-eta}.

    Reproduces [[1 -+ gamma^2 e^{-2eta}/2, -+gamma e^{-2eta}], [gamma, ...]] for
    the oscillation (-) and damping (+) sides.
    """
    eps = math.sqrt(gamma) * math.exp(-eta)
    sign = -1.0 if side is Mode.OSCILLATION else 1.0
    off = math.sqrt(gamma) * eps
    core = np.array([[1 + sign * gamma * eps**2 / 2, sign * off], [off, 1 + sign * gamma * eps**2 / 2]])
    left = np.diag([math.exp(-eta / 2), math.exp(eta / 2)])
    right = np.diag([math.exp(eta / 2), math.exp(-eta / 2)])
    return left @ core @ right


def transition_curves(x) -> tuple[np.ndarray, np.ndarray]:
    """The cos->cosh and -sin->sinh curves joined at the critical point.

    ``x`` is the signed rate variable: x < 0 on the oscillation side (where the
    entries are cos|x| and -sin|x|), x > 0 on the damping side (cosh x, sinh x).
    Continuous with continuous first derivative at x = 0; the cos/cosh branch
    has a jump in its second derivative there.
    """
    x = np.asarray(x, dtype=float)
    ax = np.abs(x)
    diag = np.where(x < 0, np.cos(ax), np.cosh(ax))
    off = np.where(x < 0, -np.sin(ax), np.sinh(ax))
    return diag, off


def signed_rate(sys: OscillatorSystem, t: float) -> float:
    """-omega' t in oscillation mode, +mu' t in damping mode, 0 at transition."""
    mode = sys.mode()
    if mode is Mode.OSCILLATION:
        return -sys.rate * t
    if mode is Mode.DAMPING:
        return sys.rate * t
    return 0.0
