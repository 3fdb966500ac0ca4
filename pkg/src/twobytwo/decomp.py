"""Trace classes and decompositions of real unimodular (Sp(2)) matrices.

Branch conventions, since none are canonical:

* Bargmann: ``M = R(alpha1) Sq(chi) R(alpha2)`` with ``Sq(chi) =
  [[cosh chi, sinh chi], [sinh chi, cosh chi]]``; the equalizing rotation
  ``delta = (alpha1 - alpha2)/2`` is reported in (-pi/2, pi/2], alpha in
  (-pi, pi], chi any real.
* Wigner: ``M = sign * B(eta) core B(-eta)`` where core is R(theta) with
  theta in (0, 2pi), S(lambda) with lambda != 0 real, or a unit triangular
  matrix. ``sign = -1`` carries the factored-out ``-I`` for matrices the
  sandwich cannot reach directly.
* Iwasawa: ``M = R(theta) B(eta) [[1, gamma], [0, 1]]``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .mat2core import TOL_PRODUCT, boost_z, det, rotation_y, squeeze_x

#: absolute band |trace| - 2 treated as parabolic
TRACE_TOL = 1e-9


class TraceClass(enum.Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


class WignerKind(enum.Enum):
    MASSIVE_LIKE = "massive"
    MASSLESS_LIKE = "massless"
    IMAGINARY_LIKE = "imaginary"


KIND_OF_CLASS = {
    TraceClass.ELLIPTIC: WignerKind.MASSIVE_LIKE,
    TraceClass.PARABOLIC: WignerKind.MASSLESS_LIKE,
    TraceClass.HYPERBOLIC: WignerKind.IMAGINARY_LIKE,
}


def _real_unimodular(M, tol: float = TOL_PRODUCT) -> np.ndarray:
    M = np.asarray(M)
    if M.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {M.shape}")
    if np.iscomplexobj(M):
        if np.max(np.abs(M.imag)) > tol:
            raise ValueError("matrix has non-real entries; Sp(2) decompositions need a real matrix")
        M = M.real
    M = M.astype(float)
    d = det(M)
    if abs(d - 1.0) > tol:
        raise ValueError(f"matrix is not unimodular: det = {d!r}")
    return M


def classify(M) -> TraceClass:
    """Elliptic / parabolic / hyperbolic by |trace| against 2 (band TRACE_TOL)."""
    M = _real_unimodular(M)
    tr = abs(M[0, 0] + M[1, 1])
    if abs(tr - 2.0) <= TRACE_TOL:
        return TraceClass.PARABOLIC
    return TraceClass.ELLIPTIC if tr < 2.0 else TraceClass.HYPERBOLIC


def _rot(angle: float) -> np.ndarray:
    return rotation_y(angle).real


def _sq(chi: float) -> np.ndarray:
    # Sq(chi) = S(2 chi): full-angle hyperbolic entries
    return squeeze_x(2 * chi).real


# ---------------------------------------------------------------------------
# Bargmann
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BargmannParams:
    alpha1: float
    alpha2: float
    chi: float

    @property
    def alpha(self) -> float:
        return 0.5 * (self.alpha1 + self.alpha2)

    @property
    def delta(self) -> float:
        return 0.5 * (self.alpha1 - self.alpha2)

    @classmethod
    def from_alpha_delta(cls, alpha: float, chi: float, delta: float = 0.0) -> "BargmannParams":
        return cls(alpha + delta, alpha - delta, chi)


def equidiagonal(alpha: float, chi: float, chi_sign: int = 1) -> np.ndarray:
    """Closed form of R(alpha) Sq(chi) R(alpha).

    ``chi_sign=-1`` gives the boost-sandwich variant with sinh(chi) negated.
    """
    ch = math.cosh(chi)
    sh = chi_sign * math.sinh(chi)
    ca, sa = math.cos(alpha), math.sin(alpha)
    return np.array([[ch * ca, sh - ch * sa], [sh + ch * sa, ch * ca]])


def bargmann_compose(p: BargmannParams, chi_sign: int = 1) -> np.ndarray:
    """R(alpha1) Sq(chi) R(alpha2), evaluated through the equidiagonal closed form."""
    return _rot(p.delta) @ equidiagonal(p.alpha, p.chi, chi_sign) @ _rot(-p.delta)


def bargmann_product(p: BargmannParams, chi_sign: int = 1) -> np.ndarray:
    """The literal three-factor product, for cross-checking :func:`bargmann_compose`."""
    return _rot(p.alpha1) @ _sq(chi_sign * p.chi) @ _rot(p.alpha2)


def equalizing_angle(M) -> float:
    """delta in (-pi/2, pi/2] such that R(-delta) M R(delta) has equal diagonal entries."""
    M = np.asarray(M, dtype=float)
    r = 0.5 * (M[0, 0] - M[1, 1])
    s = 0.5 * (M[0, 1] + M[1, 0])
    if r == 0.0:
        return 0.0
    delta = math.atan2(-r, s)
    if delta <= -math.pi / 2:
        delta += math.pi
    elif delta > math.pi / 2:
        delta -= math.pi
    return delta


def bargmann_decompose(M) -> tuple[float, BargmannParams]:
    """Return (delta, params) with M = R(delta) equidiagonal(alpha, chi) R(-delta)."""
    M = _real_unimodular(M)
    delta = equalizing_angle(M)
    core = _rot(-delta) @ M @ _rot(delta)
    if abs(core[0, 0] - core[1, 1]) > TOL_PRODUCT * max(1.0, float(np.max(np.abs(M)))):
        raise ArithmeticError(f"rotation by delta={delta} failed to equalize the diagonal: {core}")
    a = 0.5 * (core[0, 0] + core[1, 1])
    b, c = core[0, 1], core[1, 0]
    chi = math.asinh(0.5 * (b + c))
    alpha = math.atan2(0.5 * (c - b), a)
    return delta, BargmannParams.from_alpha_delta(alpha, chi, delta)


# ---------------------------------------------------------------------------
# Wigner
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WignerParams:
    """Sandwich parameters. ``value`` is theta, lambda or gamma by ``kind``.

    ``eta`` is unused (0) for the massless-like kind, whose triangular core is
    lower (``lower=True``) or upper.
    """

    kind: WignerKind
    value: float
    eta: float = 0.0
    sign: int = 1
    lower: bool = True

    @property
    def theta(self) -> float:
        self._expect(WignerKind.MASSIVE_LIKE)
        return self.value

    @property
    def lam(self) -> float:
        self._expect(WignerKind.IMAGINARY_LIKE)
        return self.value

    @property
    def gamma(self) -> float:
        self._expect(WignerKind.MASSLESS_LIKE)
        return self.value

    def _expect(self, kind: WignerKind) -> None:
        if self.kind is not kind:
            raise AttributeError(f"{self.kind.value}-like parameters have no {kind.value} parameter")


def _core(kind: WignerKind, value: float, lower: bool) -> np.ndarray:
    if kind is WignerKind.MASSIVE_LIKE:
        return _rot(value)
    if kind is WignerKind.IMAGINARY_LIKE:
        return squeeze_x(value).real
    return np.array([[1.0, 0.0], [value, 1.0]]) if lower else np.array([[1.0, value], [0.0, 1.0]])


def wigner_compose(p: WignerParams) -> np.ndarray:
    """sign * B(eta) core B(-eta)."""
    if p.kind is WignerKind.MASSLESS_LIKE:
        return p.sign * _core(p.kind, p.value, p.lower)
    B = boost_z(p.eta).real
    Binv = boost_z(-p.eta).real
    return p.sign * (B @ _core(p.kind, p.value, p.lower) @ Binv)


def wigner_decompose(M, tol: float = TOL_PRODUCT) -> WignerParams:
    """Decompose an equidiagonal real unimodular matrix into a boost sandwich.

    Massive-like:   [[cos(t/2), -e^{eta} sin(t/2)], [e^{-eta} sin(t/2), cos(t/2)]]
    Imaginary-like: [[cosh(l/2), e^{eta} sinh(l/2)], [e^{-eta} sinh(l/2), cosh(l/2)]]
    Massless-like:  [[1, 0], [gamma, 1]]  (or its transpose)
    """
    M = _real_unimodular(M, tol)
    scale = max(1.0, float(np.max(np.abs(M))))
    if abs(M[0, 0] - M[1, 1]) > tol * scale:
        raise ValueError("matrix is not equidiagonal; apply bargmann_decompose first")
    a = 0.5 * (M[0, 0] + M[1, 1])
    b, c = M[0, 1], M[1, 0]
    cls = classify(M)
    if cls is TraceClass.PARABOLIC:
        sign = 1 if a > 0 else -1
        b, c = sign * b, sign * c
        if abs(c) >= abs(b):
            return WignerParams(WignerKind.MASSLESS_LIKE, c, 0.0, sign, lower=True)
        return WignerParams(WignerKind.MASSLESS_LIKE, b, 0.0, sign, lower=False)
    if cls is TraceClass.ELLIPTIC:
        sign = 1 if c > 0 else -1
        a, b, c = sign * a, sign * b, sign * c
        theta = 2.0 * math.acos(max(-1.0, min(1.0, a)))
        eta = 0.5 * math.log(-b / c)
        return WignerParams(WignerKind.MASSIVE_LIKE, theta, eta, sign)
    sign = 1 if a > 0 else -1
    a, b, c = sign * a, sign * b, sign * c
    lam = 2.0 * math.acosh(a) * (1.0 if c > 0 else -1.0)
    eta = 0.5 * math.log(b / c)
    return WignerParams(WignerKind.IMAGINARY_LIKE, lam, eta, sign)


def wigner_power(p: WignerParams, n: int) -> np.ndarray:
    """[M]^n through the sandwich: B(eta) core^n B(-eta), core^n in closed form."""
    if n < 0:
        raise ValueError("n must be non-negative")
    core_n = {
        WignerKind.MASSIVE_LIKE: lambda: _rot(n * p.value),
        WignerKind.IMAGINARY_LIKE: lambda: squeeze_x(n * p.value).real,
        WignerKind.MASSLESS_LIKE: lambda: _core(p.kind, n * p.value, p.lower),
    }[p.kind]()
    sign = p.sign**n
    if p.kind is WignerKind.MASSLESS_LIKE:
        return sign * core_n
    return sign * (boost_z(p.eta).real @ core_n @ boost_z(-p.eta).real)


def power_trace(p: WignerParams, n: int) -> float:
    """Closed-form trace of the n-th power; independent of eta."""
    sign = p.sign**n
    if p.kind is WignerKind.MASSIVE_LIKE:
        return sign * 2.0 * math.cos(n * p.value / 2)
    if p.kind is WignerKind.IMAGINARY_LIKE:
        return sign * 2.0 * math.cosh(n * p.value / 2)
    return sign * 2.0


def decompose(M) -> tuple[float, BargmannParams, WignerParams]:
    """Bargmann step followed by the Wigner step on the equidiagonal core."""
    delta, bp = bargmann_decompose(M)
    core = equidiagonal(bp.alpha, bp.chi)
    return delta, bp, wigner_decompose(core)


# ---------------------------------------------------------------------------
# Iwasawa
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IwasawaParams:
    theta: float
    eta: float
    gamma: float


def iwasawa_decompose(M) -> IwasawaParams:
    """M = R(theta) B(eta) [[1, gamma], [0, 1]] (Gram-Schmidt on the columns)."""
    M = _real_unimodular(M)
    r11 = math.hypot(M[0, 0], M[1, 0])
    theta = 2.0 * math.atan2(M[1, 0], M[0, 0])
    q0 = M[:, 0] / r11
    r12 = float(q0 @ M[:, 1])
    return IwasawaParams(theta, 2.0 * math.log(r11), r12 / r11)


def iwasawa_compose(p: IwasawaParams) -> np.ndarray:
    return _rot(p.theta) @ boost_z(p.eta).real @ np.array([[1.0, p.gamma], [0.0, 1.0]])


# ---------------------------------------------------------------------------
# Conjugate transformations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Conjugates:
    D: np.ndarray
    Ddot: np.ndarray
    Ddag: np.ndarray
    Ddotdag: np.ndarray


def conjugates(p: BargmannParams) -> Conjugates:
    """D, its dot conjugate (boost reversed) and both Hermitian conjugates."""
    ch, sh = math.cosh(p.chi), math.sinh(p.chi)
    ca, sa = math.cos(p.alpha), math.sin(p.alpha)
    d = ca * ch
    D = np.array([[d, sh - sa * ch], [sh + sa * ch, d]])
    Ddot = np.array([[d, -sh - sa * ch], [-sh + sa * ch, d]])
    Ddag = np.array([[d, sh + sa * ch], [sh - sa * ch, d]])
    Ddotdag = np.array([[d, -sh + sa * ch], [-sh - sa * ch, d]])
    return Conjugates(D, Ddot, Ddag, Ddotdag)


def inverse2(M) -> np.ndarray:
    """Inverse of a unimodular 2x2 matrix (adjugate)."""
    M = np.asarray(M)
    return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]])

