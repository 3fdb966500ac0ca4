"""Polarization optics: Jones vectors, coherency matrices, Stokes parameters.

The coherency matrix C is Hermitian with det C = a^4 sin^2(xi), where xi is the
decoherence angle (0: fully coherent, pi/2: incoherent). Under a unimodular G
it transforms as C -> G C G^dagger, and the Stokes combinations

    S0 = (S11 + S22)/2   S3 = (S11 - S22)/2
    S1 = (S12 + S21)/2   S2 = (S12 - S21)/2i

form a four-vector (S0, S3, S1, S2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mat2core import (
    TOL,
    TOL_PRODUCT,
    FourMomentum,
    dagger,
    det,
    four_vector_matrix,
    hermitian_transform,
    rotation_y,
    rotation_z,
)


@dataclass(frozen=True)
class JonesVector:
    """Two-component field with amplitude ``a``, phase shift ``phi``, attenuations.

    ``mu`` is the overall attenuation and ``eta`` the relative one, so the
    component amplitudes are a e^{-mu} e^{+eta/2} and a e^{-mu} e^{-eta/2}.
    ``k`` and ``omega`` only enter :meth:`field`.
    """

    a: float
    phi: float = 0.0
    mu: float = 0.0
    eta: float = 0.0
    k: float = 0.0
    omega: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a > 0):
            raise ValueError(f"amplitude must be positive, got {self.a!r}")

    @property
    def amplitudes(self) -> tuple[float, float]:
        base = self.a * math.exp(-self.mu)
        return base * math.exp(self.eta / 2), base * math.exp(-self.eta / 2)

    def field(self, z: float = 0.0, t: float = 0.0) -> np.ndarray:
        carrier = np.exp(1j * (self.k * z - self.omega * t))
        a1, a2 = self.amplitudes
        return carrier * np.array([a1 * np.exp(-0.5j * self.phi), a2 * np.exp(0.5j * self.phi)])


@dataclass(frozen=True)
class StokesVector:
    S0: float
    S3: float
    S1: float
    S2: float

    def as_array(self) -> np.ndarray:
        return np.array([self.S0, self.S3, self.S1, self.S2])

    @property
    def radius(self) -> float:
        return math.hypot(self.S1, self.S2)

    @property
    def invariant(self) -> float:
        return self.S0**2 - self.S3**2 - self.S1**2 - self.S2**2


@dataclass(frozen=True)
class CoherencyMatrix:
    S11: float
    S22: float
    S12: complex

    def __post_init__(self):
        if self.S11 < -TOL or self.S22 < -TOL:
            raise ValueError("diagonal elements of a coherency matrix must be non-negative")

    @property
    def S21(self) -> complex:
        return complex(self.S12).conjugate()

    @classmethod
    def from_matrix(cls, M, tol: float = TOL_PRODUCT) -> "CoherencyMatrix":
        M = np.asarray(M, dtype=np.complex128)
        scale = max(1.0, float(np.max(np.abs(M))))
        if np.max(np.abs(M - dagger(M))) > tol * scale:
            raise ValueError("coherency matrix must be Hermitian")
        return cls(float(M[0, 0].real), float(M[1, 1].real), complex(0.5 * (M[0, 1] + np.conj(M[1, 0]))))

    def to_matrix(self) -> np.ndarray:
        return np.array([[self.S11, self.S12], [self.S21, self.S22]], dtype=np.complex128)

    @property
    def det(self) -> float:
        return self.S11 * self.S22 - abs(self.S12) ** 2

    def decoherence_angle(self) -> float:
        """xi from |S12| = sqrt(S11 S22) cos(xi)."""
        norm = math.sqrt(self.S11 * self.S22)
        if norm == 0:
            return 0.0
        return math.acos(min(1.0, abs(self.S12) / norm))


def coherency_from_jones(j: JonesVector, xi: float, phi: float | None = None) -> CoherencyMatrix:
    """Time-averaged coherency matrix with decoherence angle ``xi``.

    The averaging interval is abstracted into cos(xi). ``phi`` defaults to the
    Jones phase. The overall attenuation ``mu`` is left out.
    """
    if not (0.0 <= xi <= math.pi / 2):
        raise ValueError(f"decoherence angle must lie in [0, pi/2], got {xi!r}")
    phase = j.phi if phi is None else phi
    a2 = j.a * j.a
    return CoherencyMatrix(
        S11=a2 * math.exp(j.eta),
        S22=a2 * math.exp(-j.eta),
        S12=a2 * math.cos(xi) * complex(math.cos(phase), -math.sin(phase)),
    )


def transform_coherency(G, C: CoherencyMatrix) -> CoherencyMatrix:
    return CoherencyMatrix.from_matrix(hermitian_transform(G, C.to_matrix()))


def stokes(C: CoherencyMatrix) -> StokesVector:
    S12, S21 = complex(C.S12), C.S21
    return StokesVector(
        S0=(C.S11 + C.S22) / 2,
        S3=(C.S11 - C.S22) / 2,
        S1=((S12 + S21) / 2).real,
        S2=((S12 - S21) / 2j).real,
    )


def unstokes(s: StokesVector) -> CoherencyMatrix:
    return CoherencyMatrix(s.S0 + s.S3, s.S0 - s.S3, complex(s.S1, s.S2))


def stokes_matrix(s: StokesVector) -> np.ndarray:
    """Hermitian image of (S0, S3, S1, S2); equals the transpose of the coherency matrix.

    Consequently stokes(G C G^dagger) = to_four_by_four(conj(G)) applied to stokes(C).
    """
    return four_vector_matrix(s.as_array())


def poincare_radius(C: CoherencyMatrix) -> float:
    return stokes(C).radius


def mass_interpolate(p0: float, xi: float) -> FourMomentum:
    """Four-momentum (p0, p0 cos xi, 0, 0) with mass^2 = (p0 sin xi)^2.

    xi = 0 is the light cone, xi = pi/2 is at rest. Only mass^2 is meaningful
    past pi/2, where the momentum changes sign.
    """
    if not (math.isfinite(p0) and p0 > 0):
        raise ValueError(f"p0 must be positive, got {p0!r}")
    if not (0.0 <= xi <= math.pi):
        raise ValueError(f"xi must lie in [0, pi], got {xi!r}")
    return FourMomentum(p0, p0 * math.cos(xi), 0.0, 0.0)


def mass_circle(p0: float, xi: float) -> tuple[float, float, float]:
    """(energy, mass, momentum) = (p0, p0 sin xi, p0 cos xi)."""
    return p0, p0 * math.sin(xi), p0 * math.cos(xi)


def diagonalize_coherency(C: CoherencyMatrix) -> tuple[np.ndarray, CoherencyMatrix, float]:
    """Unitary U = R(theta) Z(psi) with U C U^dagger diagonal, larger eigenvalue first.

    Z(psi) removes the phase of S12 and the rotation R(theta) does the rest;
    for real S12 the result is the real rotation R(theta). Returns
    (U, diagonal coherency matrix, theta).
    """
    p, q = C.S11, C.S22
    S12 = complex(C.S12)
    r = abs(S12)
    psi = math.atan2(S12.imag, S12.real) if r > 0 else 0.0
    theta = math.atan2(-2 * r, p - q)
    U = rotation_y(theta) @ rotation_z(psi) if psi != 0.0 else rotation_y(theta)
    D = U @ C.to_matrix() @ dagger(U)
    return U, CoherencyMatrix(float(D[0, 0].real), float(D[1, 1].real), complex(0.0)), theta


def coherency_eigenvalues(C: CoherencyMatrix) -> tuple[float, float]:
    half_sum = (C.S11 + C.S22) / 2
    half_gap = math.hypot((C.S11 - C.S22) / 2, abs(C.S12))
    return half_sum + half_gap, half_sum - half_gap


def det_relative_change(G, C: CoherencyMatrix) -> float:
    before = C.det
    after = det(hermitian_transform(G, C.to_matrix())).real
    scale = max(abs(before), C.S11 * C.S22, 1e-300)
    return abs(after - before) / scale
