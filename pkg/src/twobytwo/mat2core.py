"""Two-by-two complex matrices, SL(2,c) generators and the Lorentz homomorphism.

Matrices are plain ``numpy`` arrays of shape ``(2, 2)`` and dtype
``complex128``. Four-vectors use the component order **(t, z, x, y)**, not the
more common (t, x, y, z); their Hermitian image is

    X(t, z, x, y) = [[t + z, x - i y],
                     [x + i y, t - z]]

so that ``det X = t^2 - z^2 - x^2 - y^2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: absolute tolerance for algebraic identities on single matrices
TOL = 1e-12
#: tolerance for products of several matrices
TOL_PRODUCT = 1e-10

SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=np.complex128)
IDENTITY = np.eye(2, dtype=np.complex128)

# Hermitian basis in (t, z, x, y) order.
_BASIS = (IDENTITY, SIGMA_3, SIGMA_1, SIGMA_2)


class DeterminantError(ValueError):
    """A matrix required to be unimodular is not."""

    def __init__(self, det: complex, tol: float):
        self.det = det
        self.deviation = abs(det - 1.0)
        super().__init__(f"matrix is not unimodular: |det - 1| = {self.deviation:.3e} > {tol:.1e}")


def mat2(a, b, c, d) -> np.ndarray:
    """Build the matrix [[a, b], [c, d]]."""
    return np.array([[a, b], [c, d]], dtype=np.complex128)


def det(M) -> complex:
    M = np.asarray(M)
    return M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]


def dagger(M) -> np.ndarray:
    return np.conj(np.asarray(M)).T


def is_unimodular(M, tol: float = TOL) -> bool:
    return abs(det(M) - 1.0) <= tol


def is_hermitian(M, tol: float = TOL) -> bool:
    M = np.asarray(M)
    return bool(np.max(np.abs(M - dagger(M))) <= tol)


def require_unimodular(M, tol: float = TOL_PRODUCT) -> np.ndarray:
    M = np.asarray(M, dtype=np.complex128)
    if M.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {M.shape}")
    d = det(M)
    if abs(d - 1.0) > tol:
        raise DeterminantError(d, tol)
    return M


def renormalize(M) -> np.ndarray:
    """Divide by sqrt(det) to remove determinant drift after long products."""
    M = np.asarray(M, dtype=np.complex128)
    d = det(M)
    if d == 0:
        raise DeterminantError(d, 0.0)
    return M / np.sqrt(complex(d))


def commutator(A, B) -> np.ndarray:
    A = np.asarray(A)
    B = np.asarray(B)
    return A @ B - B @ A


def _finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"parameter must be finite, got {v!r}")


# ---------------------------------------------------------------------------
# Group elements
# ---------------------------------------------------------------------------

def rotation_y(theta: float) -> np.ndarray:
    """R(theta) = exp(-i theta J2): rotation about y, half-angle entries."""
    _finite(theta)
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return mat2(c, -s, s, c)


def boost_z(eta: float) -> np.ndarray:
    """B(eta) = exp(-i eta K3) = diag(e^{eta/2}, e^{-eta/2})."""
    _finite(eta)
    return mat2(math.exp(eta / 2), 0, 0, math.exp(-eta / 2))


def squeeze_x(lam: float) -> np.ndarray:
    """S(lambda) = exp(-i lambda K1): boost along x."""
    _finite(lam)
    c, s = math.cosh(lam / 2), math.sinh(lam / 2)
    return mat2(c, s, s, c)


def rotation_z(phi: float) -> np.ndarray:
    """Z(phi) = exp(-i phi J3) = diag(e^{-i phi/2}, e^{i phi/2})."""
    _finite(phi)
    return mat2(np.exp(-0.5j * phi), 0, 0, np.exp(0.5j * phi))


def expm2(A) -> np.ndarray:
    """Exponential of a 2x2 matrix via the Cayley-Hamilton closed form.

    For traceless A with A^2 = s I: exp(A) = cosh(sqrt s) I + sinh(sqrt s)/sqrt s A.
    A trace part is split off as a scalar factor.
    """
    A = np.asarray(A, dtype=np.complex128)
    tr = (A[0, 0] + A[1, 1]) / 2
    A0 = A - tr * IDENTITY
    s = -det(A0)
    r = np.sqrt(s)
    if abs(r) < 1e-8:
        # series to fourth order in r; error below 1e-33 relative
        ch = 1 + s / 2 + s * s / 24
        sh = 1 + s / 6 + s * s / 120
    else:
        ch = np.cosh(r)
        sh = np.sinh(r) / r
    return np.exp(tr) * (ch * IDENTITY + sh * A0)


# ---------------------------------------------------------------------------
# Four-vectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FourVector:
    """Space-time point (t, z, x, y)."""

    t: float
    z: float
    x: float
    y: float

    def as_array(self) -> np.ndarray:
        return np.array([self.t, self.z, self.x, self.y], dtype=float)

    def to_matrix(self) -> np.ndarray:
        return four_vector_matrix(self.as_array())

    @classmethod
    def from_matrix(cls, X) -> "FourVector":
        return cls(*matrix_four_vector(X))

    @property
    def interval(self) -> float:
        return self.t**2 - self.z**2 - self.x**2 - self.y**2


@dataclass(frozen=True)
class FourMomentum:
    """Energy-momentum (p0, pz, px, py)."""

    p0: float
    pz: float
    px: float
    py: float

    def as_array(self) -> np.ndarray:
        return np.array([self.p0, self.pz, self.px, self.py], dtype=float)

    def to_matrix(self) -> np.ndarray:
        return four_vector_matrix(self.as_array())

    @classmethod
    def from_matrix(cls, P) -> "FourMomentum":
        return cls(*matrix_four_vector(P))

    @property
    def mass_sq(self) -> float:
        return self.p0**2 - self.pz**2 - self.px**2 - self.py**2

    def classification(self, tol: float = TOL) -> int:
        """Sign of the squared mass: +1 massive, 0 massless, -1 imaginary mass."""
        m2 = self.mass_sq
        scale = max(1.0, self.p0**2 + self.pz**2 + self.px**2 + self.py**2)
        if abs(m2) <= tol * scale:
            return 0
        return 1 if m2 > 0 else -1


def four_vector_matrix(v) -> np.ndarray:
    """Hermitian image of (t, z, x, y)."""
    t, z, x, y = (float(c) for c in v)
    return mat2(t + z, x - 1j * y, x + 1j * y, t - z)


def matrix_four_vector(X) -> np.ndarray:
    """Inverse of :func:`four_vector_matrix` (takes the Hermitian part)."""
    X = np.asarray(X)
    t = 0.5 * (X[0, 0] + X[1, 1]).real
    z = 0.5 * (X[0, 0] - X[1, 1]).real
    x = 0.5 * (X[0, 1] + X[1, 0]).real
    y = 0.5 * (X[1, 0] - X[0, 1]).imag
    return np.array([t, z, x, y])


def hermitian_transform(G, X, tol: float = TOL_PRODUCT) -> np.ndarray:
    """X' = G X G^dagger for unimodular G and Hermitian X."""
    G = require_unimodular(G, tol)
    X = np.asarray(X, dtype=np.complex128)
    if not is_hermitian(X, tol * max(1.0, float(np.max(np.abs(X))))):
        raise ValueError("X must be Hermitian")
    return G @ X @ dagger(G)


def to_four_by_four(G, tol: float = TOL_PRODUCT) -> np.ndarray:
    """Real 4x4 Lorentz matrix acting on (t, z, x, y) with the same effect as G.

    Built column by column from the action X -> G X G^dagger on the Hermitian
    basis, so any unimodular G is accepted.
    """
    G = require_unimodular(G, tol)
    Gd = dagger(G)
    cols = [matrix_four_vector(G @ e @ Gd) for e in _BASIS]
    return np.column_stack(cols)


def linear_four_by_four(generator) -> np.ndarray:
    """4x4 generator X4 such that exp(-i a X4) = to_four_by_four(exp(-i a X)).

    Obtained from the derivative of the conjugation action; complex in general
    (purely imaginary for the six Lorentz generators).
    """
    X = np.asarray(generator, dtype=np.complex128)
    A = -1j * X
    cols = []
    for e in _BASIS:
        L = A @ e + e @ dagger(A)
        # complex linear read-out, not the Hermitian projection
        cols.append(
            np.array(
                [
                    (L[0, 0] + L[1, 1]) / 2,
                    (L[0, 0] - L[1, 1]) / 2,
                    (L[0, 1] + L[1, 0]) / 2,
                    (L[1, 0] - L[0, 1]) / 2j,
                ]
            )
        )
    return 1j * np.column_stack(cols)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Generator:
    label: str
    two_by_two: np.ndarray
    four_by_four: np.ndarray


def _make_generators() -> dict[str, Generator]:
    out = {}
    for i, s in enumerate((SIGMA_1, SIGMA_2, SIGMA_3), start=1):
        for name, m in ((f"J{i}", 0.5 * s), (f"K{i}", 0.5j * s)):
            m.setflags(write=False)
            four = linear_four_by_four(m)
            four.setflags(write=False)
            out[name] = Generator(name, m, four)
    return out


GENERATORS: dict[str, Generator] = _make_generators()


def generator(label: str) -> Generator:
    try:
        return GENERATORS[label]
    except KeyError:
        raise KeyError(f"unknown generator {label!r}; expected one of {sorted(GENERATORS)}") from None


def levi_civita(i: int, j: int, k: int) -> int:
    """epsilon_{ijk} for indices in {1, 2, 3}."""
    return int((i - j) * (j - k) * (k - i) / 2)
