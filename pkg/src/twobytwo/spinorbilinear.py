"""Bilinear products of SL(2,c) spinors.

The four spinors u, v (undotted) and udot, vdot (dotted) are eigenvectors of
Q(eta, phi) = B(eta) Z(phi) and its dotted partner, with weights

    u: e^{(eta - i phi)/2}      v: e^{-(eta - i phi)/2}
    udot: e^{-(eta + i phi)/2}  vdot: e^{(eta + i phi)/2}

Bilinears are kept symbolic: a :class:`Bilinear` is a linear combination of
ordered spinor pairs with complex coefficients. Numbers enter only through
:func:`q_transform`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .littlegroup import gauge_transform_spinor

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True, order=True)
class SpinorSymbol:
    base: str
    dotted: bool = False

    def __post_init__(self):
        if self.base not in ("u", "v"):
            raise ValueError(f"spinor base must be 'u' or 'v', got {self.base!r}")

    @property
    def name(self) -> str:
        return self.base + ("dot" if self.dotted else "")

    def dot(self) -> "SpinorSymbol":
        return SpinorSymbol(self.base, not self.dotted)

    def __str__(self) -> str:
        return self.name


U = SpinorSymbol("u")
V = SpinorSymbol("v")
UDOT = SpinorSymbol("u", True)
VDOT = SpinorSymbol("v", True)
SPINOR_SYMBOLS = (U, V, UDOT, VDOT)


def q_transform(eta: float, phi: float, s: SpinorSymbol) -> tuple[SpinorSymbol, complex]:
    """Action of Q (undotted) or Qdot (dotted): the spinor is an eigenvector."""
    sign_base = 1.0 if s.base == "u" else -1.0
    if s.dotted:
        # Qdot = diag(e^{-(eta + i phi)/2}, e^{(eta + i phi)/2})
        w = cmath.exp(-sign_base * complex(eta, phi) / 2)
    else:
        w = cmath.exp(sign_base * complex(eta, -phi) / 2)
    return s, w


def weight_exponents(s: SpinorSymbol) -> tuple[float, float]:
    """(power of e^eta, power of e^{i phi}) carried by a single spinor."""
    _, w_eta = q_transform(1.0, 0.0, s)
    _, w_phi = q_transform(0.0, 1.0, s)
    return round(math.log(abs(w_eta)) * 2) / 2, round(cmath.phase(w_phi) * 2) / 2


Pair = tuple[SpinorSymbol, SpinorSymbol]


class Bilinear:
    """Linear combination sum_k c_k (left_k right_k) of ordered spinor pairs."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Pair, complex] | None = None):
        clean = {}
        for pair, c in (terms or {}).items():
            c = complex(c)
            if c != 0:
                clean[pair] = clean.get(pair, 0) + c
        self._terms = MappingProxyType(dict(sorted(clean.items())))

    @classmethod
    def pair(cls, left: SpinorSymbol, right: SpinorSymbol, coefficient: complex = 1.0) -> "Bilinear":
        return cls({(left, right): coefficient})

    @property
    def terms(self) -> Mapping[Pair, complex]:
        return self._terms

    def __add__(self, other: "Bilinear") -> "Bilinear":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Bilinear(out)

    def __neg__(self) -> "Bilinear":
        return Bilinear({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Bilinear") -> "Bilinear":
        return self + (-other)

    def __mul__(self, scalar: complex) -> "Bilinear":
        return Bilinear({k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> "Bilinear":
        return self * (1 / scalar)

    def isclose(self, other: "Bilinear", tol: float = 1e-12) -> bool:
        keys = set(self._terms) | set(other._terms)
        return all(abs(self._terms.get(k, 0) - other._terms.get(k, 0)) <= tol for k in keys)

    def __eq__(self, other) -> bool:
        return isinstance(other, Bilinear) and dict(self._terms) == dict(other._terms)

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "Bilinear(0)"
        parts = [f"({c:.6g}){l.name}{r.name}" for (l, r), c in self._terms.items()]
        return "Bilinear(" + " + ".join(parts) + ")"

    def transform(self, eta: float, phi: float) -> "Bilinear":
        """Apply Q and Qdot to every constituent spinor."""
        out = {}
        for (l, r), c in self._terms.items():
            _, wl = q_transform(eta, phi, l)
            _, wr = q_transform(eta, phi, r)
            out[(l, r)] = c * wl * wr
        return Bilinear(out)

    def evaluate(self, values: Mapping[Pair, complex]) -> complex:
        return sum(c * values[k] for k, c in self._terms.items())


def bl(left: SpinorSymbol, right: SpinorSymbol) -> Bilinear:
    return Bilinear.pair(left, right)


def bilinear_weight(b: Bilinear, eta: float, phi: float, tol: float = 1e-12) -> complex:
    """Common weight of every term in ``b`` under (eta, phi).

    Raises ValueError when the terms carry different weights, as for
    e^eta u vdot + e^-eta v udot.
    """
    if not b.terms:
        raise ValueError("zero bilinear has no weight")
    weights = []
    for l, r in b.terms:
        weights.append(q_transform(eta, phi, l)[1] * q_transform(eta, phi, r)[1])
    w0 = weights[0]
    if any(abs(w - w0) > tol * max(1.0, abs(w0)) for w in weights[1:]):
        raise ValueError(f"{b!r} is not an eigen-combination under (eta={eta}, phi={phi})")
    return w0


# ---------------------------------------------------------------------------
# Dot conjugation (space inversion)
# ---------------------------------------------------------------------------

def dot_conjugate(b: Bilinear) -> Bilinear:
    """Swap dotted and undotted spinors.

    Same-type pairs pick up a minus sign ((uu)dot = -udot udot); mixed pairs
    such as u vdot -> udot v do not. The map is an involution.
    """
    out = {}
    for (l, r), c in b.terms.items():
        sign = -1.0 if l.dotted == r.dotted else 1.0
        key = (l.dot(), r.dot())
        out[key] = out.get(key, 0) + sign * c
    return Bilinear(out)


# ---------------------------------------------------------------------------
# The sixteen combinations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpinBlock:
    label: str
    spin1: tuple[Bilinear, Bilinear, Bilinear]
    spin0: Bilinear

    @property
    def members(self) -> tuple[Bilinear, ...]:
        return (*self.spin1, self.spin0)


def _make_table() -> tuple[SpinBlock, ...]:
    def block(label, x1, y1, x2, y2):
        # x1, y1 play the role of (u, v) on the left; x2, y2 on the right
        return SpinBlock(
            label,
            (bl(x1, x2), (bl(x1, y2) + bl(y1, x2)) / _SQRT2, bl(y1, y2)),
            (bl(x1, y2) - bl(y1, x2)) / _SQRT2,
        )

    return (
        block("undotted", U, V, U, V),
        block("dotted", UDOT, VDOT, UDOT, VDOT),
        block("undotted-dotted", U, V, UDOT, VDOT),
        block("dotted-undotted", UDOT, VDOT, U, V),
    )


#: Four blocks of (three spin-1, one spin-0) bilinears.
BILINEAR_TABLE: tuple[SpinBlock, ...] = _make_table()


def all_bilinears() -> list[Bilinear]:
    return [m for blk in BILINEAR_TABLE for m in blk.members]


def basis_pairs() -> list[Pair]:
    return [(l, r) for l in SPINOR_SYMBOLS for r in SPINOR_SYMBOLS]


def coefficient_matrix(bilinears) -> np.ndarray:
    """Rows: bilinears; columns: the 16 ordered pairs."""
    pairs = basis_pairs()
    return np.array([[b.terms.get(p, 0) for p in pairs] for b in bilinears], dtype=complex)


def transformed_table(eta: float, phi: float) -> tuple[SpinBlock, ...]:
    return tuple(
        SpinBlock(blk.label, tuple(m.transform(eta, phi) for m in blk.spin1), blk.spin0.transform(eta, phi))
        for blk in BILINEAR_TABLE
    )


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------

def scalar_S() -> Bilinear:
    return (bl(U, V) - bl(V, U)) / _SQRT2


def scalar_S_dot() -> Bilinear:
    return -(bl(UDOT, VDOT) - bl(VDOT, UDOT)) / _SQRT2


def scalars() -> tuple[Bilinear, Bilinear]:
    """(S_plus, S_minus): scalar and pseudoscalar."""
    S, Sd = scalar_S(), scalar_S_dot()
    return (S + Sd) / _SQRT2, (S - Sd) / _SQRT2


# ---------------------------------------------------------------------------
# Four-vectors
# ---------------------------------------------------------------------------

def four_vector_grid() -> tuple[tuple[tuple[Bilinear, Bilinear], tuple[Bilinear, Bilinear]], ...]:
    """(U, Udot) as 2x2 grids of bilinears.

    U is placed so that each entry has the weight of the matching entry of
    [[t + z, x - iy], [x + iy, t - z]] under Q; Udot is its dot conjugate and
    follows the space-inverted pattern.
    """
    Ug = ((bl(U, VDOT), bl(U, UDOT)), (bl(V, VDOT), bl(V, UDOT)))
    Udg = tuple(tuple(dot_conjugate(e) for e in row) for row in Ug)
    return Ug, Udg


def weight_grid(grid, eta: float, phi: float) -> np.ndarray:
    return np.array([[bilinear_weight(e, eta, phi) for e in row] for row in grid])


def fourvector_from_bilinears(eta: float, phi: float):
    """Transformed U and Udot grids with their weight grids.

    Returns ((U', weights_U), (Udot', weights_Udot)).
    """
    Ug, Udg = four_vector_grid()
    out = []
    for grid in (Ug, Udg):
        tgrid = tuple(tuple(e.transform(eta, phi) for e in row) for row in grid)
        out.append((tgrid, weight_grid(grid, eta, phi)))
    return tuple(out)


# ---------------------------------------------------------------------------
# Second-rank tensor
# ---------------------------------------------------------------------------

def _sym(a, b):
    return bl(a, b) + bl(b, a)


def tensor_bilinears() -> dict[str, Bilinear]:
    """Symbolic f_i and g_i."""
    uu, vv = bl(U, U), bl(V, V)
    udud, vdvd = bl(UDOT, UDOT), bl(VDOT, VDOT)
    s, sd = _sym(U, V), _sym(UDOT, VDOT)
    return {
        "f_z": (s - sd) / 2,
        "g_z": (s + sd) / 2j,
        "f_x": ((uu - udud) + (vv - vdvd)) / 2,
        "f_y": ((uu - udud) - (vv - vdvd)) / 2j,
        "g_x": ((uu + udud) + (vv + vdvd)) / 2j,
        "g_y": -((uu + udud) - (vv + vdvd)) / 2,
    }


@dataclass(frozen=True)
class BilinearValues:
    """Numeric values of the six independent same-type bilinears.

    ``uv_sym`` stands for (uv + vu) and ``udvd_sym`` for (udot vdot + vdot udot).
    """

    uu: complex = 0.0
    vv: complex = 0.0
    udud: complex = 0.0
    vdvd: complex = 0.0
    uv_sym: complex = 0.0
    udvd_sym: complex = 0.0

    def as_mapping(self) -> dict[Pair, complex]:
        return {
            (U, U): self.uu,
            (V, V): self.vv,
            (UDOT, UDOT): self.udud,
            (VDOT, VDOT): self.vdvd,
            (U, V): self.uv_sym / 2,
            (V, U): self.uv_sym / 2,
            (UDOT, VDOT): self.udvd_sym / 2,
            (VDOT, UDOT): self.udvd_sym / 2,
        }

    def dot_conjugate(self) -> "BilinearValues":
        """Values after space inversion, following the same-type sign rule."""
        return BilinearValues(
            uu=-self.udud, vv=-self.vdvd, udud=-self.uu, vdvd=-self.vv,
            uv_sym=-self.udvd_sym, udvd_sym=-self.uv_sym,
        )

    def transform(self, eta: float, phi: float) -> "BilinearValues":
        def w(a, b):
            return q_transform(eta, phi, a)[1] * q_transform(eta, phi, b)[1]

        return BilinearValues(
            uu=w(U, U) * self.uu, vv=w(V, V) * self.vv,
            udud=w(UDOT, UDOT) * self.udud, vdvd=w(VDOT, VDOT) * self.vdvd,
            uv_sym=w(U, V) * self.uv_sym, udvd_sym=w(UDOT, VDOT) * self.udvd_sym,
        )


@dataclass(frozen=True)
class FieldTensor:
    """f = (f_z, f_x, f_y), g = (g_z, g_x, g_y) and the antisymmetric 4x4 T on (t, z, x, y).

    Components are complex in general because of the 1/2i prefactors.
    """

    f: tuple[complex, complex, complex]
    g: tuple[complex, complex, complex]

    @property
    def T(self) -> np.ndarray:
        fz, fx, fy = self.f
        gz, gx, gy = self.g
        return np.array(
            [
                [0, -gz, -gx, -gy],
                [gz, 0, -fy, fx],
                [gx, fy, 0, -fz],
                [gy, -fx, fz, 0],
            ],
            dtype=complex,
        )

    @property
    def E(self) -> np.ndarray:
        """Electric-like part (g_x, g_y) in the transverse plane."""
        return np.array(self.g[1:], dtype=complex)

    @property
    def B(self) -> np.ndarray:
        """Magnetic-like part (f_x, f_y)."""
        return np.array(self.f[1:], dtype=complex)

    @property
    def E_plus(self) -> complex:
        return self.g[1] + 1j * self.g[2]

    @property
    def E_minus(self) -> complex:
        return self.g[1] - 1j * self.g[2]

    @property
    def B_plus(self) -> complex:
        return self.f[1] + 1j * self.f[2]

    @property
    def B_minus(self) -> complex:
        return self.f[1] - 1j * self.f[2]


def tensor_components(values: BilinearValues) -> FieldTensor:
    sym = tensor_bilinears()
    vals = values.as_mapping()
    ev = {k: b.evaluate(vals) for k, b in sym.items()}
    return FieldTensor((ev["f_z"], ev["f_x"], ev["f_y"]), (ev["g_z"], ev["g_x"], ev["g_y"]))


def parity(values: BilinearValues) -> FieldTensor:
    return tensor_components(values.dot_conjugate())


def massless_limit_tensor(uu: complex, vdvd: complex) -> FieldTensor:
    """Keep only the bilinears that grow with the boost: uu and vdot vdot.

    The remaining terms vanish relative to these, so the tensor is the
    general one evaluated at vv = udot udot = 0 and zero z-components:

        B = (f_x, f_y) = ((uu - vdvd)/2, (uu + vdvd)/2i)
        E = (g_x, g_y) = ((uu + vdvd)/2i, -(uu - vdvd)/2)
    """
    return tensor_components(BilinearValues(uu=uu, vdvd=vdvd))


def massless_identities(F: FieldTensor, tol: float = 1e-12) -> dict[str, float]:
    """Residuals of E_x = B_y, E_y = -B_x, E.B = 0 and E.E = B.B (complex bilinear dot)."""
    E, B = F.E, F.B
    return {
        "Ex_minus_By": abs(E[0] - B[1]),
        "Ey_plus_Bx": abs(E[1] + B[0]),
        "E_dot_B": abs(E @ B),
        "EE_minus_BB": abs(E @ E - B @ B),
        "normE_minus_normB": abs(np.linalg.norm(E) - np.linalg.norm(B)),
    }


# ---------------------------------------------------------------------------
# Gauge behaviour of the massless limit
# ---------------------------------------------------------------------------

def gauge_invariance_of_limit(gamma: float) -> dict[str, bool]:
    """Invariance of each spinor under the limit's triangular gauge matrices.

    [[1, -gamma], [0, 1]] acts on undotted and [[1, 0], [-gamma, 1]] on
    dotted spinors.
    """
    undotted = np.array([[1.0, -gamma], [0.0, 1.0]])
    dotted = np.array([[1.0, 0.0], [-gamma, 1.0]])
    return {
        s.name: gauge_transform_spinor(dotted if s.dotted else undotted, s.name).invariant
        for s in SPINOR_SYMBOLS
    }
