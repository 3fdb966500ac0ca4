"""Hot numeric loops: fixed-step RK4 integration and batched 2x2 -> 4x4 maps.

Each kernel exists twice: a numba ``@njit`` version and a pure-numpy version.
Set ``TWOBYTWO_NO_NUMBA=1`` in the environment (before import) to force the
numpy path; it is also used automatically when numba is not importable.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLE = os.environ.get("TWOBYTWO_NO_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    if _DISABLE:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


BACKEND = "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# RK4 for the first-order oscillator system  dpsi/dt = [[0, mu-w], [mu+w, 0]] psi
# ---------------------------------------------------------------------------

def _rk4_numpy(omega, mu, psi0, t_out, h):
    """Vectorised over systems: omega, mu shape (n,), psi0 shape (n, 2, k)."""
    omega = np.asarray(omega, dtype=np.float64)
    mu = np.asarray(mu, dtype=np.float64)
    up = (mu - omega)[:, None]
    lo = (mu + omega)[:, None]
    psi = np.array(psi0, dtype=np.float64, copy=True)
    out = np.empty((len(t_out),) + psi.shape)
    t = 0.0
    for j, target in enumerate(t_out):
        n_steps = int(round((target - t) / h))
        for _ in range(n_steps):
            a1, a2 = psi[:, 0], psi[:, 1]
            k1a, k1b = up * a2, lo * a1
            b1, b2 = a1 + 0.5 * h * k1a, a2 + 0.5 * h * k1b
            k2a, k2b = up * b2, lo * b1
            c1, c2 = a1 + 0.5 * h * k2a, a2 + 0.5 * h * k2b
            k3a, k3b = up * c2, lo * c1
            d1, d2 = a1 + h * k3a, a2 + h * k3b
            k4a, k4b = up * d2, lo * d1
            psi[:, 0] = a1 + (h / 6.0) * (k1a + 2.0 * k2a + 2.0 * k3a + k4a)
            psi[:, 1] = a2 + (h / 6.0) * (k1b + 2.0 * k2b + 2.0 * k3b + k4b)
        t += n_steps * h
        out[j] = psi
    return out


@njit(cache=True)
def _rk4_numba(omega, mu, psi0, t_out, h):
    n = psi0.shape[0]
    k = psi0.shape[2]
    out = np.empty((t_out.shape[0], n, 2, k))
    for s in range(n):
        up = mu[s] - omega[s]
        lo = mu[s] + omega[s]
        for col in range(k):
            a1 = psi0[s, 0, col]
            a2 = psi0[s, 1, col]
            t = 0.0
            for j in range(t_out.shape[0]):
                n_steps = int(round((t_out[j] - t) / h))
                for _ in range(n_steps):
                    k1a = up * a2
                    k1b = lo * a1
                    k2a = up * (a2 + 0.5 * h * k1b)
                    k2b = lo * (a1 + 0.5 * h * k1a)
                    k3a = up * (a2 + 0.5 * h * k2b)
                    k3b = lo * (a1 + 0.5 * h * k2a)
                    k4a = up * (a2 + h * k3b)
                    k4b = lo * (a1 + h * k3a)
                    a1 = a1 + (h / 6.0) * (k1a + 2.0 * k2a + 2.0 * k3a + k4a)
                    a2 = a2 + (h / 6.0) * (k1b + 2.0 * k2b + 2.0 * k3b + k4b)
                t += n_steps * h
                out[j, s, 0, col] = a1
                out[j, s, 1, col] = a2
    return out


def rk4_first_order(omega, mu, psi0, t_out, h=1e-5):
    """Integrate the psi-frame system for many (omega, mu) pairs at once.

    Parameters
    ----------
    omega, mu : array_like, shape (n,)
    psi0 : array_like, shape (n, 2, k)
        k initial column vectors per system (use the identity to get the
        full propagator).
    t_out : array_like, shape (m,)
        Increasing output times; each gap should be a multiple of ``h``.
    h : float
        Fixed step.

    Returns
    -------
    ndarray, shape (m, n, 2, k)
    """
    omega = np.ascontiguousarray(omega, dtype=np.float64)
    mu = np.ascontiguousarray(mu, dtype=np.float64)
    psi0 = np.ascontiguousarray(psi0, dtype=np.float64)
    t_out = np.ascontiguousarray(t_out, dtype=np.float64)
    if HAVE_NUMBA:
        return _rk4_numba(omega, mu, psi0, t_out, float(h))
    return _rk4_numpy(omega, mu, psi0, t_out, float(h))


# ---------------------------------------------------------------------------
# Second-order RK4 for y'' + 2 mu y' + w^2 y = 0  (independent of the psi frame)
# ---------------------------------------------------------------------------

def _rk4_damped_numpy(omega, mu, y0, v0, t_out, h):
    y, v = float(y0), float(v0)
    out = np.empty(len(t_out))
    t = 0.0
    w2 = omega * omega
    for j, target in enumerate(t_out):
        for _ in range(int(round((target - t) / h))):
            k1y, k1v = v, -2.0 * mu * v - w2 * y
            y2, v2 = y + 0.5 * h * k1y, v + 0.5 * h * k1v
            k2y, k2v = v2, -2.0 * mu * v2 - w2 * y2
            y3, v3 = y + 0.5 * h * k2y, v + 0.5 * h * k2v
            k3y, k3v = v3, -2.0 * mu * v3 - w2 * y3
            y4, v4 = y + h * k3y, v + h * k3v
            k4y, k4v = v4, -2.0 * mu * v4 - w2 * y4
            y += (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
            v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
            t += h
        out[j] = y
    return out


_rk4_damped_numba = njit(cache=True)(_rk4_damped_numpy) if HAVE_NUMBA else None


def rk4_damped(omega, mu, y0, v0, t_out, h=1e-5):
    """Integrate the physical second-order equation; returns y at ``t_out``."""
    t_out = np.ascontiguousarray(t_out, dtype=np.float64)
    if HAVE_NUMBA:
        return _rk4_damped_numba(float(omega), float(mu), float(y0), float(v0), t_out, float(h))
    return _rk4_damped_numpy(float(omega), float(mu), float(y0), float(v0), t_out, float(h))


# ---------------------------------------------------------------------------
# Batched SL(2,c) -> Lorentz map and 2x2 products
# ---------------------------------------------------------------------------
# Lambda_{mn} = (1/2) tr(sigma_m G sigma_n G^dagger) with sigma ordered (t, z, x, y)
# = (I, sigma_3, sigma_1, sigma_2). This is the trace formula, independent of
# the basis-conjugation route used in mat2core.

def _lorentz_numpy(G):
    G = np.asarray(G, dtype=np.complex128)
    sig = np.array(
        [
            [[1, 0], [0, 1]],
            [[1, 0], [0, -1]],
            [[0, 1], [1, 0]],
            [[0, -1j], [1j, 0]],
        ],
        dtype=np.complex128,
    )
    Gd = np.conj(np.swapaxes(G, -1, -2))
    # (n, 4, 2, 2): G sigma_n G^dagger for every n
    conj = np.einsum("...ij,njk,...kl->...nil", G, sig, Gd)
    lam = 0.5 * np.einsum("mji,...nij->...mn", sig, conj)
    return lam.real


@njit(cache=True)
def _lorentz_numba(G):
    n = G.shape[0]
    out = np.empty((n, 4, 4))
    for s in range(n):
        a = G[s, 0, 0]
        b = G[s, 0, 1]
        c = G[s, 1, 0]
        d = G[s, 1, 1]
        aa = (a * np.conj(a)).real
        bb = (b * np.conj(b)).real
        cc = (c * np.conj(c)).real
        dd = (d * np.conj(d)).real
        ab = a * np.conj(b)
        cd = c * np.conj(d)
        ac = a * np.conj(c)
        bd = b * np.conj(d)
        ad = a * np.conj(d)
        bc = b * np.conj(c)
        out[s, 0, 0] = 0.5 * (aa + bb + cc + dd)
        out[s, 0, 1] = 0.5 * (aa - bb + cc - dd)
        out[s, 0, 2] = (ab + cd).real
        out[s, 0, 3] = (ab + cd).imag
        out[s, 1, 0] = 0.5 * (aa + bb - cc - dd)
        out[s, 1, 1] = 0.5 * (aa - bb - cc + dd)
        out[s, 1, 2] = (ab - cd).real
        out[s, 1, 3] = (ab - cd).imag
        out[s, 2, 0] = (ac + bd).real
        out[s, 2, 1] = (ac - bd).real
        out[s, 2, 2] = (ad + bc).real
        out[s, 2, 3] = (ad - bc).imag
        out[s, 3, 0] = -(ac + bd).imag
        out[s, 3, 1] = -(ac - bd).imag
        out[s, 3, 2] = -(ad + bc).imag
        out[s, 3, 3] = (ad - bc).real
    return out


def lorentz_batch(G):
    """Four-by-four Lorentz matrices for a stack of 2x2 matrices, shape (n, 2, 2)."""
    G = np.ascontiguousarray(G, dtype=np.complex128)
    if G.ndim == 2:
        G = G[None]
    if HAVE_NUMBA:
        return _lorentz_numba(G)
    return _lorentz_numpy(G)


@njit(cache=True)
def _matmul2_numba(A, B):
    n = A.shape[0]
    out = np.empty((n, 2, 2), dtype=np.complex128)
    for s in range(n):
        out[s, 0, 0] = A[s, 0, 0] * B[s, 0, 0] + A[s, 0, 1] * B[s, 1, 0]
        out[s, 0, 1] = A[s, 0, 0] * B[s, 0, 1] + A[s, 0, 1] * B[s, 1, 1]
        out[s, 1, 0] = A[s, 1, 0] * B[s, 0, 0] + A[s, 1, 1] * B[s, 1, 0]
        out[s, 1, 1] = A[s, 1, 0] * B[s, 0, 1] + A[s, 1, 1] * B[s, 1, 1]
    return out


def matmul2_batch(A, B):
    """Elementwise-stack product of (n, 2, 2) complex arrays."""
    A = np.ascontiguousarray(A, dtype=np.complex128)
    B = np.ascontiguousarray(B, dtype=np.complex128)
    if HAVE_NUMBA:
        return _matmul2_numba(A, B)
    return A @ B
