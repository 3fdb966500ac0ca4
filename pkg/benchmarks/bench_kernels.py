"""Compare the numba and pure-numpy kernels on the workloads the suites run.

    python benchmarks/bench_kernels.py [--systems 100] [--horizon 5] [--batch 100000]

Both implementations are called directly, so the environment flag does not
matter here. The first numba call (compilation or cache load) is timed
separately.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from twobytwo import _kernels as K


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--systems", type=int, default=100, help="(omega, mu) pairs for the RK4 workload")
    p.add_argument("--horizon", type=float, default=5.0, help="integration horizon")
    p.add_argument("--step", type=float, default=1e-5)
    p.add_argument("--batch", type=int, default=100_000, help="matrices for the Lorentz-map workload")
    p.add_argument("--repeat", type=int, default=3)
    a = p.parse_args(argv)

    if not K.HAVE_NUMBA:
        raise SystemExit("numba is unavailable (or disabled by TWOBYTWO_NO_NUMBA); nothing to compare")

    rng = np.random.default_rng(0)
    side = int(round(np.sqrt(a.systems)))
    vals = np.linspace(0.1, 1.0, side)
    omega = np.repeat(vals, side)
    mu = np.tile(vals, side)
    psi0 = np.ascontiguousarray(np.broadcast_to(np.eye(2), (omega.size, 2, 2)))
    t_out = np.linspace(a.horizon / 10, a.horizon, 10)

    t0 = time.perf_counter()
    K._rk4_numba(omega, mu, psi0, t_out, a.step)
    first = time.perf_counter() - t0

    rows = []
    t_nb, r_nb = _time(lambda: K._rk4_numba(omega, mu, psi0, t_out, a.step), a.repeat)
    t_np, r_np = _time(lambda: K._rk4_numpy(omega, mu, psi0, t_out, a.step), 1)
    rows.append((f"rk4 {omega.size} systems, t<={a.horizon:g}, h={a.step:g}", t_nb, t_np, np.max(np.abs(r_nb - r_np))))

    G = rng.normal(size=(a.batch, 2, 2)) + 1j * rng.normal(size=(a.batch, 2, 2))
    G /= np.sqrt(G[:, 0, 0] * G[:, 1, 1] - G[:, 0, 1] * G[:, 1, 0])[:, None, None]
    G = np.ascontiguousarray(G)
    K._lorentz_numba(G[:2])
    t_nb, l_nb = _time(lambda: K._lorentz_numba(G), a.repeat)
    t_np, l_np = _time(lambda: K._lorentz_numpy(G), a.repeat)
    rows.append((f"lorentz map, {a.batch} matrices", t_nb, t_np, np.max(np.abs(l_nb - l_np) / np.maximum(1, np.abs(l_np)))))

    K._matmul2_numba(G[:2], G[:2])
    t_nb, m_nb = _time(lambda: K._matmul2_numba(G, G), a.repeat)
    t_np, m_np = _time(lambda: G @ G, a.repeat)
    rows.append((f"2x2 batch product, {a.batch} matrices", t_nb, t_np, np.max(np.abs(m_nb - m_np))))

    print(f"first numba call (compile or cache load): {first:.2f} s")
    print(f"{'workload':45s} {'numba [s]':>10s} {'numpy [s]':>10s} {'speed-up':>9s} {'max diff':>10s}")
    for name, tn, tp, diff in rows:
        print(f"{name:45s} {tn:10.4f} {tp:10.4f} {tp / tn:9.1f} {diff:10.2e}")


if __name__ == "__main__":
    main()
