#!/usr/bin/env python3
"""Benchmark the hot kernels: numba backend vs the pure-numpy fallback.

Run directly (`python benchmarks/bench_kernels.py`); the backend used by the
package itself is chosen at import time via FLUCTFORCE_BACKEND, but this
script imports both implementations explicitly and times them on identical
workloads, checking agreement as it goes.
"""

import time

import numpy as np

from fluctforce import _impl_numpy
from fluctforce.quadrature import gl_nodes

try:
    from fluctforce import _impl_numba
    HAS_NUMBA = True
except ImportError:
    _impl_numba = None
    HAS_NUMBA = False
    print("numba not importable; timing the numpy fallback only")

SWITCH, NTERMS = 0.5, 12
GLX, GLW = np.polynomial.legendre.leggauss(12)


def workloads():
    r = np.geomspace(1e-3, 60.0, 2_000_000)
    yield "phi_over_r8 (2e6 pts)", "phi_over_r8_arr", (r, SWITCH, NTERMS)
    yield "psi0 (2e6 pts)", "psi0_arr", (r, SWITCH, NTERMS)

    s_nodes, _ = gl_nodes(0.0, 2.0, 96, order=12)
    yield "janus w-profile (1152 nodes)", "w_profile_arr", \
        (s_nodes, 16, 8, GLX, GLW)

    ux, uw = gl_nodes(0.0, 60.0, 64, order=12)
    xx, xw = gl_nodes(0.0, 30.0, 32, order=12)
    yield "wrench 2-D factor (768x384)", "jhat_2d", \
        (ux, uw, xx, xw, 30.0, SWITCH, NTERMS)

    rng = np.random.default_rng(7)
    ra = rng.normal(size=(400_000, 3))
    rb = rng.normal(size=(400_000, 3)) + np.array([0.0, 0.0, 3.0])
    yield "MC pair sums I (4e5 pairs)", "pair_sums_iab", (ra, rb, 1.3, SWITCH, NTERMS)
    yield "MC pair sums J (4e5 pairs)", "pair_sums_jab", (ra, rb, 1.3, SWITCH, NTERMS)


def _time(fn, args, repeats=3):
    fn(*args)  # warm up (JIT compile / cache touch)
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    rows = []
    for label, name, args in workloads():
        t_np, out_np = _time(getattr(_impl_numpy, name), args)
        if HAS_NUMBA:
            t_nb, out_nb = _time(getattr(_impl_numba, name), args)
            a = np.ravel(np.asarray(out_nb, dtype=object)[0]) \
                if isinstance(out_nb, tuple) else np.ravel(out_nb)
            b = np.ravel(np.asarray(out_np, dtype=object)[0]) \
                if isinstance(out_np, tuple) else np.ravel(out_np)
            scale = np.max(np.abs(np.asarray(b, dtype=float))) or 1.0
            agree = np.max(np.abs(np.asarray(a, dtype=float)
                                  - np.asarray(b, dtype=float))) / scale
            rows.append((label, t_np, t_nb, t_np / t_nb, agree))
        else:
            rows.append((label, t_np, None, None, 0.0))

    print(f"{'workload':38s} {'numpy [ms]':>11s} {'numba [ms]':>11s} "
          f"{'speedup':>8s} {'rel dev':>9s}")
    for label, t_np, t_nb, speed, agree in rows:
        if t_nb is None:
            print(f"{label:38s} {1e3 * t_np:11.2f} {'-':>11s} {'-':>8s}")
        else:
            print(f"{label:38s} {1e3 * t_np:11.2f} {1e3 * t_nb:11.2f} "
                  f"{speed:8.1f} {agree:9.1e}")


if __name__ == "__main__":
    main()
