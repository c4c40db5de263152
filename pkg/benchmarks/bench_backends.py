"""Timing comparison of the numba kernels against their numpy twins.

Run as:  python benchmarks/bench_backends.py
Requires the numba backend (default when numba is importable); in fallback
mode only the numpy column is reported.
"""

from __future__ import annotations

import time

import numpy as np

from sl2harm import _kernels as K
from sl2harm._backend import NUMBA_ENABLED


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rows = []
    rng = np.random.default_rng(0)

    z = rng.uniform(-5, 5, 100_000) + 1j * rng.uniform(-5, 5, 100_000)
    z = np.where(np.abs(z.imag) < 1e-3, z + 0.1j, z)
    out = np.empty_like(z)
    np_t = timeit(lambda: K.np_log_gamma(z))
    nb_t = timeit(lambda: K.log_gamma_vec_kernel(z, out)) if NUMBA_ENABLED else None
    rows.append(("log_gamma x 1e5", np_t, nb_t))

    x = rng.uniform(0.0, 60.0, 1_000_000)
    outd = np.empty_like(x)
    np_t = timeit(lambda: K.np_bessel_j(0, x))
    nb_t = timeit(lambda: K.bessel_j_vec_kernel(0, x, outd)) if NUMBA_ENABLED else None
    rows.append(("bessel_j0 x 1e6", np_t, nb_t))

    lams = np.linspace(0.01, 12.0, 400)
    ts = np.linspace(0.01, 2.0, 200)
    np_t = timeit(lambda: K.np_phi_pfaff_matrix(2, lams, ts))
    if NUMBA_ENABLED:
        o = np.empty((ts.size, lams.size), complex)
        st = np.empty((ts.size, lams.size), np.int64)
        nb_t = timeit(lambda: K.phi_pfaff_matrix_kernel(
            2, lams, ts, K.SERIES_TOL, K.MAX_2F1_TERMS, o, st))
    else:
        nb_t = None
    rows.append(("phi series 400x200", np_t, nb_t))

    lamc = (rng.uniform(0.5, 40, 2000) + 1j * rng.uniform(0, 1, 2000))
    np_t = timeit(lambda: K.np_hc_block(2, lamc, 60))
    if NUMBA_ENABLED:
        buf = np.empty(61, complex)

        def nb_hc():
            for l in lamc[:200]:
                K.hc_coeffs_scalar(2, l, 60, buf)

        nb_t = timeit(nb_hc) * (2000 / 200)
    else:
        nb_t = None
    rows.append(("hc coeffs K=60 x 2000", np_t, nb_t))

    width = max(len(r[0]) for r in rows) + 2
    print(f"{'kernel'.ljust(width)} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for name, np_t, nb_t in rows:
        if nb_t is None:
            print(f"{name.ljust(width)} {np_t * 1e3:9.1f}ms {'-':>10} {'-':>8}")
        else:
            print(f"{name.ljust(width)} {np_t * 1e3:9.1f}ms {nb_t * 1e3:9.1f}ms "
                  f"{np_t / nb_t:7.1f}x")
    if not NUMBA_ENABLED:
        print("numba backend disabled (SL2HARM_NUMBA or missing install)")


if __name__ == "__main__":
    main()
