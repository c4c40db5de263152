"""Scalar hot kernels (numba-jitted when enabled) and their numpy twins.

Everything here is free of package types: plain floats, complexes and
ndarrays, so the same source compiles under ``numba.njit`` and runs as
ordinary Python.  When the numba backend is enabled the whole ``*_impl``
call chain is rebound to jitted dispatchers; otherwise it stays pure Python
and grid-level callers route to the vectorized ``np_*`` twins instead.
``benchmarks/bench_backends.py`` times the two paths side by side.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from ._backend import NUMBA_ENABLED

# Lanczos rational approximation of Gamma, g = 607/128, 15 coefficients
# (Godfrey's tabulation; ~1e-15 relative for Re z >= 0.5).
LANCZOS_G = 4.7421875
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)

_HALF_LOG_2PI = 0.9189385332046727417803297
_LOG_PI = 1.1447298858494001741434273
SERIES_TOL = 1.0e-16
MAX_2F1_TERMS = 100000
# ascending series below, spectral cosine-integral trapezoid between,
# Hankel asymptotics above (each branch ~1e-15 in its range)
BESSEL_SERIES_MAX = 8.0
BESSEL_ASYM_MIN = 26.0


def _lg_right_impl(z):
    # Lanczos sum, valid for Re z >= 0.5.
    acc = _LANCZOS_C[0]
    for k in range(1, 15):
        acc += _LANCZOS_C[k] / (z - 1.0 + k)
    t = z - 0.5 + LANCZOS_G
    return _HALF_LOG_2PI + (z - 0.5) * cmath.log(t) - t + cmath.log(acc)


def _log_sin_pi_impl(z):
    # log(sin(pi z)) without overflow for large |Im z|.
    w = cmath.pi * z
    if abs(w.imag) < 1.0:
        return cmath.log(cmath.sin(w))
    if w.imag > 0.0:
        # sin w = e^{-iw} (1 - e^{2iw}) * (i/2)
        return -1j * w + cmath.log(1.0 - cmath.exp(2j * w)) + cmath.log(0.5j)
    return 1j * w + cmath.log(1.0 - cmath.exp(-2j * w)) + cmath.log(-0.5j)


def _log_gamma_impl(z):
    # exp() of the result is Gamma to ~1e-14 relative; poles are the
    # caller's responsibility.
    if z.real >= 0.5:
        return _lg_right_impl(z)
    return _LOG_PI - _log_sin_pi_impl(z) - _lg_right_impl(1.0 - z)


def _hyp_series_impl(a, b, c, w, tol, max_terms):
    """Power series of 2F1(a,b;c;w).  Returns (value, terms); terms=-1 means
    the cap was hit before three consecutive sub-tolerance terms."""
    term = 1.0 + 0.0j
    s = 1.0 + 0.0j
    small = 0
    for k in range(1, max_terms):
        km1 = k - 1.0
        term = term * (a + km1) * (b + km1) / ((c + km1) * k) * w
        s = s + term
        if abs(term) <= tol * abs(s):
            small += 1
            if small >= 3:
                return s, k
        else:
            small = 0
    return s, -1


def _nonpos_int_degree_impl(x):
    # m >= 0 when x == -m within 1e-12, else -1.
    if abs(x.imag) > 1e-12:
        return -1
    m = int(math.floor(-x.real + 0.5))
    if m >= 0 and abs(x.real + m) < 1e-12:
        return m
    return -1


def _phi_pfaff_point_impl(n, lam, t, tol, max_terms):
    """Hypergeometric evaluation of the (n,n) spherical function at a_t.

    (cosh t)^{-n} 2F1((1-n-i lam)/2, (1-n+i lam)/2; 1; -sinh^2 t), computed
    through the z -> z/(z-1) transformation.  Picks whichever transformed
    form terminates earliest, else the one with the faster-decaying tail.
    Returns (value, terms); terms=-1 flags non-convergence.
    """
    if t == 0.0:
        return 1.0 + 0.0j, 0
    a1 = (1.0 - n - 1j * lam) * 0.5
    b1 = (1.0 - n + 1j * lam) * 0.5
    sh = math.sinh(t)
    w = (sh * sh) / (sh * sh + 1.0)  # z/(z-1) = tanh^2 t
    log_cosh = math.log(math.cosh(t))

    d_a1 = _nonpos_int_degree_impl(a1)
    d_1b = _nonpos_int_degree_impl(1.0 - b1)
    d_1a = _nonpos_int_degree_impl(1.0 - a1)
    d_b1 = _nonpos_int_degree_impl(b1)
    t1 = d_a1 if d_a1 >= 0 else max_terms
    if 0 <= d_1b < t1:
        t1 = d_1b
    t2 = d_1a if d_1a >= 0 else max_terms
    if 0 <= d_b1 < t2:
        t2 = d_b1
    if t1 < max_terms or t2 < max_terms:
        use_form1 = t1 <= t2
    else:
        # tail of form1 ~ k^{-1-i lam}; of form2 ~ k^{-1+i lam}
        use_form1 = (1j * lam).real >= 0.0

    if use_form1:
        p, q, pref = a1, 1.0 - b1, -a1
    else:
        p, q, pref = 1.0 - a1, b1, -b1
    s, terms = _hyp_series_impl(p, q, 1.0 + 0.0j, w + 0.0j, tol, max_terms)
    # prefactor (cosh^2 t)^{pref} (cosh t)^{-n}, kept in log space
    val = cmath.exp((2.0 * pref + (-n)) * log_cosh) * s
    return val, terms


def _phi_pfaff_matrix_impl(n, lams, ts, tol, max_terms, out, status):
    for i in range(ts.shape[0]):
        for j in range(lams.shape[0]):
            v, k = _phi_pfaff_point_impl(n, lams[j], ts[i], tol, max_terms)
            out[i, j] = v
            status[i, j] = k
    return out


def _bessel_j_series_impl(mu, x):
    # ascending series, adequate for |x| <= 12
    h = 0.5 * x
    term = 1.0
    for m in range(1, mu + 1):
        term *= h / m
    s = term
    for m in range(1, 80):
        term *= -(h * h) / (m * (m + mu))
        s += term
        if abs(term) <= 1e-17 * abs(s):
            break
    return s


def _bessel_j_asym_impl(mu, x):
    # Hankel asymptotic expansion, truncated at the smallest term
    fmu = 4.0 * mu * mu
    chi = x - (0.5 * mu + 0.25) * math.pi
    p = 1.0
    q = 0.0
    ak = 1.0
    last = 1.0e300
    for k in range(1, 12):
        ak = ak * (fmu - (2.0 * k - 1.0) ** 2) / (k * 8.0 * x)
        mag = abs(ak)
        if mag >= last:
            break
        last = mag
        r = k % 4
        if r == 1:
            q += ak
        elif r == 2:
            p -= ak
        elif r == 3:
            q -= ak
        else:
            p += ak
    return math.sqrt(2.0 / (math.pi * x)) * (p * math.cos(chi) - q * math.sin(chi))


def _bessel_j_mid_impl(mu, x):
    # (1/pi) int_0^pi cos(mu tau - x sin tau) dtau by the full-period
    # trapezoid rule; spectrally convergent for an entire periodic integrand
    n = int(1.6 * x) + 24
    h = math.pi / n
    s = 0.5 * (math.cos(0.0) + math.cos(mu * math.pi))
    for j in range(1, n):
        tau = j * h
        s += math.cos(mu * tau - x * math.sin(tau))
    return s * h / math.pi


def _bessel_j_impl(mu, x):
    x = abs(x)
    if x <= BESSEL_SERIES_MAX:
        return _bessel_j_series_impl(mu, x)
    if x <= BESSEL_ASYM_MIN:
        return _bessel_j_mid_impl(mu, x)
    return _bessel_j_asym_impl(mu, x)


def _hc_coeffs_impl(n, lam, K, out):
    """Large-radius expansion coefficients a_k(lam), k=0..K, via the odd/even
    weighted recursion.  out must be complex with length K+1."""
    n2 = float(n * n)
    out[0] = 1.0 + 0.0j
    for k in range(1, K + 1):
        s = 0.0 + 0.0j
        for j in range(1, k + 1, 2):
            s += out[k - j] * (j * n2)
        for j in range(2, k + 1, 2):
            s -= out[k - j] * (1.0 - 1j * lam + 2.0 * k - 2.0 * j + j * n2)
        out[k] = -s / (k * (k - 1j * lam))
    return out


def _log_gamma_vec_impl(z, out):
    for i in range(z.shape[0]):
        out[i] = _log_gamma_impl(z[i])
    return out


def _bessel_j_vec_impl(mu, x, out):
    for i in range(x.shape[0]):
        out[i] = _bessel_j_impl(mu, x[i])
    return out


if NUMBA_ENABLED:
    from numba import njit

    _jit = njit(cache=True)
    # rebind the whole chain so jitted callers resolve jitted callees
    _lg_right_impl = _jit(_lg_right_impl)
    _log_sin_pi_impl = _jit(_log_sin_pi_impl)
    _log_gamma_impl = _jit(_log_gamma_impl)
    _hyp_series_impl = _jit(_hyp_series_impl)
    _nonpos_int_degree_impl = _jit(_nonpos_int_degree_impl)
    _phi_pfaff_point_impl = _jit(_phi_pfaff_point_impl)
    _phi_pfaff_matrix_impl = _jit(_phi_pfaff_matrix_impl)
    _bessel_j_series_impl = _jit(_bessel_j_series_impl)
    _bessel_j_asym_impl = _jit(_bessel_j_asym_impl)
    _bessel_j_mid_impl = _jit(_bessel_j_mid_impl)
    _bessel_j_impl = _jit(_bessel_j_impl)
    _hc_coeffs_impl = _jit(_hc_coeffs_impl)
    _log_gamma_vec_impl = _jit(_log_gamma_vec_impl)
    _bessel_j_vec_impl = _jit(_bessel_j_vec_impl)

log_gamma_scalar = _log_gamma_impl
hyp_series = _hyp_series_impl
nonpos_int_degree = _nonpos_int_degree_impl
phi_pfaff_point = _phi_pfaff_point_impl
bessel_j_scalar = _bessel_j_impl
hc_coeffs_scalar = _hc_coeffs_impl
log_gamma_vec_kernel = _log_gamma_vec_impl
bessel_j_vec_kernel = _bessel_j_vec_impl
phi_pfaff_matrix_kernel = _phi_pfaff_matrix_impl


# ---------------------------------------------------------------------------
# numpy twins (fallback grid path + benchmark counterpart)


def np_log_gamma(z):
    """Vectorized log-Gamma, same algorithm as the scalar kernel."""
    z = np.asarray(z, dtype=complex)
    scalar = z.ndim == 0
    shape = np.atleast_1d(z).shape
    z = np.atleast_1d(z).ravel()
    out = np.empty_like(z)
    right = z.real >= 0.5
    zr = np.where(right, z, 1.0 - z)
    acc = np.full_like(zr, _LANCZOS_C[0])
    for k in range(1, 15):
        acc += _LANCZOS_C[k] / (zr - 1.0 + k)
    t = zr - 0.5 + LANCZOS_G
    lg = _HALF_LOG_2PI + (zr - 0.5) * np.log(t) - t + np.log(acc)
    out[right] = lg[right]
    if not right.all():
        w = np.pi * z[~right]
        ls = np.empty_like(w)
        low = np.abs(w.imag) < 1.0
        ls[low] = np.log(np.sin(w[low]))
        up = (~low) & (w.imag > 0)
        ls[up] = -1j * w[up] + np.log(1.0 - np.exp(2j * w[up])) + np.log(0.5j)
        dn = (~low) & (w.imag < 0)
        ls[dn] = 1j * w[dn] + np.log(1.0 - np.exp(-2j * w[dn])) + np.log(-0.5j)
        out[~right] = _LOG_PI - ls - lg[~right]
    out = out.reshape(shape)
    return out[0] if scalar else out


def np_phi_pfaff_matrix(n, lams, ts, tol=SERIES_TOL, max_terms=MAX_2F1_TERMS):
    """Vectorized Pfaff-series spherical function on a (t, lam) grid.

    Real lam only (the grid path never needs complex spectral nodes); one
    masked-iteration series per t row.  Returns (values, terms) arrays.
    """
    lams = np.asarray(lams, dtype=float)
    ts = np.asarray(ts, dtype=float)
    out = np.empty((ts.size, lams.size), dtype=complex)
    status = np.empty((ts.size, lams.size), dtype=np.int64)
    a1 = (1.0 - n - 1j * lams) * 0.5
    cb = (1.0 + n - 1j * lams) * 0.5  # 1 - b1
    for i, t in enumerate(ts):
        if t == 0.0:
            out[i] = 1.0
            status[i] = 0
            continue
        sh2 = math.sinh(t) ** 2
        w = sh2 / (sh2 + 1.0)
        term = np.ones_like(a1)
        s = term.copy()
        active = np.ones(lams.size, dtype=bool)
        smallrun = np.zeros(lams.size, dtype=np.int64)
        nterms = np.full(lams.size, -1, dtype=np.int64)
        for k in range(1, max_terms):
            km1 = k - 1.0
            term = term * (a1 + km1) * (cb + km1) / (k * k) * w
            s = np.where(active, s + term, s)
            small = np.abs(term) <= tol * np.abs(s)
            smallrun = np.where(small, smallrun + 1, 0)
            done = active & (smallrun >= 3)
            nterms[done] = k
            active &= ~done
            if not active.any():
                break
        status[i] = nterms
        pref = np.exp((2.0 * (-a1) + (-n)) * math.log(math.cosh(t)))
        out[i] = pref * s
    return out, status


def np_bessel_j(mu, x):
    """Vectorized Bessel J of integer order mu in {0,1,2}."""
    x = np.abs(np.asarray(x, dtype=float))
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    shape = x.shape
    x = x.ravel()
    out = np.empty_like(x)
    lo = x <= BESSEL_SERIES_MAX
    hi = x > BESSEL_ASYM_MIN
    mid = ~lo & ~hi
    if lo.any():
        h = 0.5 * x[lo]
        term = h**mu / math.factorial(mu)
        s = term.copy()
        for m in range(1, 80):
            term = term * -(h * h) / (m * (m + mu))
            s += term
        out[lo] = s
    if mid.any():
        xm = x[mid]
        n = int(1.6 * float(np.max(xm))) + 24
        tau = np.linspace(0.0, np.pi, n + 1)
        w = np.full(n + 1, np.pi / n)
        w[0] *= 0.5
        w[-1] *= 0.5
        out[mid] = (np.cos(mu * tau[None, :]
                           - xm[:, None] * np.sin(tau)[None, :]) @ w) / np.pi
    if hi.any():
        xh = x[hi]
        fmu = 4.0 * mu * mu
        chi = xh - (0.5 * mu + 0.25) * np.pi
        p = np.ones_like(xh)
        q = np.zeros_like(xh)
        ak = np.ones_like(xh)
        for k in range(1, 12):
            ak = ak * (fmu - (2.0 * k - 1.0) ** 2) / (k * 8.0 * xh)
            r = k % 4
            if r == 1:
                q += ak
            elif r == 2:
                p -= ak
            elif r == 3:
                q -= ak
            else:
                p += ak
        out[hi] = np.sqrt(2.0 / (np.pi * xh)) * (p * np.cos(chi) - q * np.sin(chi))
    out = out.reshape(shape)
    return float(out[0]) if scalar else out


def np_hc_block(n, lams, K):
    """a_k(lam) for k=0..K over a complex lam vector; shape (K+1, len(lams))."""
    lams = np.atleast_1d(np.asarray(lams, dtype=complex))
    n2 = float(n * n)
    a = np.zeros((K + 1, lams.size), dtype=complex)
    a[0] = 1.0
    for k in range(1, K + 1):
        s = np.zeros(lams.size, dtype=complex)
        for j in range(1, k + 1, 2):
            s += a[k - j] * (j * n2)
        for j in range(2, k + 1, 2):
            s -= a[k - j] * (1.0 - 1j * lams + 2.0 * k - 2.0 * j + j * n2)
        a[k] = -s / (k * (k - 1j * lams))
    return a
