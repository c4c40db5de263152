"""The (n,n)-type spherical functions and discrete-series coefficients.

Three independent evaluation routes are provided:

* ``phi_nn`` - hypergeometric form (Pfaff-transformed series), switching to
  the large-radius expansion or the cosine integral representation where the
  series would lose precision to oscillatory cancellation;
* ``phi_nn_integral_rep`` - the cosine integral representation with the
  endpoint singularity removed by the s = t - u^2 substitution;
* ``phi_nn_ode`` - high-order Runge-Kutta shooting on the radial
  eigenvalue equation.

The cross-route agreement of the three is a library-level acceptance
contract, so none of them may share numerical machinery beyond scalar
arithmetic.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from . import _kernels as K
from ._backend import NUMBA_ENABLED
from .errors import DomainError
from .geometry import GroupElement, cartan_decompose, k_rot
from .hc_series import hc_block, phi_global_series
from .ktypes import as_n, require_z_k
from .plancherel import c_nn_vec
from .quadrature import gl_panels

# Pfaff cancellation budget: the series loses roughly e^q of precision at
# q = |lam| tanh t - |Im lam| t, and needs O(cosh^2 t) terms, so beyond
# these limits evaluation routes through the expansion or the integral.
PFAFF_BUDGET = 12.0
PFAFF_T_MAX = 2.5
HC_T_MIN = 0.5
LAM_NUDGE = 1e-8


def _cancel_exponent(lam: complex, t: float) -> float:
    return abs(lam) * math.tanh(t) - abs(lam.imag) * t


def _terminating(n: int, lam: complex) -> bool:
    a1 = (1.0 - n - 1j * lam) * 0.5
    b1 = (1.0 - n + 1j * lam) * 0.5
    for par in (a1, 1.0 - b1, 1.0 - a1, b1):
        if K.nonpos_int_degree(complex(par)) >= 0:
            return True
    return False


def _phi_hyp_scalar(n: int, lam: complex, t: float) -> complex:
    val, terms = K.phi_pfaff_point(n, complex(lam), float(t),
                                   K.SERIES_TOL, K.MAX_2F1_TERMS)
    if terms < 0:
        from .errors import PrecisionLossError

        raise PrecisionLossError(
            f"spherical series did not converge (n={n}, lam={lam}, t={t})",
            partial=val)
    return val


def _hc_order_for(t: float) -> int:
    return min(160, int(math.ceil(21.0 / t)) + 12)


def phi_nn(ktype, lam, t, route: str = "auto") -> complex:
    """Spherical function of weight n at a_t, normalized to 1 at t = 0.

    ``route`` forces an evaluation path: "hyp" (series), "series"
    (large-radius expansion), "integral", or "auto".
    """
    n = abs(as_n(ktype))
    lam = complex(lam)
    t = abs(float(t))
    if t == 0.0:
        return 1.0 + 0.0j
    if route == "hyp":
        return _phi_hyp_scalar(n, lam, t)
    if route == "series":
        return phi_global_series(n, lam, t, order=_hc_order_for(t))
    if route == "integral":
        return phi_nn_integral_rep(n, lam, t)
    if route != "auto":
        raise DomainError(f"unknown route {route!r}")
    if _terminating(n, lam):
        return _phi_hyp_scalar(n, lam, t)
    q = _cancel_exponent(lam, t)
    if q <= PFAFF_BUDGET and t <= PFAFF_T_MAX:
        return _phi_hyp_scalar(n, lam, t)
    if t >= HC_T_MIN:
        if abs(lam) < LAM_NUDGE:
            lam = lam + LAM_NUDGE
        return phi_global_series(n, lam, t, order=_hc_order_for(t))
    return phi_nn_integral_rep(n, lam, t, panels=None)


def phi_nn_grid(ktype, lams, ts) -> np.ndarray:
    """phi on a (t, lam) product grid for real lam >= 0; shape (T, L).

    Dispatches per point between the series, expansion and integral routes
    exactly as the scalar evaluator does.
    """
    n = abs(as_n(ktype))
    lams = np.asarray(lams, dtype=float)
    ts = np.abs(np.asarray(ts, dtype=float))
    out = np.empty((ts.size, lams.size), dtype=complex)
    for i, t in enumerate(ts):
        if t == 0.0:
            out[i] = 1.0
            continue
        q = lams * math.tanh(t)
        pfaff = (q <= PFAFF_BUDGET) & (np.full(lams.shape, t <= PFAFF_T_MAX))
        rest = ~pfaff
        if pfaff.any():
            sub = lams[pfaff]
            if NUMBA_ENABLED:
                o = np.empty((1, sub.size), dtype=complex)
                st = np.empty((1, sub.size), dtype=np.int64)
                K.phi_pfaff_matrix_kernel(n, sub, np.array([t]),
                                          K.SERIES_TOL, K.MAX_2F1_TERMS, o, st)
                out[i, pfaff] = o[0]
            else:
                o, _ = K.np_phi_pfaff_matrix(n, sub, np.array([t]))
                out[i, pfaff] = o[0]
        if rest.any():
            sub = lams[rest]
            if t >= HC_T_MIN:
                out[i, rest] = _phi_hc_row(n, sub, t)
            else:
                out[i, rest] = _phi_intrep_row(n, sub, t)
    return out


def _phi_intrep_row(n: int, lams: np.ndarray, t: float) -> np.ndarray:
    """Integral-representation evaluation vectorized over a real lam row."""
    lam_max = float(np.max(np.abs(lams))) if lams.size else 1.0
    panels = max(4, int(math.ceil(lam_max * t / 3.0)))
    umax = math.sqrt(t)
    nodes, wts = gl_panels(0.0, umax, 24, umax / panels)
    u2 = nodes * nodes
    s = t - u2
    sinhc = np.where(u2 < 1e-4, 1.0 + u2 * u2 / 6.0,
                     np.sinh(u2) / np.maximum(u2, 1e-300))
    denom = np.sqrt(2.0 * np.sinh(t + s) * sinhc)
    x = (math.cosh(t) - np.cosh(s)) / (2.0 * math.cosh(t))
    base = _poly_2f1_half(n, x) / denom * 2.0 * wts
    phases = np.cos(np.asarray(lams)[:, None] * s[None, :])
    return 2.0**1.5 / math.pi * (phases @ base).astype(complex)


def _phi_hc_row(n: int, lams: np.ndarray, t: float) -> np.ndarray:
    lams = np.where(np.abs(lams) < LAM_NUDGE, LAM_NUDGE, lams).astype(complex)
    order = _hc_order_for(t)
    ap = hc_block(n, lams, order)
    am = hc_block(n, -lams, order)
    ks = np.arange(1, order + 1)
    ek = np.exp(-2.0 * ks * t)
    sp = 1.0 + ek @ ap[1:]
    sm = 1.0 + ek @ am[1:]
    return math.exp(-t) * (np.exp(1j * lams * t) * c_nn_vec(n, lams) * sp
                           + np.exp(-1j * lams * t) * c_nn_vec(n, -lams) * sm)


def _poly_2f1_half(n: int, x: np.ndarray) -> np.ndarray:
    # 2F1(n, -n; 1/2; x): terminating, degree n
    out = np.ones_like(x)
    term = np.ones_like(x)
    for k in range(n):
        term = term * ((n + k) * (-n + k)) / ((0.5 + k) * (k + 1.0)) * x
        out = out + term
    return out


def phi_nn_integral_rep(ktype, lam, t, points: int = 128,
                        panels: int | None = None) -> complex:
    """Cosine integral representation

        (2^{3/2}/pi) int_0^t cos(lam s) (cosh 2t - cosh 2s)^{-1/2}
                      2F1(n, -n; 1/2; (cosh t - cosh s)/(2 cosh t)) ds

    with s = t - u^2 removing the endpoint singularity.  The panel count
    tracks the oscillation lam*t; ``panels=None`` chooses it automatically.
    """
    n = abs(as_n(ktype))
    lam = complex(lam)
    t = float(t)
    if t <= 0.0:
        raise DomainError("integral representation requires t > 0")
    if panels is None:
        panels = max(1, int(math.ceil(abs(lam.real) * t / 3.0)))
        points = 24 if panels > 1 else points
    umax = math.sqrt(t)
    nodes, wts = gl_panels(0.0, umax, points, umax / panels)
    u2 = nodes * nodes
    s = t - u2
    sinhc = np.where(u2 < 1e-4, 1.0 + u2 * u2 / 6.0, np.sinh(u2) / np.maximum(u2, 1e-300))
    denom = np.sqrt(2.0 * np.sinh(t + s) * sinhc)
    x = (math.cosh(t) - np.cosh(s)) / (2.0 * math.cosh(t))
    F = _poly_2f1_half(n, x)
    ig = np.cos(lam * s) * F / denom * 2.0
    return 2.0**1.5 / math.pi * complex(np.sum(ig * wts))


def _radial_rhs(t, y, n, lam2):
    # f'' = -2 coth(2t) f' - (n^2 / cosh^2 t + lam^2 + 1) f, split re/im
    fr, fi, gr, gi = y
    coth = 1.0 / math.tanh(2.0 * t)
    c2 = n * n / math.cosh(t) ** 2
    wr = (lam2 + 1.0).real + c2
    wi = (lam2 + 1.0).imag
    hr = -2.0 * coth * gr - (wr * fr - wi * fi)
    hi = -2.0 * coth * gi - (wr * fi + wi * fr)
    return [gr, gi, hr, hi]


def phi_nn_ode(ktype, lam, t_targets, t0: float = 1e-3,
               rtol: float = 1e-12, atol: float = 1e-13) -> np.ndarray:
    """Shooting evaluation of phi by eighth-order Runge-Kutta (DOP853).

    Seeds at t0 with the two-term Taylor expansion
    f = 1 - (lam^2 + 1 + n^2) t0^2 / 4 about the regular singular point.
    """
    from scipy.integrate import solve_ivp

    n = abs(as_n(ktype))
    lam = complex(lam)
    ts = np.abs(np.asarray(t_targets, dtype=float))
    order = np.argsort(ts)
    tmax = float(ts[order[-1]]) if ts.size else t0
    w = lam * lam + 1.0 + n * n
    f0 = 1.0 - w * t0 * t0 / 4.0
    g0 = -w * t0 / 2.0
    eval_ts = np.unique(np.concatenate([ts[ts > t0], [max(tmax, t0 * 2)]]))
    sol = solve_ivp(_radial_rhs, (t0, eval_ts[-1]),
                    [f0.real, f0.imag, g0.real, g0.imag],
                    method="DOP853", t_eval=eval_ts, rtol=rtol, atol=atol,
                    max_step=0.05, args=(n, lam * lam))
    if not sol.success:
        raise RuntimeError(f"ODE solver failed: {sol.message}")
    lookup = {t: sol.y[0][i] + 1j * sol.y[1][i] for i, t in enumerate(sol.t)}
    out = np.empty(ts.size, dtype=complex)
    for i, t in enumerate(ts):
        if t <= t0:
            out[i] = 1.0 - w * t * t / 4.0
        else:
            out[i] = lookup[t]
    return out


def phi_nn_ode_residual(ktype, lam, t_grid, evaluator=None) -> float:
    """Max residual of the radial eigenvalue operator

        (1/4) f'' + (1/2) coth(2t) f' + (n^2 / (4 cosh^2 t)) f
        + ((lam^2 + 1)/4) f

    on the given interior grid, by centered second differences of the
    evaluated phi.  Second-order in the grid step by construction.
    """
    n = abs(as_n(ktype))
    lam = complex(lam)
    t = np.asarray(t_grid, dtype=float)
    if t.size < 3:
        raise DomainError("need at least 3 grid points")
    h = t[1] - t[0]
    fn = evaluator or (lambda tt: np.array([phi_nn(n, lam, x) for x in tt]))
    f = fn(t)
    fm, f0, fp = f[:-2], f[1:-1], f[2:]
    tm = t[1:-1]
    d1 = (fp - fm) / (2.0 * h)
    d2 = (fp - 2.0 * f0 + fm) / (h * h)
    res = (0.25 * d2 + 0.5 / np.tanh(2.0 * tm) * d1
           + 0.25 * (n * n) / np.cosh(tm) ** 2 * f0
           + 0.25 * (lam * lam + 1.0) * f0)
    return float(np.max(np.abs(res)))


def psi_discrete(k: int, ktype, t) -> float:
    """Discrete-series matrix coefficient: phi of weight n at lam = i|k|.

    The weight must pair with k (opposite parity, |n| >= |k| + 1); the
    hypergeometric series terminates there, so any t is exact.  The value is
    real; a nonvanishing imaginary part is asserted away."""
    n = as_n(ktype)
    require_z_k(k, n)
    val = phi_nn(abs(n), 1j * abs(k), t)
    if abs(val.imag) > 1e-10 * max(1.0, abs(val.real)):
        raise AssertionError(f"psi_discrete imaginary part {val.imag}")
    return float(val.real)


def psi_discrete_vec(k: int, ktype, ts) -> np.ndarray:
    """psi on a t grid (terminating series per point)."""
    n = as_n(ktype)
    require_z_k(k, n)
    ts = np.asarray(ts, dtype=float)
    lam = 1j * abs(k)
    vals = np.array([phi_nn(abs(n), lam, t) for t in ts])
    return vals.real


def phi_nn_group(ktype, lam, g: GroupElement) -> complex:
    """phi extended to the group through Cartan coordinates:
    e^{i n theta1} phi(a_r) e^{i n theta2}."""
    n = as_n(ktype)
    cc = cartan_decompose(g)
    phase = cmath.exp(1j * n * (cc.theta1 + cc.theta2))
    return phase * phi_nn(abs(n), lam, cc.r)


def verify_functional_identity(ktype, lam, x: GroupElement, y: GroupElement,
                               k_points: int = 256) -> float:
    """Residual of the circle-average identity

        (1/2pi) int phi(y k_theta x) e^{-i n theta} d theta = phi(y) phi(x)

    by the trapezoid rule (spectrally accurate here).  The right side uses
    phi(y), the form consistent with the x = identity case."""
    n = as_n(ktype)
    if k_points < 64:
        raise DomainError("need at least 64 circle points")
    lam = complex(lam)
    thetas = 2.0 * np.pi * np.arange(k_points) / k_points
    ym = y.matrix
    xm = x.matrix
    acc = 0.0 + 0.0j
    for th in thetas:
        g = GroupElement.from_matrix(ym @ k_rot(th).matrix @ xm)
        acc += phi_nn_group(n, lam, g) * cmath.exp(-1j * n * th)
    lhs = acc / k_points
    rhs = phi_nn_group(n, lam, y) * phi_nn_group(n, lam, x)
    return abs(lhs - rhs)
