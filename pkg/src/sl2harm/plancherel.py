"""The c-function, its reciprocal on strips, and the Plancherel density.

All values go through log-Gamma accumulation.  The Gamma quotient is first
reduced by parity so that the pole/pole cancellations at the discrete points
lam = i|k| are exact:

    n even:  c = pochhammer(C, n/2)      * Gamma(A) / (sqrt(pi) Gamma(D))
    n odd:   c = pochhammer(C, (n-1)/2)  * Gamma(B) / (sqrt(pi) Gamma(D))

with A = i lam/2, B = (1+i lam)/2, C = (1+i lam-|n|)/2, D = (1+i lam+|n|)/2.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import CFunctionPoleError
from .ktypes import as_n, gamma_set
from .special import log_gamma_vec

_HALF_LOG_PI = 0.5 * math.log(math.pi)
POLE_TOL = 1e-6  # proximity to the imaginary lattice that counts as a pole


def _reduced_parts(n, lam):
    """(numerator Gamma argument, Pochhammer factors) of the reduced form."""
    n = abs(as_n(n))
    il = 1j * lam
    C = (1.0 + il - n) / 2.0
    D = (1.0 + il + n) / 2.0
    if n % 2 == 0:
        top = il / 2.0
        m = n // 2
    else:
        top = (1.0 + il) / 2.0
        m = (n - 1) // 2
    return top, D, C, m


def _poch(C, m):
    out = np.ones_like(C)
    for j in range(m):
        out = out * (C + j)
    return out


def c_nn_vec(n, lam) -> np.ndarray:
    """c-function over a complex array; no pole screening (caller's duty)."""
    lam = np.asarray(lam, dtype=complex)
    top, D, C, m = _reduced_parts(n, lam)
    lg = log_gamma_vec(top) - log_gamma_vec(D) - _HALF_LOG_PI
    return np.exp(lg) * _poch(C, m)


def c_nn(n, lam) -> complex:
    """c-function value with factor-attributed pole reporting."""
    lam = complex(lam)
    top, D, C, m = _reduced_parts(n, lam)
    near_pole = (abs(top.imag) < POLE_TOL and top.real < 0.5
                 and abs(top.real - round(top.real)) < POLE_TOL)
    if near_pole:
        factor = ("Gamma(i*lam/2)" if abs(as_n(n)) % 2 == 0
                  else "Gamma((1+i*lam)/2)")
        raise CFunctionPoleError(lam, factor,
                                 f"simple pole of {factor} at lambda={lam}")
    return complex(c_nn_vec(n, np.array([lam]))[0])


def c_zero_degree(n, lam) -> int:
    """Order of the Pochhammer zero of c at lam (0 when c(lam) != 0)."""
    _, _, C, m = _reduced_parts(n, complex(lam))
    hits = 0
    for j in range(m):
        if abs(C + j) < POLE_TOL:
            hits += 1
    return hits


def plancherel_density(n, lam) -> float:
    """|c(lam)|^{-2} for real lam; vanishes at lam = 0 for even n."""
    n_abs = abs(as_n(n))
    lam = float(lam)
    if n_abs % 2 == 0 and lam == 0.0:
        return 0.0
    return float(plancherel_density_vec(n, np.array([lam]))[0])


def plancherel_density_vec(n, lam) -> np.ndarray:
    """Vectorized |c|^{-2} on real grids (lam = 0 handled by parity limit)."""
    lam = np.asarray(lam, dtype=float)
    n_abs = abs(as_n(n))
    out = np.empty(lam.shape, dtype=float)
    zero = lam == 0.0
    work = lam.astype(complex)
    if n_abs % 2 == 0:
        out[zero] = 0.0
        work = np.where(zero, 1.0, work)  # placeholder, overwritten below
    top, D, C, m = _reduced_parts(n, work)
    lg = log_gamma_vec(top) - log_gamma_vec(D) - _HALF_LOG_PI
    dens = np.exp(-2.0 * lg.real) / np.abs(_poch(C, m)) ** 2
    if n_abs % 2 == 0:
        out[~zero] = dens[~zero]
    else:
        out[:] = dens
    return out


def plancherel_density_closed(n, lam) -> np.ndarray:
    """tanh/coth closed form of the density (magnitude), used as the oracle:
    (lam pi/2) tanh(lam pi/2) for even n, |lam pi/2 coth(lam pi/2)| for odd."""
    lam = np.asarray(lam, dtype=float)
    x = lam * np.pi / 2.0
    if abs(as_n(n)) % 2 == 0:
        return np.abs(x * np.tanh(x))
    out = np.empty_like(lam)
    small = np.abs(x) < 1e-8
    out[~small] = np.abs(x[~small] / np.tanh(x[~small]))
    out[small] = 1.0
    return out


def c_inv_minus(n, lam) -> complex:
    """1 / c(-lam).  Returns exact 0 at poles of c(-lam); raises at its
    zeros (which are poles of the reciprocal)."""
    lam = complex(lam)
    zdeg = c_zero_degree(n, -lam)
    if zdeg > 0:
        raise CFunctionPoleError(
            lam, f"pochhammer zero of c(-lam), order {zdeg}",
            f"pole of c(-lam)^-1 at lambda={lam}")
    try:
        val = c_nn(n, -lam)
    except CFunctionPoleError:
        return 0.0 + 0.0j
    return 1.0 / val


def c_inv_minus_vec(n, lam) -> np.ndarray:
    """Vectorized 1/c(-lam) with no screening; fine off the exceptional set."""
    return 1.0 / c_nn_vec(n, -np.asarray(lam, dtype=complex))


def c_recursion_factor(k: int, lam) -> np.ndarray:
    """Single step of the parity recursion for c(-lam)^{-1} in the direction
    fixed by the Gamma form: multiplying by (lam + ik)/(lam - ik) lowers the
    weight by two through the discrete parameter k."""
    lam = np.asarray(lam, dtype=complex)
    return (lam + 1j * k) / (lam - 1j * k)


def c_inv_minus_product_form(n, lam) -> np.ndarray:
    """prod_{k in Gamma_n} (lam+ik)/(lam-ik) times the parity-base
    reciprocal; equals c_inv_minus for weights up to the tested range."""
    n_abs = abs(as_n(n))
    base = 0 if n_abs % 2 == 0 else 1
    lam = np.asarray(lam, dtype=complex)
    out = c_inv_minus_vec(base, lam)
    for k in gamma_set(n_abs):
        out = out * c_recursion_factor(k, lam)
    return out


def _fd_derivative(fn, x, order, h):
    if order == 0:
        return fn(x)
    if order == 1:
        return (fn(x + h) - fn(x - h)) / (2.0 * h)
    return (fn(x + h) - 2.0 * fn(x) + fn(x - h)) / (h * h)


def c_inv_minus_bands(n, p, lam_max=100.0, num=400, alphas=(0, 1, 2),
                      imag_rows=4, exclude_radius=0.2):
    """Finite-difference bands sup (1+|lam|)^{alpha - 1/2} |d^a c(-lam)^-1|
    over the upper half strip 0 <= Im lam <= gamma_p.

    For p = 1 with even n the reciprocal has a simple pole at lam = i, so a
    disk of ``exclude_radius`` around it is removed from the grid.
    """
    gamma_p = abs(2.0 / p - 1.0)
    n_abs = abs(as_n(n))
    re = np.linspace(0.05, lam_max, num)
    ims = np.linspace(0.0, gamma_p, imag_rows) if gamma_p > 0 else np.array([0.0])
    bands = {}
    for alpha in alphas:
        sup = 0.0
        for im in ims:
            lam = re + 1j * im
            if p == 1 and n_abs % 2 == 0 and n_abs >= 2:
                keep = np.abs(lam - 1j) > exclude_radius
                lam = lam[keep]
            if lam.size == 0:
                continue
            h = 1e-3 * (1.0 + np.abs(lam))
            d = _fd_derivative(lambda x: c_inv_minus_vec(n, x), lam, alpha, h)
            sup = max(sup, float(np.max((1.0 + np.abs(lam)) ** (alpha - 0.5)
                                        * np.abs(d))))
        bands[alpha] = sup
    return bands


def density_derivative_bands(n, lam_max=100.0, num=2000, alphas=(0, 1, 2)):
    """sup (1+lam)^{alpha-1} |d^a |c|^-2| on [0, lam_max] by central FD."""
    lam = np.linspace(0.5, lam_max, num)
    bands = {}
    for alpha in alphas:
        h = 1e-3 * (1.0 + lam)
        d = _fd_derivative(lambda x: plancherel_density_vec(n, x), lam, alpha, h)
        bands[alpha] = float(np.max((1.0 + lam) ** (alpha - 1.0) * np.abs(d)))
    return bands
