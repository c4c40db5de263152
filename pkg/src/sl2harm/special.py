"""Complex log-Gamma, Gauss 2F1 on the negative real axis, and the
half-integer-normalized Bessel kernels."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from ._backend import NUMBA_ENABLED
from .errors import DomainError, GammaPoleError, PrecisionLossError


@dataclass(frozen=True)
class BesselOrder:
    """Order of the normalized Bessel kernel; only 0, 1, 2 arise."""

    mu: int

    def __post_init__(self):
        if self.mu not in (0, 1, 2):
            raise DomainError(f"Bessel order must be 0, 1 or 2, got {self.mu}")


def _near_nonpos_int(z: complex, tol: float) -> bool:
    return (abs(z.imag) < tol
            and z.real < 0.5
            and abs(z.real - round(z.real)) < tol)


def log_gamma(z) -> complex:
    """Principal-branch-style log Gamma(z).

    exp(log_gamma(z)) reproduces Gamma(z) to better than 1e-12 relative on
    the tested domain.  Nonpositive integers raise GammaPoleError.
    """
    z = complex(z)
    if _near_nonpos_int(z, 1e-12):
        raise GammaPoleError(z)
    return K.log_gamma_scalar(z)


def log_gamma_vec(z) -> np.ndarray:
    """Vectorized log Gamma; poles are the caller's responsibility."""
    z = np.asarray(z, dtype=complex)
    if NUMBA_ENABLED and z.ndim == 1:
        out = np.empty_like(z)
        return K.log_gamma_vec_kernel(z, out)
    return K.np_log_gamma(z)


def gamma_fn(z) -> complex:
    """Gamma via exp(log_gamma)."""
    return cmath.exp(log_gamma(z))


def _term_degree(x: complex) -> int:
    return K.nonpos_int_degree(complex(x))


def gauss_2f1(a, b, c, z) -> complex:
    """2F1(a, b; c; z) for real z <= 0.

    Evaluated through the z -> z/(z-1) transformation so the series argument
    lies in [0, 1); terminating parameter cases are summed directly at z.
    Raises PrecisionLossError (carrying the partial value) if the series cap
    is hit.
    """
    a, b, c = complex(a), complex(b), complex(c)
    z = float(z)
    if _near_nonpos_int(c, 1e-12):
        raise GammaPoleError(c, f"2F1 pole: c={c} is a nonpositive integer")
    if z == 0.0:
        return 1.0 + 0.0j
    da, db = _term_degree(a), _term_degree(b)
    if da >= 0 or db >= 0:
        # terminating case: exact polynomial, any real argument (the sum is
        # capped at the nominal degree so near-integer parameters cannot
        # resurrect a divergent tail)
        deg = min(d for d in (da, db) if d >= 0)
        val, _ = K.hyp_series(a, b, c, complex(z), K.SERIES_TOL, deg + 2)
        return val
    if z > 0:
        raise DomainError("gauss_2f1 requires z <= 0 (except polynomial cases)")
    w = z / (z - 1.0)
    log1mz = math.log1p(-z)
    # form 1: (1-z)^{-a} F(a, c-b; c; w); form 2: (1-z)^{-b} F(c-a, b; c; w)
    d1 = _term_degree(c - b)
    d2 = _term_degree(c - a)
    if d1 >= 0 or d2 >= 0:
        use_form1 = (d1 if d1 >= 0 else 10**9) <= (d2 if d2 >= 0 else 10**9)
    else:
        use_form1 = (b - a).real >= 0.0
    if use_form1:
        p, q, pref, dcap = a, c - b, -a, d1
    else:
        p, q, pref, dcap = c - a, b, -b, d2
    cap = K.MAX_2F1_TERMS if dcap < 0 else dcap + 2
    val, terms = K.hyp_series(p, q, c, complex(w), K.SERIES_TOL, cap)
    if dcap >= 0:
        terms = dcap
    val = cmath.exp(pref * log1mz) * val
    if terms < 0:
        raise PrecisionLossError(
            f"2F1 series did not converge in {K.MAX_2F1_TERMS} terms "
            f"(a={a}, b={b}, c={c}, z={z})",
            partial=val, context={"w": w})
    return val


# Gamma(mu + 1/2) Gamma(1/2) 2^{mu-1} for mu = 0, 1, 2
_JNORM_CONST = (math.pi / 2.0, math.pi / 2.0, 3.0 * math.pi / 2.0)


def bessel_j(mu, x) -> float:
    """Bessel J of integer order mu in {0,1,2}: ascending series up to
    |x| = 12, Hankel asymptotics beyond."""
    mu = mu.mu if isinstance(mu, BesselOrder) else int(mu)
    BesselOrder(mu)
    return K.bessel_j_scalar(mu, float(x))


def bessel_jnorm(mu, z) -> float:
    """Normalized even Bessel kernel: J_mu(|z|)/|z|^mu times
    Gamma(mu+1/2) Gamma(1/2) 2^{mu-1}, with the z -> 0 limit built in."""
    mu = mu.mu if isinstance(mu, BesselOrder) else int(mu)
    BesselOrder(mu)
    x = abs(float(z))
    if x < 1e-6:
        # J_mu(x)/x^mu = (1/ (2^mu mu!)) (1 - x^2/(4(mu+1)) + O(x^4))
        ratio = (1.0 - x * x / (4.0 * (mu + 1))) / (2.0**mu * math.factorial(mu))
    else:
        ratio = K.bessel_j_scalar(mu, x) / x**mu
    return ratio * _JNORM_CONST[mu]


def bessel_jnorm_vec(mu, z) -> np.ndarray:
    """Vectorized normalized Bessel kernel."""
    mu = mu.mu if isinstance(mu, BesselOrder) else int(mu)
    BesselOrder(mu)
    x = np.abs(np.asarray(z, dtype=float))
    if NUMBA_ENABLED and x.ndim == 1:
        j = K.bessel_j_vec_kernel(mu, x, np.empty_like(x))
    else:
        j = K.np_bessel_j(mu, x)
    small = x < 1e-6
    ratio = np.empty_like(x)
    ratio[~small] = j[~small] / x[~small] ** mu
    ratio[small] = (1.0 - x[small] ** 2 / (4.0 * (mu + 1))) / (
        2.0**mu * math.factorial(mu))
    return ratio * _JNORM_CONST[mu]
