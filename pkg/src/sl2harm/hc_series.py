"""Large-radius series: coefficient recursion, the global expansion of the
spherical function, and the discrete-series tail expansion."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _kernels as K
from .errors import DomainError
from .ktypes import as_n, require_z_k
from .plancherel import c_nn
from .special import log_gamma_vec  # noqa: F401  (re-exported convenience)

MAX_ORDER = 200
SINGULAR_TOL = 1e-9
LATTICE_GUARD = 1e-3


@dataclass(frozen=True)
class HCExpansion:
    """Coefficients a_k(lam), k = 0..K, with a polynomial growth witness
    |a_k| <= C k^A fitted on the computed range."""

    n: int
    lam: complex
    coeffs: np.ndarray = field(repr=False)
    K: int
    growth_constant: float
    growth_exponent: float


def _singular_denominator(lam: complex) -> bool:
    # the recursion divides by k(k - i lam); i lam near a positive integer
    # kills one of the denominators
    il = 1j * lam
    if abs(il.imag) > SINGULAR_TOL:
        return False
    r = il.real
    return r >= 0.5 and abs(r - round(r)) < SINGULAR_TOL


@lru_cache(maxsize=1024)
def _coeffs_cached(n: int, lam: complex, order: int) -> tuple:
    out = np.empty(order + 1, dtype=complex)
    K.hc_coeffs_scalar(n, lam, order, out)
    return tuple(out)


def hc_coefficients(n, lam, order: int = 30) -> HCExpansion:
    """Coefficient recursion up to the given order (a_0 = 1).

    Raises on singular denominators, i.e. when i*lam is within 1e-9 of a
    positive integer.  (The point lam = i|k| with k > 0 has i*lam = -|k| and
    is regular; the discrete-series expansion relies on it.)
    """
    n = abs(as_n(n))
    lam = complex(lam)
    if order > MAX_ORDER:
        raise DomainError(f"order {order} exceeds cap {MAX_ORDER}")
    if _singular_denominator(lam):
        raise DomainError(
            f"recursion denominator k - i*lam vanishes near lambda={lam}")
    coeffs = np.array(_coeffs_cached(n, lam, order))
    mags = np.abs(coeffs)
    ks = np.arange(1, order + 1, dtype=float)
    grew = mags[1:] > 1.0
    if order >= 4 and np.any(grew):
        expo = max(0.0, float(np.max(np.log(mags[1:][grew])
                                     / np.log(ks[grew] + 1.0))))
    else:
        expo = 0.0
    const = float(np.max(mags[1:] / (ks + 1.0) ** expo)) if order >= 1 else 1.0
    return HCExpansion(n, lam, coeffs, order, max(const, 1.0), expo)


def hc_block(n, lams, order: int) -> np.ndarray:
    """Un-memoized vector recursion over a lam array; shape (order+1, L)."""
    return K.np_hc_block(abs(as_n(n)), lams, order)


def _near_lattice(lam: complex, tol: float) -> bool:
    return abs(lam.real) < tol and abs(lam.imag - round(lam.imag)) < tol


def phi_global_series(n, lam, t, order: int = 30) -> complex:
    """Truncated large-radius expansion

        e^{-t} [ e^{i lam t} c(lam) (1 + sum a_k(lam) e^{-2kt}) + (lam -> -lam) ]

    valid for t >= 1/2.  Within 1e-3 of the imaginary lattice the two
    branches degenerate and this refuses; direct evaluation is the fallback.
    """
    n = abs(as_n(n))
    lam = complex(lam)
    if t < 0.5:
        raise DomainError("phi_global_series requires t >= 1/2")
    if _near_lattice(lam, LATTICE_GUARD):
        raise DomainError(
            f"lambda={lam} within {LATTICE_GUARD} of the imaginary lattice; "
            "use the direct evaluator")
    ap = np.array(_coeffs_cached(n, lam, order))
    am = np.array(_coeffs_cached(n, -lam, order))
    ks = np.arange(1, order + 1)
    ek = np.exp(-2.0 * ks * t)
    sp = 1.0 + np.sum(ap[1:] * ek)
    sm = 1.0 + np.sum(am[1:] * ek)
    return (math.exp(-t)
            * (cmath.exp(1j * lam * t) * c_nn(n, lam) * sp
               + cmath.exp(-1j * lam * t) * c_nn(n, -lam) * sm))


def truncation_error_model(t: float, order: int) -> float:
    """Geometric tail estimate e^{-2(K+1)t} for adaptive order choice."""
    return math.exp(-2.0 * (order + 1) * t)


def psi_series(k: int, n, t, order: int = 30) -> float:
    """Discrete-series coefficient by its tail expansion,

        psi(a_t) = 2 e^{-(1+|k|) t} sum_l d_l e^{-2lt},
        d_l = c(i|k|) a_l(i|k|),

    the evaluation point i|k| being the reparametrized form of the printed
    real-argument coefficients.  Validated against the direct route."""
    n0 = as_n(n)
    require_z_k(k, n0)
    n = abs(n0)
    lam_k = 1j * abs(k)
    ck = c_nn(n, lam_k)
    al = np.array(_coeffs_cached(n, lam_k, order))
    ls = np.arange(0, order + 1)
    val = 2.0 * math.exp(-(1.0 + abs(k)) * t) * np.sum(ck * al * np.exp(-2.0 * ls * t))
    if abs(val.imag) > 1e-10 * max(1.0, abs(val.real)):
        raise AssertionError(f"psi_series produced imaginary part {val.imag}")
    return float(val.real)
