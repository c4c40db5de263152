"""Symbols for the pseudo-differential machinery, plus the radial cutoffs.

A symbol is K-biinvariant in the space variable by construction: the
evaluator sees only the Cartan radius r = x^+.  A Gaussian regularization
weight exp(-eps lam^2) can be attached; it multiplies every evaluation and
keeps the kernel-side integrals absolutely convergent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

import numpy as np

from .errors import DomainError

Evaluator = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass
class SymbolDescriptor:
    """Evaluator sigma(r, lam) with class metadata.

    eval takes (r, lam) broadcastable arrays (lam possibly complex) and
    must be even and holomorphic in lam on the working strip.  discrete_values
    maps each discrete parameter k to the constant sigma(., ik).
    """

    eval: Evaluator
    m: float = 0.0
    rho: float = 1.0
    p: float = 2.0
    epsilon: float = 0.0
    discrete_values: Optional[Mapping[int, complex]] = None
    name: str = ""

    def __call__(self, r, lam):
        base = np.asarray(self.eval(np.asarray(r, dtype=float),
                                    np.asarray(lam)), dtype=complex)
        if self.epsilon > 0.0:
            lam = np.asarray(lam)
            base = base * np.exp(-self.epsilon * lam * lam)
        return base

    def at_discrete(self, k: int) -> complex:
        if self.discrete_values is None or k not in self.discrete_values:
            raise DomainError(
                f"symbol {self.name or '<anon>'} has no discrete value at k={k}")
        val = complex(self.discrete_values[k])
        if self.epsilon > 0.0:
            # lam = ik, so exp(-eps lam^2) = exp(eps k^2)
            val *= math.exp(self.epsilon * k * k)
        return val

    def evenness_defect(self, r_samples, lam_samples) -> float:
        r = np.asarray(r_samples, dtype=float)[:, None]
        lam = np.asarray(lam_samples)[None, :]
        return float(np.max(np.abs(self(r, lam) - self(r, -lam))))

    def require_even(self, r_samples, lam_samples, tol: float = 1e-10):
        d = self.evenness_defect(r_samples, lam_samples)
        if d > tol:
            raise DomainError(f"symbol not even in lambda: defect {d}")


def symbol_one(epsilon: float = 0.0, n: int = 0) -> SymbolDescriptor:
    """The identity symbol; discrete values 1 at every k for the weight n."""
    from .ktypes import gamma_set

    return SymbolDescriptor(lambda r, lam: np.ones(np.broadcast(r, lam).shape),
                            m=0.0, rho=1.0, epsilon=epsilon,
                            discrete_values={k: 1.0 for k in gamma_set(n)},
                            name="one")


def symbol_multiplier(m_func, epsilon: float = 0.0, n: int = 0,
                      name: str = "multiplier") -> SymbolDescriptor:
    """x-independent symbol sigma(r, lam) = m(lam)."""
    from .ktypes import gamma_set

    disc = {k: complex(m_func(1j * k)) for k in gamma_set(n)}
    return SymbolDescriptor(lambda r, lam: np.broadcast_to(
        np.asarray(m_func(lam), dtype=complex), np.broadcast(r, lam).shape).copy(),
        epsilon=epsilon, discrete_values=disc, name=name)


def symbol_gauss(epsilon: float, n: int = 0) -> SymbolDescriptor:
    """Pure regularizer exp(-eps lam^2) as a symbol."""
    s = symbol_one(0.0, n)
    return SymbolDescriptor(s.eval, epsilon=epsilon,
                            discrete_values=s.discrete_values, name="gauss")


def symbol_spectral_power(nu: complex, epsilon: float = 0.0,
                          n: int = 0) -> SymbolDescriptor:
    """sigma(r, lam) = ((lam^2 + 1)/4)^{i(r - nu)}; order 2 Im(nu), rho = 1.

    Not defined at lam = +-i (argument 0); keep grids off those points."""
    from .ktypes import gamma_set

    def ev(r, lam):
        base = (np.asarray(lam, dtype=complex) ** 2 + 1.0) / 4.0
        expo = 1j * (np.asarray(r, dtype=float) - nu)
        return np.exp(expo * np.log(base))

    disc = {}
    for k in gamma_set(n):
        if k * k != 1:
            disc[k] = complex(np.exp(1j * (0.0 - nu)
                                     * np.log((-(k * k) + 1.0) / 4.0)))
        else:
            disc[k] = 0.0
    return SymbolDescriptor(ev, m=2.0 * nu.imag if isinstance(nu, complex) else 0.0,
                            rho=1.0, epsilon=epsilon, discrete_values=disc,
                            name="spectral_power")


def symbol_rational(a2: float = 4.0, epsilon: float = 0.0,
                    n: int = 0) -> SymbolDescriptor:
    """Even rational test symbol 1/(lam^2 + a2); holomorphic on strips with
    gamma_p < sqrt(a2)."""
    from .ktypes import gamma_set

    def ev(r, lam):
        lam = np.asarray(lam, dtype=complex)
        return np.broadcast_to(1.0 / (lam * lam + a2),
                               np.broadcast(r, lam).shape).copy()

    disc = {k: 1.0 / (a2 - k * k) for k in gamma_set(n)}
    return SymbolDescriptor(ev, m=-2.0, rho=1.0, epsilon=epsilon,
                            discrete_values=disc, name=f"rational_{a2}")


def symbol_vanishing_at_i(epsilon: float = 0.0, n: int = 0) -> SymbolDescriptor:
    """((lam^2+1)/(lam^2+4))^3: even, holomorphic on S_1, and vanishing to
    third order at lam = +-i (the p = 1 even-weight family)."""
    from .ktypes import gamma_set

    def ev(r, lam):
        lam = np.asarray(lam, dtype=complex)
        val = ((lam * lam + 1.0) / (lam * lam + 4.0)) ** 3
        return np.broadcast_to(val, np.broadcast(r, lam).shape).copy()

    disc = {k: complex(((1.0 - k * k) / (4.0 - k * k)) ** 3)
            for k in gamma_set(n)}
    return SymbolDescriptor(ev, m=0.0, rho=1.0, epsilon=epsilon,
                            discrete_values=disc, name="vanishing_at_i")


BUILTIN_SYMBOLS = {
    "one": symbol_one,
    "gauss": lambda epsilon=1e-3, n=0: symbol_gauss(epsilon, n),
    "rational": symbol_rational,
    "vanishing_at_i": symbol_vanishing_at_i,
    "spectral_power": lambda nu=0.0, epsilon=0.0, n=0:
        symbol_spectral_power(complex(nu), epsilon, n),
}


def make_symbol(name: str, n: int = 0, epsilon: float = 0.0,
                **params) -> SymbolDescriptor:
    if name not in BUILTIN_SYMBOLS:
        raise DomainError(f"unknown symbol {name!r}; "
                          f"builtins: {sorted(BUILTIN_SYMBOLS)}")
    return BUILTIN_SYMBOLS[name](epsilon=epsilon, n=n, **params)


# ---------------------------------------------------------------------------
# smooth radial cutoffs


def eta0(t):
    """Smooth even cutoff: 1 on |t| <= 1/2, 0 outside |t| < 1, with the
    exp(1 - 1/(1-u^2)) profile on the transition band u = 2|t| - 1."""
    t = np.abs(np.asarray(t, dtype=float))
    out = np.zeros_like(t)
    out[t <= 0.5] = 1.0
    band = (t > 0.5) & (t < 1.0)
    u = 2.0 * t[band] - 1.0
    out[band] = np.exp(1.0 - 1.0 / (1.0 - u * u))
    return out if out.ndim else float(out)


def eta1(t):
    """Complement cutoff: eta0 + eta1 = 1 pointwise."""
    return 1.0 - eta0(t)


def _smoothstep(x):
    # C^inf step: 0 for x <= 0, 1 for x >= 1
    x = np.asarray(x, dtype=float)
    bl = np.where(x > 0, np.exp(-1.0 / np.maximum(x, 1e-300)), 0.0)
    br = np.where(x < 1, np.exp(-1.0 / np.maximum(1.0 - x, 1e-300)), 0.0)
    return bl / (bl + br)


def phi_highpass(lam):
    """Smooth even spectral cutoff: 0 on |lam| <= 1, 1 on |lam| >= 2."""
    lam = np.abs(np.asarray(lam, dtype=float))
    return _smoothstep(lam - 1.0)
