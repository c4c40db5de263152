"""K-type bookkeeping: parities, the discrete parameter set, and range checks."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class KType:
    """Weight n with its parity class: '+' for even n, '-' for odd."""

    n: int

    @property
    def tau(self) -> str:
        return "+" if self.n % 2 == 0 else "-"


def as_n(ktype) -> int:
    return ktype.n if isinstance(ktype, KType) else int(ktype)


def gamma_set(n) -> tuple[int, ...]:
    """Discrete spectral parameters attached to weight n: the integers of
    opposite parity strictly between 0 and n (empty for |n| <= 1)."""
    n = as_n(n)
    if n > 0:
        start = 1 if n % 2 == 0 else 2
        return tuple(range(start, n, 2))
    if n < 0:
        start = -1 if n % 2 == 0 else -2
        return tuple(range(start, n, -2))[::-1]
    return ()


def z_k_contains(k: int, n) -> bool:
    """Whether weight n pairs with discrete parameter k: opposite parity and
    n >= k+1 (k >= 1), mirrored for k <= -1."""
    n = as_n(n)
    if k == 0:
        return False
    if (n - k) % 2 == 0:
        return False
    if k >= 1:
        return n >= k + 1
    return n <= k - 1


def require_z_k(k: int, n) -> None:
    n = as_n(n)
    if k == 0:
        raise DomainError("discrete parameter k must be nonzero")
    if (n - k) % 2 == 0:
        raise DomainError(
            f"n={n} has the same parity as k={k}; opposite parity required")
    if k >= 1 and n < k + 1:
        raise DomainError(f"n={n} out of range for k={k}: need n >= {k + 1}")
    if k <= -1 and n > k - 1:
        raise DomainError(f"n={n} out of range for k={k}: need n <= {k - 1}")
