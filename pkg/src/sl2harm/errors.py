"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """Input violates a documented precondition."""


class UnimodularityError(DomainError):
    """Matrix is not in SL(2,R) to tolerance."""


class GammaPoleError(DomainError):
    """log-Gamma requested at a nonpositive integer."""

    def __init__(self, z, message=None):
        self.z = z
        super().__init__(message or f"log_gamma pole at z={z}")


class CFunctionPoleError(DomainError):
    """c-function evaluated at a pole; carries the offending factor."""

    def __init__(self, lam, factor, message=None):
        self.lam = lam
        self.factor = factor
        super().__init__(message or f"c-function pole at lambda={lam} ({factor})")


class PrecisionLossError(RuntimeError):
    """Series or quadrature failed to reach its target; carries the partial value."""

    def __init__(self, message, partial=None, context=None):
        self.partial = partial
        self.context = context
        super().__init__(message)


class RegularizationRequiredError(DomainError):
    """Pointwise kernel evaluation needs epsilon > 0 regularization."""
