"""SL(2,R) matrix decompositions, Haar weights and N-bar/A coordinates.

Conventions::

    k_theta = [[cos t, sin t], [-sin t, cos t]]      (rotation subgroup K)
    a_t     = diag(e^t, e^-t)                        (diagonal flow A)
    n_v     = [[1, v], [0, 1]],  nbar_v = n_v^T      (shears N, N-bar)

Iwasawa writes x = k_theta a_t n_v; Cartan writes x = k_1 a_r k_2 with
r >= 0.  The radial Haar weight on the Cartan slice is Delta(t) = 2 sinh 2t,
with the K factors carrying total mass one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence, Union

import numpy as np

from .errors import DomainError, UnimodularityError
from .quadrature import gl_panels

UNIMODULAR_TOL = 1e-12
RECOMPOSE_TOL = 1e-10


@dataclass(frozen=True)
class GroupElement:
    """A real 2x2 matrix with unit determinant."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if not math.isfinite(det) or abs(det - 1.0) > UNIMODULAR_TOL:
            raise UnimodularityError(f"det = {det!r} is not 1 within {UNIMODULAR_TOL}")

    @classmethod
    def from_matrix(cls, m) -> "GroupElement":
        m = np.asarray(m, dtype=float)
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement.from_matrix(self.matrix @ other.matrix)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.d, -self.b, -self.c, self.a)


def k_rot(theta: float) -> GroupElement:
    c, s = math.cos(theta), math.sin(theta)
    return GroupElement(c, s, -s, c)


def a_flow(t: float) -> GroupElement:
    e = math.exp(t)
    return GroupElement(e, 0.0, 0.0, 1.0 / e)


def n_shear(v: float) -> GroupElement:
    return GroupElement(1.0, v, 0.0, 1.0)


def nbar_shear(v: float) -> GroupElement:
    return GroupElement(1.0, 0.0, v, 1.0)


@dataclass(frozen=True)
class IwasawaCoords:
    """(theta, t, v) with x = k_theta a_t n_v."""

    theta: float
    t: float
    v: float

    def recompose(self) -> GroupElement:
        return k_rot(self.theta) @ a_flow(self.t) @ n_shear(self.v)


@dataclass(frozen=True)
class CartanCoords:
    """(theta1, r, theta2) with x = k_theta1 a_r k_theta2 and r >= 0."""

    theta1: float
    r: float
    theta2: float

    def recompose(self) -> GroupElement:
        return k_rot(self.theta1) @ a_flow(self.r) @ k_rot(self.theta2)


def iwasawa_decompose(g: GroupElement) -> IwasawaCoords:
    """Closed-form Iwasawa coordinates of g.

    e^{2t} = a^2 + c^2 and e^{i theta} = (a - ic)/sqrt(a^2+c^2); the shear
    coordinate is v = (ab + cd)/(a^2 + c^2), the value fixed by the
    round-trip identity k_theta a_t n_v = g.
    """
    rho2 = g.a * g.a + g.c * g.c
    t = 0.5 * math.log(rho2)
    theta = math.atan2(-g.c, g.a)
    v = (g.a * g.b + g.c * g.d) / rho2
    return IwasawaCoords(theta, t, v)


def _cartan_from_matrix(m: np.ndarray) -> CartanCoords:
    # closed-form SVD through the eigenvectors of m^T m; no iterative solver.
    # |m|_F^2 - 2 = (a-d)^2 + (b+c)^2 exactly for det 1, so the radius from
    # asinh is well conditioned down to r = 0 (arccosh of the Frobenius norm
    # loses half the digits there).
    r = math.asinh(0.5 * math.hypot(m[0, 0] - m[1, 1], m[0, 1] + m[1, 0]))
    if r < 1e-12:
        # equal singular values: only theta1 + theta2 is determined;
        # gauge theta2 = 0 and absorb everything into the left factor
        return CartanCoords(math.atan2(m[0, 1], m[0, 0]), 0.0, 0.0)
    m00, m01 = m[0, 0], m[0, 1]
    m10, m11 = m[1, 0], m[1, 1]
    g11 = m00 * m00 + m10 * m10
    g22 = m01 * m01 + m11 * m11
    g12 = m00 * m01 + m10 * m11
    tv = 0.5 * math.atan2(2.0 * g12, g11 - g22)
    cv, sv = math.cos(tv), math.sin(tv)
    u1x = m00 * cv + m01 * sv
    u1y = m10 * cv + m11 * sv
    nrm = math.hypot(u1x, u1y)
    u1x /= nrm
    u1y /= nrm
    theta1 = math.atan2(-u1y, u1x)
    theta2 = tv
    return CartanCoords(theta1, r, theta2)


def cartan_decompose(g: GroupElement) -> CartanCoords:
    """Cartan coordinates of g: r = arccosh(|g|_F^2 / 2)/2 plus the two
    rotation angles, with the theta2 = 0 gauge at r = 0."""
    return _cartan_from_matrix(g.matrix)


def cartan_radius_batch(mats: np.ndarray) -> np.ndarray:
    """Cartan radius of a stacked (..., 2, 2) batch of unimodular matrices."""
    return np.arcsinh(0.5 * np.hypot(mats[..., 0, 0] - mats[..., 1, 1],
                                     mats[..., 0, 1] + mats[..., 1, 0]))


def cartan_radius_phase_batch(mats: np.ndarray):
    """(radius, theta1 + theta2) for a (..., 2, 2) batch.

    Only the angle sum is gauge invariant at r = 0, and only the sum enters
    the (n,n)-phase bookkeeping, so that is what this returns.
    """
    m00 = mats[..., 0, 0]
    m01 = mats[..., 0, 1]
    m10 = mats[..., 1, 0]
    m11 = mats[..., 1, 1]
    r = np.arcsinh(0.5 * np.hypot(m00 - m11, m01 + m10))
    g11 = m00 * m00 + m10 * m10
    g22 = m01 * m01 + m11 * m11
    g12 = m00 * m01 + m10 * m11
    tv = 0.5 * np.arctan2(2.0 * g12, g11 - g22)
    cv, sv = np.cos(tv), np.sin(tv)
    u1x = m00 * cv + m01 * sv
    u1y = m10 * cv + m11 * sv
    theta1 = np.arctan2(-u1y, u1x)
    # theta1 + tv is exact even at r = 0, where the split is pure gauge
    return r, theta1 + tv


class NbarRadius(NamedTuple):
    radius: float
    correction: float  # E(vbar, r) = radius - r - H(vbar)


def h_of_nbar(v: float) -> float:
    """Iwasawa A-coordinate of the lower shear: e^{2H} = 1 + v^2."""
    return 0.5 * math.log1p(v * v)


def nbar_cartan_radius(v: float, r: float) -> NbarRadius:
    """Cartan radius of nbar_v a_r for r >= 0, with its sandwich correction.

    The correction E = radius - r - H(nbar_v) must lie in
    [0, 2 e^{-2r}] up to 1e-10 slack; a violation means a decomposition bug,
    so it is asserted here rather than left to callers.
    """
    if r < 0:
        raise DomainError("nbar_cartan_radius requires r >= 0")
    radius = float(cartan_radius_batch(
        (nbar_shear(v) @ a_flow(r)).matrix[None])[0])
    corr = radius - r - h_of_nbar(v)
    if not (-1e-10 <= corr <= 2.0 * math.exp(-2.0 * r) + 1e-10):
        raise AssertionError(
            f"E(vbar,r) = {corr} outside [0, 2e^(-2r)] at v={v}, r={r}")
    return NbarRadius(radius, corr)


def nbar_radius_batch(v: np.ndarray, r: float) -> np.ndarray:
    """Cartan radius of nbar_v a_r, vectorized over v, any real r."""
    v = np.asarray(v, dtype=float)
    # matrix [[e^r, 0], [v e^r, e^-r]]: (a-d, b+c) = (2 sinh r, v e^r)
    return np.arcsinh(0.5 * np.hypot(2.0 * math.sinh(r), v * math.exp(r)))


def delta_weight(t):
    """Radial Haar weight Delta(t) = 2 sinh 2t."""
    return 2.0 * np.sinh(2.0 * np.asarray(t, dtype=float))


def delta_mass(t):
    """Exact antiderivative: integral of Delta over [0, t] = cosh(2t) - 1."""
    return np.cosh(2.0 * np.asarray(t, dtype=float)) - 1.0


class RadialIntegralResult(NamedTuple):
    value: float
    rel_error: float


ProfileLike = Union[Callable[[np.ndarray], np.ndarray], Sequence]


def radial_integral(h: ProfileLike, T: float,
                    points_per_panel: int | None = None,
                    panel_width: float | None = None) -> RadialIntegralResult:
    """Integrate h(t) * Delta(t) over [0, T] by composite Gauss-Legendre.

    h is a vectorized callable, or a (t_grid, values) pair which is cubic
    interpolated.  The relative error estimate compares against a half-width
    panel refinement.  NaN anywhere in the integrand raises with the
    offending node.
    """
    if callable(h):
        fn = h
    else:
        from scipy.interpolate import CubicSpline

        t_grid, values = h
        fn = CubicSpline(np.asarray(t_grid, float), np.asarray(values))

    def once(width_scale):
        width = (panel_width if panel_width is not None else 0.5) * width_scale
        nodes, wts = gl_panels(0.0, T, points_per_panel, width)
        vals = np.asarray(fn(nodes)) * delta_weight(nodes)
        bad = ~np.isfinite(vals)
        if np.any(bad):
            raise DomainError(f"integrand not finite at t={nodes[bad][0]}")
        return np.sum(vals * wts)

    coarse = once(1.0)
    fine = once(0.5)
    scale = max(abs(fine), 1e-300)
    return RadialIntegralResult(fine, abs(fine - coarse) / scale)


def random_unimodular(rng: np.random.Generator, size: int,
                      t_scale: float = 1.0, v_scale: float = 1.0) -> list[GroupElement]:
    """Random K A N K products with bounded log-normal-ish spread; a test and
    verification utility, not part of the numeric core."""
    out = []
    for _ in range(size):
        th1, th2 = rng.uniform(0.0, 2.0 * np.pi, 2)
        t = rng.normal(0.0, t_scale)
        v = rng.normal(0.0, v_scale)
        out.append(k_rot(th1) @ a_flow(t) @ n_shear(v) @ k_rot(th2))
    return out
