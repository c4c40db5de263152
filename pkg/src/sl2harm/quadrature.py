"""Quadrature helpers: composite Gauss-Legendre panels and Simpson rules."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np


@dataclass(frozen=True)
class QuadratureConfig:
    """Defaults for composite Gauss-Legendre integration."""

    points_per_panel: int = 64
    panel_width: float = 0.5


DEFAULT_QUADRATURE = QuadratureConfig()


@lru_cache(maxsize=32)
def _leggauss(n):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def gl_panels(a, b, points_per_panel=None, panel_width=None):
    """Nodes and weights of composite Gauss-Legendre on [a, b].

    Panels of at most ``panel_width`` cover the interval; each carries a
    ``points_per_panel``-point rule.  Returns (nodes, weights).
    """
    cfg = DEFAULT_QUADRATURE
    npts = cfg.points_per_panel if points_per_panel is None else points_per_panel
    width = cfg.panel_width if panel_width is None else panel_width
    a, b = float(a), float(b)
    if b <= a:
        return np.empty(0), np.empty(0)
    n_panels = max(1, int(np.ceil((b - a) / width - 1e-12)))
    edges = np.linspace(a, b, n_panels + 1)
    x, w = _leggauss(npts)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    wts = (half[:, None] * w[None, :]).ravel()
    return nodes, wts


def gl_integrate(func, a, b, points_per_panel=None, panel_width=None):
    """Integrate a vectorized callable over [a, b] by composite GL."""
    nodes, wts = gl_panels(a, b, points_per_panel, panel_width)
    if nodes.size == 0:
        return 0.0
    return np.sum(func(nodes) * wts)


def simpson_weights(grid):
    """Composite Simpson weights on a uniform grid (odd point count required;
    an even count falls back to a trapezoid-patched final interval)."""
    grid = np.asarray(grid, dtype=float)
    m = grid.size
    if m < 2:
        return np.zeros(m)
    h = grid[1] - grid[0]
    if not np.allclose(np.diff(grid), h, rtol=0, atol=1e-9 * max(abs(h), 1.0)):
        raise ValueError("simpson_weights requires a uniform grid")
    w = np.zeros(m)
    if m % 2 == 1:
        w[0] = w[-1] = 1.0
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        w *= h / 3.0
    else:
        w[: m - 1] = simpson_weights(grid[:-1])
        w[-2] += h / 2.0
        w[-1] += h / 2.0
    return w
