"""Named invariant checks, runnable as a suite from the CLI.

Each check returns (ok, detail).  Grids here are sized for an interactive
run of the whole table; the test suite re-runs the load-bearing ones at
their full contractual sizes.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import geometry as geo
from . import hc_series as hc
from . import lorentz as lor
from . import plancherel as pl
from . import psido as ps
from . import special as sp
from . import spherical as sph
from . import symbols as sy
from . import transforms as tr
from .quadrature import gl_panels


@dataclass
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str


_REGISTRY: list[tuple[str, str, Callable[[], tuple[bool, str]]]] = []


def _check(suite, name):
    def deco(fn):
        _REGISTRY.append((suite, name, fn))
        return fn

    return deco


# ---------------------------------------------------------------------- geometry


@_check("geometry", "iwasawa_roundtrip")
def _iwasawa_roundtrip():
    rng = np.random.default_rng(7)
    worst = 0.0
    for g in geo.random_unimodular(rng, 2000):
        rec = geo.iwasawa_decompose(g).recompose()
        worst = max(worst, float(np.max(np.abs(rec.matrix - g.matrix))))
    return worst < 1e-10, f"max entrywise error {worst:.3e}"


@_check("geometry", "cartan_roundtrip")
def _cartan_roundtrip():
    rng = np.random.default_rng(8)
    worst = 0.0
    for g in geo.random_unimodular(rng, 2000):
        rec = geo.cartan_decompose(g).recompose()
        worst = max(worst, float(np.max(np.abs(rec.matrix - g.matrix))))
    return worst < 1e-10, f"max entrywise error {worst:.3e}"


@_check("geometry", "radius_correction_sandwich")
def _sandwich():
    rng = np.random.default_rng(9)
    worst = -1.0
    ok = True
    for _ in range(1000):
        v = rng.normal(0, 2.0)
        r = rng.uniform(0.0, 8.0)
        res = geo.nbar_cartan_radius(v, r)
        lo, hi = -1e-10, 2.0 * math.exp(-2.0 * r) + 1e-10
        ok &= lo <= res.correction <= hi
        worst = max(worst, res.correction - 2.0 * math.exp(-2.0 * r))
    return ok, f"max overshoot {worst:.3e}"


@_check("geometry", "shear_dilation_formula")
def _dilation():
    h = lambda v: np.exp(-(v - 0.3) ** 2)
    nodes, wts = gl_panels(-30.0, 30.0)
    base = float(np.sum(h(nodes) * wts))
    worst = 0.0
    for r in (0.3, 1.0, 2.0):
        scale = math.exp(2.0 * r)
        wide, wide_w = gl_panels(-30.0 * scale, 30.0 * scale, 64, 0.5 * scale)
        lhs = float(np.sum(h(np.exp(-2.0 * r) * wide) * wide_w))
        worst = max(worst, abs(lhs - scale * base) / scale)
    return worst < 1e-10, f"max scaled defect {worst:.3e}"


@_check("geometry", "iwasawa_cartan_measure_ratio")
def _measure_ratio():
    f_rad = lambda r: np.exp(-2.0 * r * r)
    tn, tw = gl_panels(0.0, 5.0)
    cartan = float(np.sum(f_rad(tn) * geo.delta_weight(tn) * tw))
    tn2, tw2 = gl_panels(-5.5, 5.5, 64, 0.25)
    vn, vw = gl_panels(-90.0, 90.0, 32, 0.5)
    iwa = 0.0
    for t, wt in zip(tn2, tw2):
        F = np.exp(2 * t) * (1 + vn**2) + np.exp(-2 * t)
        R = 0.5 * np.arccosh(np.maximum(F / 2, 1.0))
        iwa += wt * math.exp(2 * t) * float(np.sum(f_rad(R) * vw))
    ratio = iwa / cartan
    return abs(ratio - math.pi) < 1e-6, f"ratio {ratio:.12f} (expected pi)"


# ---------------------------------------------------------------------- special


@_check("special", "gamma_reflection")
def _reflection():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(1000):
        z = complex(rng.uniform(-8, 8), rng.uniform(-8, 8))
        if abs(z.imag) < 1e-2 and abs(z.real - round(z.real)) < 1e-2:
            continue
        lhs = cmath.exp(sp.log_gamma(z) + sp.log_gamma(1.0 - z))
        rhs = math.pi / cmath.sin(math.pi * z)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    return worst < 1e-10, f"max relative defect {worst:.3e}"


@_check("special", "f21_euler_transformation")
def _euler_transform():
    rng = np.random.default_rng(12)
    worst = 0.0
    for _ in range(200):
        a = complex(rng.uniform(-2, 3), rng.uniform(-2, 2))
        b = complex(rng.uniform(-2, 3), rng.uniform(-2, 2))
        c = complex(rng.uniform(0.5, 4), rng.uniform(-1, 1))
        z = rng.uniform(-50.0, -1e-3)
        lhs = sp.gauss_2f1(a, b, c, z)
        rhs = (1 - z) ** (c - a - b) * sp.gauss_2f1(c - a, c - b, c, z)
        worst = max(worst, abs(lhs - rhs) / max(abs(lhs), 1e-30))
    return worst < 1e-9, f"max relative defect {worst:.3e}"


@_check("special", "bessel_ode_residual")
def _bessel_ode():
    # normalized form J'' + J'/x + (1 - mu^2/x^2) J, Richardson-refined
    # central differences; the printed x^2-weighted form sits below the
    # double-precision FD floor at x = 20
    worst = 0.0
    for mu in (0, 1, 2):
        x = np.linspace(0.1, 20.0, 500)
        j = lambda xx: sp.bessel_jnorm_vec(mu, xx) / sp._JNORM_CONST[mu] * xx**mu
        f0 = j(x)

        def d12(h):
            fp, fm = j(x + h), j(x - h)
            return (fp - fm) / (2 * h), (fp - 2 * f0 + fm) / (h * h)

        d1a, d2a = d12(4e-3)
        d1b, d2b = d12(8e-3)
        d1 = (4 * d1a - d1b) / 3.0
        d2 = (4 * d2a - d2b) / 3.0
        res = d2 + d1 / x + (1.0 - mu * mu / (x * x)) * f0
        worst = max(worst, float(np.max(np.abs(res))))
    return worst < 1e-8, f"max residual {worst:.3e}"


# ---------------------------------------------------------------------- spherical


@_check("spherical", "normalization_at_identity")
def _phi_normalization():
    worst = 0.0
    for n in (0, 1, 2, 4):
        for lam in (0.0, 1.0, 2.5, 1j):
            worst = max(worst, abs(sph.phi_nn(n, lam, 0.0) - 1.0))
    return worst < 1e-12, f"max |phi(e)-1| = {worst:.3e}"


@_check("spherical", "symmetry_triple")
def _phi_symmetries():
    worst = 0.0
    for n in (1, 2, 4):
        for lam in (0.7, 1.3):
            for t in (0.4, 1.1, 2.0):
                a = sph.phi_nn(n, lam, t)
                worst = max(worst, abs(a - sph.phi_nn(-n, lam, t)))
                worst = max(worst, abs(a - sph.phi_nn(n, lam, -t)))
                worst = max(worst, abs(a - sph.phi_nn(n, -lam, t)))
    return worst < 1e-10, f"max defect {worst:.3e}"


@_check("spherical", "inverse_symmetry_on_group")
def _phi_inverse_symmetry():
    rng = np.random.default_rng(13)
    worst = 0.0
    for g in geo.random_unimodular(rng, 25):
        for (n, lam) in ((1, 0.8), (3, 1.7)):
            a = sph.phi_nn_group(-n, lam, g.inverse())
            b = sph.phi_nn_group(n, lam, g)
            worst = max(worst, abs(a - b))
    return worst < 1e-10, f"max defect {worst:.3e}"


@_check("spherical", "triple_route_agreement")
def _triple_routes():
    worst = 0.0
    for n in (0, 2):
        for lam in (1.0, 2.5, 1j):
            for t in (0.3, 1.0, 2.0):
                a = sph.phi_nn(n, lam, t, route="hyp")
                b = sph.phi_nn_integral_rep(n, lam, t)
                c = sph.phi_nn_ode(n, lam, [t])[0]
                worst = max(worst, abs(a - b), abs(a - c), abs(b - c))
    return worst < 1e-6, f"max pairwise gap {worst:.3e}"


@_check("spherical", "local_bessel_leading_constant")
def _bessel_leading():
    lam, t = 1.5, 1e-3
    vals = []
    for n in (0, 1, 2, 4):
        num = sph.phi_nn(n, lam, t).real
        vals.append(num * math.sqrt(geo.delta_weight(t) / t)
                    / sp.bessel_jnorm(0, lam * t))
    spread = (max(vals) - min(vals)) / abs(vals[0])
    return spread < 0.01, f"b0 ~ {vals[0]:.6f}, spread {spread:.2e}"


@_check("spherical", "circle_functional_identity")
def _functional_identity():
    rng = np.random.default_rng(14)
    worst = 0.0
    for _ in range(5):
        n = int(rng.integers(0, 4))
        lam = rng.uniform(0.2, 2.0)
        x, y = geo.random_unimodular(rng, 2, t_scale=0.6)
        worst = max(worst, sph.verify_functional_identity(n, lam, x, y, 256))
    return worst < 1e-6, f"max residual {worst:.3e}"


# ---------------------------------------------------------------------- plancherel


@_check("plancherel", "conjugate_symmetry_of_density")
def _density_conjugate():
    lam = np.linspace(0.05, 40.0, 200)
    worst = 0.0
    for n in (0, 1, 2):
        d = pl.plancherel_density_vec(n, lam)
        prod = pl.c_nn_vec(n, lam.astype(complex)) * pl.c_nn_vec(n, -lam.astype(complex))
        worst = max(worst, float(np.max(np.abs(d - 1.0 / prod))))
    return worst < 1e-10, f"max defect {worst:.3e}"


@_check("plancherel", "closed_form_density_match")
def _density_closed():
    lam = np.linspace(0.01, 50.0, 400)
    worst = 0.0
    for n in (0, 1, 2, 3, 4):
        d = pl.plancherel_density_vec(n, lam)
        worst = max(worst, float(np.max(np.abs(d - pl.plancherel_density_closed(n, lam)))))
    return worst < 1e-10, f"max defect {worst:.3e}"


@_check("plancherel", "density_derivative_bands")
def _density_bands():
    bands = pl.density_derivative_bands(2, 100.0)
    ok = all(np.isfinite(v) for v in bands.values())
    half = pl.density_derivative_bands(2, 50.0)
    stable = all(bands[a] <= 1.2 * half[a] + 1e-12 for a in bands)
    return ok and stable, f"bands {bands}"


@_check("plancherel", "reciprocal_recursion_product")
def _recursion():
    lam = np.array([0.7 + 0.1j, 2.0 - 0.3j, 4.0 + 0.9j])
    worst = 0.0
    for n in range(2, 7):
        lhs = pl.c_inv_minus_vec(n, lam)
        rhs = pl.c_inv_minus_product_form(n, lam)
        worst = max(worst, float(np.max(np.abs(lhs - rhs) / np.abs(lhs))))
    return worst < 1e-9, f"max relative defect {worst:.3e}"


@_check("plancherel", "reciprocal_strip_bands")
def _cinv_bands():
    ok = True
    detail = []
    for (n, p) in ((0, 1.5), (2, 1.5), (2, 1.0)):
        bands = pl.c_inv_minus_bands(n, p, lam_max=80.0)
        ok &= all(np.isfinite(v) for v in bands.values())
        detail.append(f"n={n},p={p}: a2={bands[2]:.2f}")
    return ok, "; ".join(detail)


# ---------------------------------------------------------------------- hc series


@_check("hc", "series_matches_direct")
def _series_direct():
    worst = 0.0
    for n in (0, 1, 2, 4):
        for lam in (0.5, 1.5, 2.5):
            for t in (1.0, 1.5, 2.0, 3.0):
                a = hc.phi_global_series(n, lam, t, 30)
                b = sph.phi_nn(n, lam, t, route="hyp")
                tol = max(1e-9, 10.0 * math.exp(-2.0 * 31 * t))
                if abs(a - b) / abs(b) > tol / max(abs(b), 1e-12):
                    worst = max(worst, abs(a - b))
    return worst == 0.0, f"max absolute excess {worst:.3e}"


@_check("hc", "coefficient_growth_witness")
def _growth_witness():
    exp_ = hc.hc_coefficients(3, 2.0, 100)
    ks = np.arange(1, 101)
    bound = exp_.growth_constant * (ks + 1.0) ** exp_.growth_exponent
    ok = bool(np.all(np.abs(exp_.coeffs[1:]) <= bound * (1 + 1e-12)))
    return ok, (f"C={exp_.growth_constant:.3g}, A={exp_.growth_exponent:.3g}, "
                f"a_0={exp_.coeffs[0]:.1f}")


@_check("hc", "branch_swap_symmetry")
def _branch_swap():
    worst = 0.0
    for (n, lam, t) in ((2, 1.3, 1.0), (1, 0.9, 2.0)):
        a = hc.phi_global_series(n, lam, t)
        b = hc.phi_global_series(n, -lam, t)
        worst = max(worst, abs(a - b))
    return worst < 1e-12, f"max asymmetry {worst:.3e}"


@_check("hc", "psi_series_vs_direct")
def _psi_series():
    worst = 0.0
    for (k, n) in ((1, 2), (2, 3), (1, 4), (3, 4)):
        for t in (1.0, 2.0):
            worst = max(worst, abs(hc.psi_series(k, n, t, 25)
                                   - sph.psi_discrete(k, n, t)))
    return worst < 1e-8, f"max gap {worst:.3e}"


# ---------------------------------------------------------------------- transforms


def _bump_profile(n, T=4.0):
    return tr.RadialProfile.from_callable(n, lambda t: np.exp(-2.0 * t * t), T)


@_check("transforms", "roundtrip_all_weights")
def _roundtrip():
    worst = 0.0
    grid = np.linspace(0.0, 3.0, 61)
    for n in (0, 1, 2, 3):
        f = _bump_profile(n)
        S = tr.forward_transform(f, 40.0, 801)
        rec = tr.inverse_transform(S, n, grid)
        ref = tr.RadialProfile.from_callable(n, f.source, 3.0)
        worst = max(worst, tr.relative_l2_error(ref, rec))
    return worst < 1e-3, f"max relative L2 error {worst:.3e}"


@_check("transforms", "spectrum_evenness")
def _spectrum_even():
    f = _bump_profile(2)
    lam = np.array([0.4, 1.1, 2.7])
    d = np.max(np.abs(tr.spherical_transform(f, lam)
                      - tr.spherical_transform(f, -lam)))
    return d < 1e-10, f"max asymmetry {d:.3e}"


@_check("transforms", "linearity")
def _linearity():
    rng = np.random.default_rng(15)
    a, b = rng.normal(size=2)
    f1 = _bump_profile(2)
    f2 = tr.RadialProfile.from_callable(
        2, lambda t: np.exp(-3.0 * (np.asarray(t) - 0.4) ** 2), 4.0)
    comb = tr.RadialProfile.from_callable(
        2, lambda t: a * f1.source(t) + b * f2.source(t), 4.0)
    lam = np.linspace(0.0, 10.0, 11)
    lhs = tr.spherical_transform(comb, lam)
    rhs = a * tr.spherical_transform(f1, lam) + b * tr.spherical_transform(f2, lam)
    d = float(np.max(np.abs(lhs - rhs)))
    return d < 1e-12, f"max defect {d:.3e}"


@_check("transforms", "discrete_parity_bookkeeping")
def _parity():
    ok = tr.gamma_set(0) == () and tr.gamma_set(1) == () and tr.gamma_set(-1) == ()
    ok &= tr.gamma_set(4) == (1, 3) and tr.gamma_set(-5) == (-4, -2)
    ok &= all(abs(n) >= 2 or not tr.gamma_set(n) for n in range(-6, 7))
    ok &= all((k - n) % 2 == 1 for n in range(-6, 7) for k in tr.gamma_set(n))
    return ok, "parity and emptiness rules hold"


@_check("transforms", "abel_evenness_and_slice")
def _abel():
    f = _bump_profile(0)
    tr.abel_transform(f, np.array([0.5, 1.0, 2.0]))  # even assertion built in
    lam = np.array([0.7, 1.9])
    ratio = tr.abel_fourier_slice(f, lam, R=8.0) / tr.spherical_transform(f, lam)
    d = float(np.max(np.abs(ratio - tr.ABEL_FOURIER_CONSTANT)))
    return d < 1e-6, f"slice constants {ratio.real}, defect {d:.3e}"


# ---------------------------------------------------------------------- lorentz


@_check("lorentz", "distribution_band_for_exponential")
def _dist_band():
    t = np.linspace(0.0, 14.0, 400)
    f1 = tr.RadialProfile(0, t, np.exp(-2.0 * t))
    vals = [lor.distribution_function(f1, a) * a for a in (1e-3, 1e-5, 1e-7)]
    ok = all(0.4 < v < 0.6 for v in vals)
    return ok, f"alpha * d(alpha) = {vals}"


@_check("lorentz", "weak_membership_boundary")
def _weak_boundary():
    ok = True
    detail = []
    for (k, n) in ((1, 2), (2, 3), (3, 4)):
        t = np.linspace(0.0, 14.0, 500)
        f = tr.RadialProfile(n, t, sph.psi_discrete_vec(k, n, t))
        pstar = 2.0 / (k + 1.0)
        below = lor.lorentz_weak_norm(f, pstar - 0.05)
        at = lor.lorentz_weak_norm(f, pstar)
        ok &= math.isinf(below) and math.isfinite(at)
        detail.append(f"k={k}: below=inf? {math.isinf(below)}, at={at:.3f}")
    return ok, "; ".join(detail)


@_check("lorentz", "endpoint_pq_divergence")
def _pq_endpoint():
    t = np.linspace(0.0, 14.0, 500)
    f1 = tr.RadialProfile(0, t, np.exp(-2.0 * t))
    dive = lor.lorentz_pq_norm(f1, 1.0, 2.0)
    fine = lor.lorentz_pq_norm(f1, 1.5, 2.0)
    ok = math.isinf(dive) and math.isfinite(fine)
    return ok, f"(1,2)={dive}, (1.5,2)={fine:.4f}"


@_check("lorentz", "lq_membership_of_psi")
def _lq_membership():
    t = np.linspace(0.0, 20.0, 600)
    f = tr.RadialProfile(2, t, sph.psi_discrete_vec(1, 2, t))
    vals = {}
    for q in (1.1, 2.0, 4.0):
        res = geo.radial_integral((t, np.abs(f.values) ** q), 20.0)
        vals[q] = res.value ** (1.0 / q)
    ok = all(np.isfinite(v) and v > 0 for v in vals.values())
    return ok, f"L^q norms {vals}"


# ---------------------------------------------------------------------- psido


@_check("psido", "identity_symbol_roundtrip")
def _psido_identity():
    f = _bump_profile(2)
    x = np.linspace(0.05, 2.5, 15)
    g = ps.apply_psido(sy.symbol_one(0.0, 2), f, x, 40.0, 801)
    ref = tr.RadialProfile(2, x, f(x))
    err = tr.relative_l2_error(ref, g)
    return err < 1e-3, f"relative error {err:.3e}"


@_check("psido", "multiplier_path_consistency")
def _psido_multiplier():
    f = _bump_profile(2)
    x = np.linspace(0.05, 2.5, 15)
    m = lambda lam: 1.0 / (np.asarray(lam) ** 2 + 4.0)
    g1 = ps.apply_psido(sy.symbol_multiplier(m, 0.0, 2), f, x, 40.0, 801)
    g2 = ps.multiplier_apply(m, f, x, 40.0, 801)
    d = float(np.max(np.abs(g1.values - g2.values)))
    return d < 1e-10, f"max pointwise gap {d:.3e}"


@_check("psido", "cutoff_partition_of_unity")
def _cutoffs():
    t = np.linspace(-2.0, 2.0, 401)
    d = float(np.max(np.abs(sy.eta0(t) + sy.eta1(t) - 1.0)))
    ok = d == 0.0
    ok &= float(sy.eta0(0.49)) == 1.0 and float(sy.eta0(1.01)) == 0.0
    lam = np.linspace(0.0, 3.0, 301)
    pv = sy.phi_highpass(lam)
    ok &= np.all(pv[lam <= 1.0] == 0.0) and np.all(pv[lam >= 2.0] == 1.0)
    return ok, f"partition defect {d:.1e}"


@_check("psido", "split_reconstitution")
def _split():
    f = _bump_profile(2)
    x = np.linspace(0.05, 2.5, 8)
    s = sy.symbol_one(1e-3, 2)
    dis, loc, glo = ps.split_operator(s, f, x, 40.0, num_lambda=801)
    ga = ps.apply_psido(s, f, x, 40.0, 801)
    tot = dis.values + loc.values + glo.values
    rel = float(np.sqrt(np.sum(np.abs(tot - ga.values) ** 2)
                        / np.sum(np.abs(ga.values) ** 2)))
    return rel < 1e-4, f"relative defect {rel:.3e}"


@_check("psido", "global_kernel_bound_band")
def _global_band():
    rs = np.linspace(0.7, 6.0, 8)
    ok = True
    detail = []
    for (p, n) in ((1.5, 0), (1.5, 1), (1.0, 1)):
        s = sy.symbol_rational(4.0, 1e-3, n)
        ratios = [ps.kernel_global(s, p, 0.4, r, n=n).bound_ratio for r in rs]
        band = max(ratios) / max(min(ratios), 1e-300)
        ok &= band < 1e3
        detail.append(f"p={p},n={n}: band {band:.1f}")
    return ok, "; ".join(detail)


@_check("psido", "contour_vs_real_line")
def _contour_agreement():
    s = sy.symbol_rational(4.0, 1e-3, 0)
    res = ps.kernel_global(s, 1.5, 0.4, 2.0, n=0)
    rel = abs(res.direct - res.contour) / abs(res.direct)
    return rel < 1e-6, f"relative gap {rel:.3e}"


@_check("psido", "euclidean_symbol_bands")
def _cw_bands():
    s = sy.symbol_spectral_power(0.5j, 1e-3, 0)
    xi = np.linspace(0.0, 8.0, 81)
    res = ps.cw_symbol_extract(s, 0.3, 0.2, xi, n=0)
    ok = all(np.isfinite(v) for v in res.bands.values())
    return ok, f"bands {res.bands}"


# ----------------------------------------------------------------------


def run_suite(suite: str = "all") -> list[CheckResult]:
    out = []
    for (s, name, fn) in _REGISTRY:
        if suite not in ("all", s):
            continue
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        out.append(CheckResult(s, name, bool(ok), detail))
    return out


def format_table(results: list[CheckResult]) -> str:
    width = max(len(f"{r.suite}.{r.name}") for r in results) + 2
    lines = []
    for r in results:
        tag = "PASS" if r.ok else "FAIL"
        lines.append(f"{tag}  {(r.suite + '.' + r.name).ljust(width)} {r.detail}")
    n_ok = sum(r.ok for r in results)
    lines.append(f"{n_ok}/{len(results)} checks passed")
    return "\n".join(lines)
