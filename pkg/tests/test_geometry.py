import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2harm import geometry as geo
from sl2harm.errors import DomainError, UnimodularityError


def test_unimodularity_enforced():
    with pytest.raises(UnimodularityError):
        geo.GroupElement(1.0, 0.0, 0.0, 1.0 + 1e-6)
    geo.GroupElement(1.0, 0.0, 0.0, 1.0)  # exact identity fine


def test_iwasawa_identity_and_pure_flow():
    ic = geo.iwasawa_decompose(geo.GroupElement(1, 0, 0, 1))
    assert (ic.theta, ic.t, ic.v) == (0.0, 0.0, 0.0)
    ic = geo.iwasawa_decompose(geo.a_flow(1.0))
    assert abs(ic.theta) < 1e-15 and abs(ic.t - 1.0) < 1e-15 and abs(ic.v) < 1e-15


def test_iwasawa_nbar_height():
    # e^{2 H} = 1 + v^2 for the lower shear
    ic = geo.iwasawa_decompose(geo.nbar_shear(1.0))
    assert abs(ic.t - 0.5 * math.log(2.0)) < 1e-14
    assert abs(geo.h_of_nbar(1.0) - 0.5 * math.log(2.0)) < 1e-15


def test_cartan_pure_cases():
    cc = geo.cartan_decompose(geo.a_flow(1.3))
    assert abs(cc.theta1) < 1e-12 and abs(cc.r - 1.3) < 1e-12 and abs(cc.theta2) < 1e-12
    # pure rotation: r = 0, only the angle sum is meaningful
    cc = geo.cartan_decompose(geo.k_rot(0.7))
    assert cc.r == 0.0
    rec = cc.recompose()
    assert np.max(np.abs(rec.matrix - geo.k_rot(0.7).matrix)) < 1e-12


def test_cartan_radius_vs_svd_oracle():
    # independent oracle: singular values from numpy's iterative SVD
    rng = np.random.default_rng(3)
    for g in geo.random_unimodular(rng, 50, t_scale=1.5, v_scale=2.0):
        s = np.linalg.svd(g.matrix, compute_uv=False)
        assert abs(geo.cartan_decompose(g).r - math.log(s[0])) < 1e-10
    v1 = geo.nbar_shear(1.0)
    assert abs(geo.cartan_decompose(v1).r - 0.5 * math.acosh(1.5)) < 1e-14


@settings(max_examples=200, deadline=None)
@given(st.floats(0, 2 * math.pi), st.floats(-2.5, 2.5), st.floats(-3, 3),
       st.floats(0, 2 * math.pi))
def test_roundtrips_random(th1, t, v, th2):
    g = geo.k_rot(th1) @ geo.a_flow(t) @ geo.n_shear(v) @ geo.k_rot(th2)
    for dec in (geo.iwasawa_decompose(g), geo.cartan_decompose(g)):
        assert np.max(np.abs(dec.recompose().matrix - g.matrix)) < 1e-10


def test_nbar_radius_examples():
    res = geo.nbar_cartan_radius(0.0, 2.0)
    assert res.radius == pytest.approx(2.0, abs=1e-14)
    assert abs(res.correction) < 1e-12

    res = geo.nbar_cartan_radius(1.0, 0.0)
    assert res.radius == pytest.approx(0.5 * math.acosh(1.5), abs=1e-12)
    assert 0.0 <= res.correction <= 2.0

    res = geo.nbar_cartan_radius(1.0, 5.0)
    assert abs(res.radius - (5.0 + 0.5 * math.log(2.0))) <= 2.0 * math.exp(-10.0)

    with pytest.raises(DomainError):
        geo.nbar_cartan_radius(1.0, -0.1)


def test_sandwich_property():
    rng = np.random.default_rng(4)
    for _ in range(1000):
        v = rng.normal(0.0, 2.0)
        r = rng.uniform(0.0, 8.0)
        res = geo.nbar_cartan_radius(v, r)
        assert -1e-10 <= res.correction <= 2.0 * math.exp(-2.0 * r) + 1e-10


def test_radial_integral_closed_forms():
    zero = geo.radial_integral(lambda t: np.zeros_like(t), 1.0)
    assert zero.value == 0.0

    one = geo.radial_integral(lambda t: np.ones_like(t), 1.0)
    assert one.value == pytest.approx(math.cosh(2.0) - 1.0, rel=1e-13)
    assert one.rel_error < 1e-12


def test_radial_integral_refinement_oracle():
    # Richardson-style refinement oracle: successively halved panels
    fn = lambda t: np.exp(-4.0 * t)
    coarse = geo.radial_integral(fn, 20.0, panel_width=1.0).value
    fine = geo.radial_integral(fn, 20.0, panel_width=0.25).value
    assert abs(coarse - fine) < 1e-10
    res = geo.radial_integral(fn, 20.0)
    assert res.value == pytest.approx(fine, abs=1e-10)


def test_radial_integral_nan_reported():
    def bad(t):
        out = np.ones_like(t)
        out[t > 0.5] = np.nan
        return out

    with pytest.raises(DomainError, match="t="):
        geo.radial_integral(bad, 1.0)


def test_radial_integral_sampled_input():
    t = np.linspace(0, 1, 201)
    res = geo.radial_integral((t, np.ones_like(t)), 1.0)
    assert res.value == pytest.approx(math.cosh(2.0) - 1.0, rel=1e-10)


def test_shear_dilation_formula():
    h = lambda v: np.exp(-((v - 0.3) ** 2))
    from sl2harm.quadrature import gl_panels

    nodes, wts = gl_panels(-30.0, 30.0)
    base = float(np.sum(h(nodes) * wts))
    for r in (0.5, 1.5):
        scale = math.exp(2.0 * r)
        wide, ww = gl_panels(-30.0 * scale, 30.0 * scale, 64, 0.5 * scale)
        lhs = float(np.sum(h(np.exp(-2.0 * r) * wide) * ww))
        assert lhs == pytest.approx(scale * base, rel=1e-12)
