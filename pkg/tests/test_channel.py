import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadcover.channel import (
    PRESETS,
    SPEED_OF_LIGHT,
    Environment,
    LinkGeometry,
    fspl_constant,
    p_los,
    pl_max,
    w_factor,
)

SUB = PRESETS["suburban"]


def test_presets():
    assert (SUB.xi_los, SUB.xi_nlos, SUB.eta, SUB.kappa) == (0.1, 21, 4.88, 0.43)
    u = PRESETS["urban"]
    assert (u.xi_los, u.xi_nlos, u.eta, u.kappa) == (1, 20, 9.61, 0.16)
    d = PRESETS["dense_urban"]
    assert (d.xi_los, d.xi_nlos, d.eta, d.kappa) == (1.6, 23, 12.08, 0.11)
    assert set(PRESETS) == {"suburban", "urban", "dense_urban"}


def test_environment_validation():
    with pytest.raises(ValueError):
        Environment(21, 0.1, 4.88, 0.43)
    with pytest.raises(ValueError):
        Environment(0.1, 21, 4.88, 0.0)
    with pytest.raises(ValueError):
        LinkGeometry(50, 80, 10)


def test_w_factor_examples():
    assert w_factor(LinkGeometry(70, 70, 30)) == pytest.approx(70 * 70)
    g = LinkGeometry(93.8, 83.0, 49.6)
    assert w_factor(g) == pytest.approx(7785.4 + math.sqrt((6889 + 2460.16) * (8798.44 - 6889)))
    # farthest horizontal distance equals h tan(psi + theta) with the published angles
    g = LinkGeometry(440.3, 199.2, 310.3)
    far = w_factor(g) / g.b
    assert far == pytest.approx(1167.2, abs=0.1)
    assert far == pytest.approx(310.3 * math.tan(math.radians(58.9 + 16.2)), rel=2e-3)


def test_p_los_examples():
    assert p_los(SUB, SUB.eta) == pytest.approx(1 / 5.88)
    assert p_los(SUB, SUB.eta) == pytest.approx(0.17007, abs=1e-5)
    assert p_los(SUB, 90.0) == pytest.approx(1.0, abs=1e-9)
    assert p_los(SUB, 30.0) == pytest.approx(1 / (1 + 4.88 * math.exp(-0.43 * 25.12)))


@given(st.floats(0.01, 89.0), st.floats(0.01, 0.99), st.sampled_from(sorted(PRESETS)))
def test_p_los_increasing_and_bounded(e1, frac, name):
    env = PRESETS[name]
    e2 = e1 + frac
    p1, p2 = p_los(env, e1), p_los(env, e2)
    assert 0 < p1 <= p2 <= 1
    # near 90 deg the curve is within float spacing of 1, so strictness is only checkable below that
    if 1 - p1 > 1e-12:
        assert p1 < p2


def test_circular_footprint_reduces_to_single_uav_model():
    b, h, f = 120.0, 80.0, 2e9
    g = LinkGeometry(b, b, h, f)
    elevation = math.degrees(math.atan(h / b))
    los = 1 / (1 + SUB.eta * math.exp(-SUB.kappa * (elevation - SUB.eta)))
    fspl = 20 * math.log10(4 * math.pi * f / SPEED_OF_LIGHT)
    expected = (SUB.xi_los - SUB.xi_nlos) * los + 10 * math.log10(h * h + b * b) + fspl + SUB.xi_nlos
    assert pl_max(SUB, g) == pytest.approx(expected, rel=1e-12)
    assert fspl_constant(f) == pytest.approx(fspl)


def test_monotonicity_probe_near_published_optimum():
    at = lambda h: float(pl_max(SUB, LinkGeometry(217.0, 146.8, h)))  # noqa: E731
    assert at(134.7) <= at(100.0)
    assert at(134.7) <= at(170.0)


def test_dense_urban_worse_than_suburban():
    g = LinkGeometry(100, 80, 50)
    assert pl_max(PRESETS["dense_urban"], g) > pl_max(SUB, g)


def test_vectorized_altitudes_match_scalar():
    hs = np.geomspace(1, 1e4, 50)
    vec = pl_max(SUB, LinkGeometry(300, 120, hs))
    scal = [float(pl_max(SUB, LinkGeometry(300, 120, h))) for h in hs]
    np.testing.assert_allclose(vec, scal, rtol=1e-14)
    assert np.all(np.isfinite(vec))


@given(st.floats(1.0, 500.0), st.floats(0.0, 1.0), st.floats(0.5, 1e4))
def test_pl_max_finite(b, extra, h):
    g = LinkGeometry(b * (1 + extra), b, h)
    assert math.isfinite(float(pl_max(SUB, g)))


def test_large_altitude_dominated_by_free_space():
    g = lambda h: LinkGeometry(200, 100, h)  # noqa: E731
    assert pl_max(SUB, g(1e4)) > pl_max(SUB, g(1e3)) > pl_max(SUB, g(300))
