"""Discrete fractional-derivative operators against the analytic power rule."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from frheo.errors import DomainError, GridError
from frheo.fracops import (FractionalOrder, SignalSeries, caputo_derivative,
                           frac_deriv_power, gl_derivative, gl_weights)


def ramp(dt, tmax=1.0):
    t = np.arange(0.0, tmax + dt / 2, dt)
    return SignalSeries(0.0, dt, t)


# --------------------------------------------------------------- weights

def test_weights_first_difference_stencil():
    assert_allclose(gl_weights(1, 3), [1.0, -1.0, 0.0], atol=0.0)


def test_weights_identity_operator():
    assert_allclose(gl_weights(0, 3), [1.0, 0.0, 0.0], atol=0.0)


def test_weights_half_order_hand_checked():
    # binomial recurrence gives exact dyadic rationals at nu = 1/2
    w = gl_weights(0.5, 4)
    assert list(w) == [1.0, -0.5, -0.125, -0.0625]


def test_weights_single():
    assert list(gl_weights(0.7, 1)) == [1.0]


def test_weight_partial_sums_decay():
    w = gl_weights(0.5, 10001)
    assert abs(w.sum()) < 0.05


def test_weights_bad_count():
    with pytest.raises(DomainError):
        gl_weights(0.5, 0)


# ------------------------------------------------------------ power rule

@pytest.mark.parametrize("t", [0.2, 1.0, 7.0])
def test_power_rule_first_derivative_of_t(t):
    assert frac_deriv_power(1, 1, t) == pytest.approx(1.0, rel=1e-14)


def test_power_rule_half_derivative_of_t():
    assert frac_deriv_power(0.5, 1, 1.0) == pytest.approx(
        2.0 / math.sqrt(math.pi), rel=1e-14)


def test_power_rule_zero_order_is_identity():
    for k in (0.5, 1.0, 2.0):
        assert frac_deriv_power(0, k, 3.0) == pytest.approx(3.0**k, rel=1e-14)


def test_power_rule_domain():
    with pytest.raises(DomainError):
        frac_deriv_power(0.5, 1.0, 0.0)
    with pytest.raises(DomainError):
        frac_deriv_power(0.5, -1.0, 1.0)
    with pytest.raises(DomainError):
        frac_deriv_power(0.75, -0.5, 1.0)  # k - nu at the gamma pole edge
    with pytest.raises(DomainError):
        FractionalOrder(1.5)
    with pytest.raises(DomainError):
        FractionalOrder(-0.1)


# ------------------------------------------------------------ gl operator

def test_gl_zero_order_returns_input():
    s = SignalSeries(0.0, 0.1, np.ones(20))
    out = gl_derivative(s, 0)
    assert_allclose(out.values, s.values, atol=0.0)
    assert out.t0 == s.t0 and out.dt == s.dt


def test_gl_half_order_of_ramp_matches_power_rule():
    s = ramp(1e-3)
    d = gl_derivative(s, 0.5)
    assert d.values[-1] == pytest.approx(frac_deriv_power(0.5, 1, 1.0), abs=5e-3)


def test_gl_order_one_is_backward_difference():
    rng = np.random.default_rng(7)
    vals = rng.standard_normal(50)
    s = SignalSeries(0.0, 0.25, vals)
    d = gl_derivative(s, 1)
    ref = np.empty(50)
    ref[0] = vals[0] / 0.25  # zero extension below the start
    ref[1:] = np.diff(vals) / 0.25
    assert_allclose(d.values, ref, rtol=1e-14)


def test_gl_linearity():
    rng = np.random.default_rng(11)
    x = rng.standard_normal(80)
    y = rng.standard_normal(80)
    sx = SignalSeries(0.0, 0.1, x)
    sy = SignalSeries(0.0, 0.1, y)
    s_mix = SignalSeries(0.0, 0.1, 2.5 * x - 1.25 * y)
    mix = gl_derivative(s_mix, 0.6).values
    parts = 2.5 * gl_derivative(sx, 0.6).values - 1.25 * gl_derivative(sy, 0.6).values
    scale = np.max(np.abs(parts))
    assert np.max(np.abs(mix - parts)) < 1e-12 * scale


@pytest.mark.parametrize("k,nu", [(1.0, 0.25), (1.0, 0.75), (2.0, 0.5)])
def test_gl_convergence_order_spot_check(k, nu):
    errs = []
    for dt in (1e-2, 1e-3):
        t = np.arange(0.0, 1.0 + dt / 2, dt)
        d = gl_derivative(SignalSeries(0.0, dt, t**k), nu)
        errs.append(abs(d.values[-1] - frac_deriv_power(nu, k, 1.0)))
    order = math.log(errs[0] / errs[1]) / math.log(10.0)
    assert 0.8 <= order <= 1.2, f"observed order {order:.3f}"


# --------------------------------------------------------------- caputo

def test_caputo_kills_constants():
    s = SignalSeries(0.0, 0.1, np.full(30, 4.2))
    for nu in (0.3, 0.7, 1.0):
        assert_allclose(caputo_derivative(s, nu).values, np.zeros(30), atol=1e-14)


def test_caputo_of_ramp_matches_power_rule():
    d = caputo_derivative(ramp(1e-3), 0.5)
    assert d.values[-1] == pytest.approx(frac_deriv_power(0.5, 1, 1.0), abs=5e-3)


def test_caputo_definitional_identity():
    rng = np.random.default_rng(3)
    vals = rng.standard_normal(40) + 2.0
    s = SignalSeries(0.0, 0.05, vals)
    shifted = SignalSeries(0.0, 0.05, vals - vals[0])
    assert_allclose(caputo_derivative(s, 0.4).values,
                    gl_derivative(shifted, 0.4).values, atol=0.0)


# ------------------------------------------------------------- series type

def test_series_validation():
    with pytest.raises(GridError):
        SignalSeries(0.0, 0.0, [1.0, 2.0])
    with pytest.raises(GridError):
        SignalSeries(0.0, -0.1, [1.0, 2.0])
    with pytest.raises(GridError):
        SignalSeries(-1.0, 0.1, [1.0, 2.0])
    with pytest.raises(GridError):
        SignalSeries(0.0, 0.1, [1.0])
    with pytest.raises(GridError):
        SignalSeries(0.0, 0.1, [1.0, math.nan])


def test_series_immutability_and_times():
    s = SignalSeries(1.0, 0.5, [1.0, 2.0, 3.0])
    with pytest.raises(AttributeError):
        s.dt = 0.2
    with pytest.raises(ValueError):
        s.values[0] = 9.0
    assert_allclose(s.times(), [1.0, 1.5, 2.0], atol=0.0)
    assert len(s) == 3
