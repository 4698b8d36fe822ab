"""Numerical inverse Laplace transform checked against known transform pairs."""

import math

import numpy as np
import pytest

from frheo.errors import ConvergenceError, DomainError
from frheo.laplace import _talbot_sum, invert
from frheo.special import MLParams, ml_eval


def test_step_function():
    assert invert(lambda s: 1.0 / s, 5.0) == pytest.approx(1.0, abs=1e-8)


def test_decaying_exponential():
    assert invert(lambda s: 1.0 / (s + 1.0), 1.0) == pytest.approx(
        math.exp(-1.0), rel=1e-8)


def test_inverse_sqrt():
    # 1/sqrt(s) pairs with 1/sqrt(pi t)
    assert invert(lambda s: s**-0.5, 1.0) == pytest.approx(
        1.0 / math.sqrt(math.pi), rel=1e-8)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.9])
@pytest.mark.parametrize("lam", [0.5, 1.0, 2.0])
def test_mittag_leffler_pair(alpha, lam):
    # s^(a-1)/(s^a + c) inverts to the one-parameter function of -c t^a
    p = MLParams(alpha, 1.0)
    for t in np.geomspace(0.1, 10.0, 7):
        got = invert(lambda s: s**(alpha - 1.0) / (s**alpha + lam), float(t))
        want = ml_eval(p, -lam * t**alpha)
        assert got == pytest.approx(want, rel=1e-8, abs=1e-12)


def test_exponential_family_certified_range():
    # Far down an exponential tail the contour sum loses all significant
    # digits, so declines are expected there; the body of the decay must
    # both certify and agree tightly.
    for tau in (0.5, 2.0):
        transform = lambda s: 3.0 / (1.0 + tau * s)
        for x in np.geomspace(0.01, 20.0, 15):
            t = float(x * tau)
            want = (3.0 / tau) * math.exp(-x)
            try:
                got = invert(transform, t)
            except ConvergenceError:
                assert x > 4.0, f"declined inside the certified range, x={x}"
                continue
            assert got == pytest.approx(want, rel=1e-7)


def test_refinement_is_monotone():
    f = lambda s: 1.0 / (1.0 + s)
    levels = [_talbot_sum(f, 1.0, n).real for n in (8, 16, 32)]
    assert abs(levels[0] - levels[1]) >= abs(levels[1] - levels[2])


def test_domain_checks():
    f = lambda s: 1.0 / s
    with pytest.raises(DomainError):
        invert(f, 0.0)
    with pytest.raises(DomainError):
        invert(f, -1.0)
    with pytest.raises(DomainError):
        invert(f, math.inf)
    with pytest.raises(DomainError):
        invert(f, 1.0, tol=1e-13)


def test_honest_decline_deep_in_tail():
    # exp(-40) is ~4e-18: unreachable at 1e-10 relative accuracy in doubles
    with pytest.raises(ConvergenceError):
        invert(lambda s: 1.0 / (s + 1.0), 40.0, tol=1e-10)


def test_imaginary_residue_rejected():
    # a transform that is not real-symmetric leaves a genuine imaginary part
    with pytest.raises(ConvergenceError):
        invert(lambda s: 1.0 / (s + 1j), 1.0)
