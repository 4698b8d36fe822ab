"""Fractional differentiation on the half line.

Two faces of the same operator: the analytic power rule for monomials,
and a Grunwald-Letnikov discretization for uniformly sampled signals
with the lower terminal at the series start. Signals are treated as
zero before their start time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import DomainError, GridError
from .special import gamma


@dataclass(frozen=True)
class FractionalOrder:
    """Differentiation order nu restricted to [0, 1]."""

    nu: float

    def __post_init__(self):
        if not (math.isfinite(self.nu) and 0.0 <= self.nu <= 1.0):
            raise DomainError(f"fractional order must lie in [0, 1], got {self.nu}")


OrderLike = Union[FractionalOrder, float, int]


def _order(nu: OrderLike) -> float:
    if isinstance(nu, FractionalOrder):
        return nu.nu
    return FractionalOrder(float(nu)).nu


class SignalSeries:
    """A uniformly sampled signal: start time, grid step, samples.

    Immutable; the sample array is copied in and locked.
    """

    __slots__ = ("t0", "dt", "values")

    def __init__(self, t0: float, dt: float, values: Sequence[float]):
        vals = np.asarray(values, dtype=float).copy()
        if not (math.isfinite(dt) and dt > 0.0):
            raise GridError(f"grid step must be positive, got {dt}")
        if not (math.isfinite(t0) and t0 >= 0.0):
            raise GridError(f"start time must be non-negative, got {t0}")
        if vals.ndim != 1 or vals.size < 2:
            raise GridError("signal needs at least 2 samples")
        if not np.all(np.isfinite(vals)):
            raise GridError("signal samples must all be finite")
        vals.flags.writeable = False
        object.__setattr__(self, "t0", float(t0))
        object.__setattr__(self, "dt", float(dt))
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("SignalSeries is immutable")

    def __len__(self) -> int:
        return self.values.size

    def times(self) -> np.ndarray:
        """Sample times t0, t0+dt, ..."""
        return self.t0 + self.dt * np.arange(self.values.size)

    def __repr__(self):
        return (f"SignalSeries(t0={self.t0}, dt={self.dt}, "
                f"n={self.values.size})")


def frac_deriv_power(nu: OrderLike, k: float, t: float) -> float:
    """Riemann-Liouville derivative of t**k, analytically.

    Returns Gamma(k+1)/Gamma(k-nu+1) * t**(k-nu). Requires t > 0,
    k > -1 and k - nu > -1 so both gamma arguments stay positive.
    """
    n = _order(nu)
    if not (isinstance(t, (int, float)) and t > 0.0):
        raise DomainError(f"time must be positive, got {t}")
    if not (k > -1.0):
        raise DomainError(f"exponent must exceed -1, got {k}")
    if not (k - n > -1.0):
        raise DomainError(f"exponent {k} minus order {n} must exceed -1")
    return gamma(k + 1.0) / gamma(k - n + 1.0) * t ** (k - n)


def gl_weights(nu: OrderLike, n: int) -> np.ndarray:
    """First n Grunwald-Letnikov weights for order nu.

    w_0 = 1 and w_j = w_{j-1} * (1 - (nu+1)/j), which is
    (-1)**j * binomial(nu, j).
    """
    order = _order(nu)
    if n < 1:
        raise DomainError(f"need at least one weight, got n={n}")
    if n == 1:
        return np.ones(1)
    j = np.arange(1, n, dtype=float)
    return np.concatenate(([1.0], np.cumprod(1.0 - (order + 1.0) / j)))


def gl_derivative(s: SignalSeries, nu: OrderLike) -> SignalSeries:
    """Discrete fractional derivative of order nu on the signal's grid.

    Sample n is dt**(-nu) * sum_j w_j * values[n-j] with the signal
    taken as zero before its start. Order 1 reduces to the backward
    difference quotient, order 0 to the identity.
    """
    order = _order(nu)
    m = len(s)
    w = gl_weights(order, m)
    # direct O(n^2) convolution; grids here are desk-scale
    conv = np.convolve(s.values, w)[:m]
    return SignalSeries(s.t0, s.dt, s.dt ** (-order) * conv)


def caputo_derivative(s: SignalSeries, nu: OrderLike) -> SignalSeries:
    """Caputo form: the same operator applied to s - s(t0).

    Kills constants for every positive order; coincides with
    gl_derivative whenever the signal starts at zero.
    """
    shifted = SignalSeries(s.t0, s.dt, s.values - s.values[0])
    return gl_derivative(shifted, nu)
