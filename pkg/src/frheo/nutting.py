"""Power-law creep fitting and quasi-property extraction.

The creep law strain = S**b * t**a / psi is exactly linear in log
space, so the fit is a plain least-squares solve; no iterative
optimizer, no starting guesses. Quasi-properties divide the applied
stress by a fractional derivative of the recorded strain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateDataError, DivisionError, DomainError
from .fracops import OrderLike, SignalSeries, _order, gl_derivative


@dataclass(frozen=True)
class CreepRecord:
    """One experimental triple: time, applied stress, measured strain."""

    t: float
    stress: float
    strain: float

    def __post_init__(self):
        for name in ("t", "stress", "strain"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise DomainError(
                    f"creep record field {name} must be positive, got {v}")


@dataclass(frozen=True)
class NuttingFit:
    """Fitted creep-law parameters plus fit diagnostics.

    beta_fixed marks records without stress variation, where the stress
    exponent cannot be identified and is pinned to 1.
    alpha_range_violation marks time exponents outside [0, 1]; the raw
    value is reported, never clamped.
    """

    psi: float
    alpha: float
    beta_exp: float
    rms_log_residual: float
    n_points: int
    beta_fixed: bool = False
    alpha_range_violation: bool = False

    def __post_init__(self):
        if not (self.psi > 0 and math.isfinite(self.psi)):
            raise DomainError(f"psi must be positive, got {self.psi}")
        if not (self.rms_log_residual >= 0):
            raise DomainError("rms residual cannot be negative")
        if self.n_points < 3:
            raise DomainError("a fit needs at least 3 points")


def fit_nutting(data) -> NuttingFit:
    """Least-squares fit of log strain = b*log stress + a*log t - log psi.

    Needs at least 3 records and 2 distinct times. With fewer than 2
    distinct stresses the exponent b is not identifiable; it is fixed
    to 1 and the fit flagged. Raises DegenerateDataError when the
    design matrix stays rank-deficient beyond that fallback.
    """
    records = [r if isinstance(r, CreepRecord) else CreepRecord(*r) for r in data]
    n = len(records)
    if n < 3:
        raise DegenerateDataError(f"need at least 3 records, got {n}")
    log_t = np.log([r.t for r in records])
    log_s = np.log([r.stress for r in records])
    y = np.log([r.strain for r in records])
    beta_fixed = np.unique(log_s).size < 2
    if beta_fixed:
        design = np.column_stack([log_t, np.ones(n)])
        target = y - log_s  # b pinned to 1
    else:
        design = np.column_stack([log_s, log_t, np.ones(n)])
        target = y
    coef, _, rank, _ = np.linalg.lstsq(design, target, rcond=None)
    if rank < design.shape[1]:
        raise DegenerateDataError(
            "records do not span the fit: vary the times "
            "(and stresses, for the stress exponent)")
    if beta_fixed:
        beta_exp = 1.0
        alpha, intercept = coef
    else:
        beta_exp, alpha, intercept = coef
    resid = target - design @ coef
    rms = float(np.sqrt(np.mean(resid**2)))
    return NuttingFit(
        psi=float(np.exp(-intercept)),
        alpha=float(alpha),
        beta_exp=float(beta_exp),
        rms_log_residual=rms,
        n_points=n,
        beta_fixed=bool(beta_fixed),
        alpha_range_violation=not 0.0 <= alpha <= 1.0,
    )


def quasi_property(S: float, strain: SignalSeries, mu: OrderLike) -> SignalSeries:
    """Stress divided by the order-mu fractional derivative of strain.

    Order 0 gives the reciprocal-modulus analog, order 1 the apparent
    viscosity. Leading samples where the strain is still identically
    zero carry no information and are dropped from the output; the
    derivative is taken on the full record first, so the memory lower
    terminal stays at the record start.
    """
    if not (isinstance(S, (int, float)) and math.isfinite(S) and S > 0):
        raise DomainError(f"stress must be positive, got {S}")
    deriv = gl_derivative(strain, mu).values
    vals = strain.values
    positive = vals > 0.0
    if not positive.any():
        raise DivisionError("strain record is identically non-positive")
    start = int(np.argmax(positive))
    if np.any(vals[start:] <= 0.0):
        raise DomainError("strain must stay positive beyond the startup region")
    tail = deriv[start:]
    if np.any(tail <= 0.0):
        bad = start + int(np.argmax(tail <= 0.0))
        raise DivisionError(
            f"fractional derivative is non-positive at sample {bad} "
            f"(t = {strain.t0 + bad * strain.dt:g})")
    if tail.size < 2:
        raise DomainError("too few samples beyond the startup region")
    return SignalSeries(strain.t0 + start * strain.dt, strain.dt, S / tail)


def nutting_general_series(S: float, beta_exp: float, alpha_prime: float,
                           coeffs, t_grid) -> SignalSeries:
    """Descending power series S**b * (c0*t**a' + c1*t**(a'-1) + ...).

    A single coefficient reduces to the plain creep law with
    psi = 1/c0. Times must be strictly positive since the trailing
    exponents are negative.
    """
    if not (isinstance(S, (int, float)) and math.isfinite(S) and S > 0):
        raise DomainError(f"stress must be positive, got {S}")
    if not (isinstance(beta_exp, (int, float)) and math.isfinite(beta_exp)
            and beta_exp > 0):
        raise DomainError(f"stress exponent must be positive, got {beta_exp}")
    if not (isinstance(alpha_prime, (int, float)) and math.isfinite(alpha_prime)):
        raise DomainError("leading exponent must be finite")
    c = np.asarray(coeffs, dtype=float)
    if c.ndim != 1 or c.size == 0 or not np.all(np.isfinite(c)):
        raise DomainError("need a non-empty sequence of finite coefficients")
    t = np.asarray(t_grid, dtype=float)
    if t.ndim != 1 or t.size < 2 or not np.all(np.isfinite(t)):
        raise DomainError("need a finite grid with at least 2 samples")
    if np.any(t <= 0.0):
        raise DomainError("times must be strictly positive")
    dt = t[1] - t[0]
    if dt <= 0.0 or np.max(np.abs(np.diff(t) - dt)) > 1e-9 * max(dt, abs(t[-1])):
        raise DomainError("grid must be uniformly spaced and increasing")
    vals = np.zeros_like(t)
    for i, ck in enumerate(c):
        if ck != 0.0:
            vals += ck * t**(alpha_prime - i)
    return SignalSeries(t[0], dt, S**beta_exp * vals)
