"""Constitutive-model catalog for linear viscoelasticity.

Eight models share one interface: an algebraic transfer function
(stress transform over strain transform), material functions built from
it (relaxation modulus, creep compliance, complex modulus), a
time-domain marching solver for arbitrary strain histories, and the
hereditary-integral formulation with a fractional-exponential kernel.

Closed forms are used wherever the model admits one; the remaining
responses go through numerical transform inversion.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import BranchError, DomainError, GridError, QuadratureError, StabilityError
from .fracops import SignalSeries, _order, gl_derivative, gl_weights
from .laplace import invert
from .special import MLParams, RabotnovParams, _rgamma, gamma, ml_eval

_INVERT_TOL = 1e-8  # certification level for runtime transform inversion


def _positive(value, name: str) -> float:
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
        raise DomainError(f"{name} must be a positive real, got {value}")
    return float(value)


@dataclass(frozen=True)
class SpringPot:
    """Power-law element sigma = kappa * D^alpha strain."""

    kappa: float
    alpha: float

    def __post_init__(self):
        _positive(self.kappa, "kappa")
        _order(self.alpha)


@dataclass(frozen=True)
class FracMaxwell:
    """Fractional Maxwell: sigma + lam^alpha D^alpha sigma
    = E lam^beta D^beta strain, with 0 <= alpha <= beta <= 1."""

    E: float
    lam: float
    alpha: float
    beta: float

    def __post_init__(self):
        _positive(self.E, "E")
        _positive(self.lam, "lam")
        a, b = _order(self.alpha), _order(self.beta)
        if a > b:
            raise DomainError(f"need alpha <= beta, got alpha={a}, beta={b}")


@dataclass(frozen=True)
class ThreeParamMaxwell:
    """sigma + a1 D^alpha sigma = b0 strain."""

    a1: float
    b0: float
    alpha: float

    def __post_init__(self):
        _positive(self.a1, "a1")
        _positive(self.b0, "b0")
        _order(self.alpha)


@dataclass(frozen=True)
class FracKelvinVoigt:
    """sigma = b0 strain + b1 D^alpha strain."""

    b0: float
    b1: float
    alpha: float

    def __post_init__(self):
        if not (isinstance(self.b0, (int, float)) and math.isfinite(self.b0)
                and self.b0 >= 0):
            raise DomainError(f"b0 must be non-negative, got {self.b0}")
        _positive(self.b1, "b1")
        _order(self.alpha)


@dataclass(frozen=True)
class FracZener:
    """sigma + a1 D^alpha sigma = b0 strain + b1 D^alpha strain.

    b0 = 0 is admitted (no equilibrium modulus; the solid relaxes
    fully). Thermodynamic admissibility wants b1 > a1*b0; violations
    only warn, so exploratory parameter sets stay usable.
    """

    a1: float
    b0: float
    b1: float
    alpha: float

    def __post_init__(self):
        _positive(self.a1, "a1")
        if not (isinstance(self.b0, (int, float)) and math.isfinite(self.b0)
                and self.b0 >= 0):
            raise DomainError(f"b0 must be non-negative, got {self.b0}")
        _positive(self.b1, "b1")
        _order(self.alpha)
        if self.b0 > 0 and self.b1 <= self.a1 * self.b0:
            warnings.warn(
                "fractional Zener parameters are thermodynamically "
                f"inadmissible: b1={self.b1} <= a1*b0={self.a1 * self.b0}",
                UserWarning, stacklevel=2)


@dataclass(frozen=True)
class PoyntingThomson:
    """Two springpots in the driving branch with a retarded response
    branch; needs 0 <= gamma <= alpha <= beta <= 1."""

    E: float
    E0: float
    lam: float
    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        _positive(self.E, "E")
        _positive(self.E0, "E0")
        _positive(self.lam, "lam")
        a, b, g = _order(self.alpha), _order(self.beta), _order(self.gamma)
        if not (g <= a <= b):
            raise DomainError(
                f"need gamma <= alpha <= beta, got {g}, {a}, {b}")


@dataclass(frozen=True)
class ClassicalMaxwell:
    """Spring and dashpot in series: sigma + tau Dsigma = E tau Dstrain."""

    E: float
    tau: float

    def __post_init__(self):
        _positive(self.E, "E")
        _positive(self.tau, "tau")


@dataclass(frozen=True)
class ClassicalKelvin:
    """Spring and dashpot in parallel: sigma = E strain + E tau Dstrain."""

    E: float
    tau: float

    def __post_init__(self):
        _positive(self.E, "E")
        _positive(self.tau, "tau")


MaterialModel = Union[SpringPot, FracMaxwell, ThreeParamMaxwell, FracKelvinVoigt,
                      FracZener, PoyntingThomson, ClassicalMaxwell, ClassicalKelvin]

_RESPONSE_KINDS = ("relaxation", "creep", "complex")


class MaterialResponse:
    """A material function sampled on a strictly increasing grid.

    kind is one of relaxation, creep, complex; values are real for the
    time-domain kinds and complex for the frequency-domain one.
    """

    __slots__ = ("kind", "abscissae", "values")

    def __init__(self, kind: str, abscissae, values):
        if kind not in _RESPONSE_KINDS:
            raise DomainError(f"unknown response kind {kind!r}")
        x = np.asarray(abscissae, dtype=float).copy()
        v = np.asarray(values, dtype=complex if kind == "complex" else float).copy()
        if x.ndim != 1 or x.size < 1:
            raise DomainError("response needs at least one abscissa")
        if not np.all(np.isfinite(x)) or np.any(x <= 0.0):
            raise DomainError("abscissae must be positive and finite")
        if np.any(np.diff(x) <= 0.0):
            raise DomainError("abscissae must be strictly increasing")
        if v.shape != x.shape:
            raise DomainError("values and abscissae lengths must match")
        x.flags.writeable = False
        v.flags.writeable = False
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "abscissae", x)
        object.__setattr__(self, "values", v)

    def __setattr__(self, name, value):
        raise AttributeError("MaterialResponse is immutable")

    def __len__(self):
        return self.abscissae.size

    def __repr__(self):
        return (f"MaterialResponse(kind={self.kind!r}, "
                f"n={self.abscissae.size})")


def transfer_function(m: MaterialModel, s) -> complex:
    """Stress-transform over strain-transform at the Laplace symbol s.

    Principal-branch powers; the negative real axis is refused because
    s**alpha is ambiguous there under our convention.
    """
    s = complex(s)
    if s == 0:
        raise DomainError("transfer function is not defined at s = 0")
    if s.imag == 0.0 and s.real < 0.0:
        raise BranchError(f"s = {s} lies on the negative real axis")
    if isinstance(m, SpringPot):
        return m.kappa * s**m.alpha
    if isinstance(m, FracMaxwell):
        sa = m.lam**m.alpha * s**m.alpha
        return m.E * m.lam**m.beta * s**m.beta / (1.0 + sa)
    if isinstance(m, ThreeParamMaxwell):
        return m.b0 / (1.0 + m.a1 * s**m.alpha)
    if isinstance(m, FracKelvinVoigt):
        return m.b0 + m.b1 * s**m.alpha
    if isinstance(m, FracZener):
        sa = s**m.alpha
        return (m.b0 + m.b1 * sa) / (1.0 + m.a1 * sa)
    if isinstance(m, PoyntingThomson):
        la, lb = m.lam**m.alpha, m.lam**m.beta
        num = m.E * (la * s**m.alpha + lb * s**m.beta)
        ratio = m.E / m.E0
        den = 1.0 + ratio * (m.lam**(m.alpha - m.gamma) * s**(m.alpha - m.gamma)
                             + m.lam**(m.beta - m.gamma) * s**(m.beta - m.gamma))
        return num / den
    if isinstance(m, ClassicalMaxwell):
        return m.E * m.tau * s / (1.0 + m.tau * s)
    if isinstance(m, ClassicalKelvin):
        return m.E * (1.0 + m.tau * s)
    raise DomainError(f"unknown model {type(m).__name__}")


def _time_grid(t_grid) -> np.ndarray:
    t = np.asarray(t_grid, dtype=float)
    if t.ndim == 0:
        t = t.reshape(1)
    if t.size < 1 or not np.all(np.isfinite(t)):
        raise DomainError("time grid must be non-empty and finite")
    if np.any(t <= 0.0):
        raise DomainError("time grid must be strictly positive")
    if np.any(np.diff(t) <= 0.0):
        raise DomainError("time grid must be strictly increasing")
    return t


def _ml_grid(alpha: float, beta: float, args: np.ndarray) -> np.ndarray:
    p = MLParams(alpha, beta)
    return np.array([ml_eval(p, float(z)) for z in args])


def relaxation_modulus(m: MaterialModel, t_grid) -> MaterialResponse:
    """Stress response to a unit step strain, sampled at t_grid."""
    t = _time_grid(t_grid)
    if isinstance(m, SpringPot):
        if m.alpha == 1.0:
            raise DomainError(
                "springpot with order 1 is a dashpot: step-strain stress is "
                "impulsive; use the classical viscous law instead")
        g = m.kappa * _rgamma(1.0 - m.alpha) * t**(-m.alpha)
    elif isinstance(m, FracMaxwell):
        if m.alpha == 0.0:
            # the derivative on the stress side degenerates to identity,
            # leaving a pure power-law element of half strength
            g = 0.5 * m.E * m.lam**m.beta * _rgamma(1.0 - m.beta) * t**(-m.beta)
        else:
            x = t / m.lam
            g = m.E * x**(m.alpha - m.beta) * _ml_grid(
                m.alpha, m.alpha - m.beta + 1.0, -x**m.alpha)
    elif isinstance(m, ThreeParamMaxwell):
        if m.alpha == 0.0:
            g = np.full(t.shape, m.b0 / (1.0 + m.a1))
        else:
            g = m.b0 * (1.0 - _ml_grid(m.alpha, 1.0, -t**m.alpha / m.a1))
    elif isinstance(m, FracKelvinVoigt):
        g = m.b0 + m.b1 * _rgamma(1.0 - m.alpha) * t**(-m.alpha)
    elif isinstance(m, FracZener):
        if m.alpha == 0.0:
            g = np.full(t.shape, (m.b0 + m.b1) / (1.0 + m.a1))
        else:
            g = m.b0 + (m.b1 / m.a1 - m.b0) * _ml_grid(
                m.alpha, 1.0, -t**m.alpha / m.a1)
    elif isinstance(m, ClassicalMaxwell):
        g = m.E * np.exp(-t / m.tau)
    elif isinstance(m, ClassicalKelvin):
        # the impulsive dashpot contribution at t = 0 is dropped
        g = np.full(t.shape, float(m.E))
    elif isinstance(m, PoyntingThomson):
        g = np.array([invert(lambda s: transfer_function(m, s) / s,
                             float(tk), _INVERT_TOL) for tk in t])
    else:
        raise DomainError(f"unknown model {type(m).__name__}")
    return MaterialResponse("relaxation", t, g)


def creep_compliance(m: MaterialModel, t_grid) -> MaterialResponse:
    """Strain response to a unit step stress, sampled at t_grid."""
    t = _time_grid(t_grid)
    if isinstance(m, SpringPot):
        j = t**m.alpha / (m.kappa * gamma(1.0 + m.alpha))
    elif isinstance(m, FracKelvinVoigt):
        if m.alpha == 0.0:
            j = np.full(t.shape, 1.0 / (m.b0 + m.b1))
        else:
            j = t**m.alpha / m.b1 * _ml_grid(
                m.alpha, m.alpha + 1.0, -(m.b0 / m.b1) * t**m.alpha)
    else:
        j = np.array([invert(lambda s: 1.0 / (s * transfer_function(m, s)),
                             float(tk), _INVERT_TOL) for tk in t])
    return MaterialResponse("creep", t, j)


def complex_modulus(m: MaterialModel, omega_grid) -> MaterialResponse:
    """Dynamic modulus G*(omega): transfer function along s = i*omega.

    Storage modulus is the real part, loss modulus the imaginary part.
    """
    w = _time_grid(omega_grid)
    vals = np.array([transfer_function(m, 1j * float(wk)) for wk in w])
    return MaterialResponse("complex", w, vals)


def _operator_terms(m: MaterialModel):
    """(lhs, rhs) derivative-term lists for the model's rate equation.

    Each term is (coefficient, order); the bare sigma on the left has
    implied coefficient 1 and is not listed.
    """
    if isinstance(m, SpringPot):
        return [], [(m.kappa, m.alpha)]
    if isinstance(m, FracMaxwell):
        return ([(m.lam**m.alpha, m.alpha)],
                [(m.E * m.lam**m.beta, m.beta)])
    if isinstance(m, ThreeParamMaxwell):
        return [(m.a1, m.alpha)], [(m.b0, 0.0)]
    if isinstance(m, FracKelvinVoigt):
        return [], [(m.b0, 0.0), (m.b1, m.alpha)]
    if isinstance(m, FracZener):
        return [(m.a1, m.alpha)], [(m.b0, 0.0), (m.b1, m.alpha)]
    if isinstance(m, PoyntingThomson):
        ratio = m.E / m.E0
        return ([(ratio * m.lam**(m.alpha - m.gamma), m.alpha - m.gamma),
                 (ratio * m.lam**(m.beta - m.gamma), m.beta - m.gamma)],
                [(m.E * m.lam**m.alpha, m.alpha),
                 (m.E * m.lam**m.beta, m.beta)])
    if isinstance(m, ClassicalMaxwell):
        return [(m.tau, 1.0)], [(m.E * m.tau, 1.0)]
    if isinstance(m, ClassicalKelvin):
        return [], [(m.E, 0.0), (m.E * m.tau, 1.0)]
    raise DomainError(f"unknown model {type(m).__name__}")


def simulate_stress(m: MaterialModel, strain: SignalSeries) -> SignalSeries:
    """March the model's rate equation over an arbitrary strain history.

    Every fractional derivative is replaced by its discrete convolution
    sum and the update is solved implicitly for the newest stress
    sample, which keeps the recursion stable for any positive
    coefficients. Requires a history starting at time zero with zero
    initial strain.
    """
    if strain.t0 != 0.0:
        raise DomainError("strain history must start at t = 0")
    if strain.values[0] != 0.0:
        raise DomainError("strain history must start from zero strain")
    lhs, rhs_terms = _operator_terms(m)
    n = len(strain)
    dt = strain.dt
    rhs = np.zeros(n)
    for coef, order in rhs_terms:
        rhs += coef * gl_derivative(strain, order).values
    if not lhs:
        return SignalSeries(0.0, dt, rhs)
    scaled = [(coef * dt**(-order), gl_weights(order, n)) for coef, order in lhs]
    pivot = 1.0 + sum(c for c, _ in scaled)
    if not (math.isfinite(pivot) and pivot > 0.0):
        raise StabilityError(f"implicit update coefficient {pivot} is unusable")
    sigma = np.zeros(n)
    for i in range(n):
        acc = rhs[i]
        if i > 0:
            past = sigma[i - 1::-1]  # sigma_{i-1}, ..., sigma_0
            for c, w in scaled:
                acc -= c * np.dot(w[1:i + 1], past)
        sigma[i] = acc / pivot
    return SignalSeries(0.0, dt, sigma)


# quadrature refuses kernels more singular than this on coarse grids
_KERNEL_SINGULAR_LIMIT = 0.9


def rabotnov_stress(p: RabotnovParams, E: float, strain: SignalSeries) -> SignalSeries:
    """Stress from the hereditary integral with the fractional-exponential
    kernel: sigma = E * (strain - beta * integral of kernel * strain).

    The weakly singular convolution is integrated by a product rule:
    strain is averaged per interval and the kernel integrated exactly
    through its closed-form primitive, so the singularity never meets
    the quadrature. Step histories are reproduced exactly.
    """
    _positive(E, "E")
    if strain.t0 != 0.0:
        raise DomainError("strain history must start at t = 0")
    if abs(p.alpha) > _KERNEL_SINGULAR_LIMIT and strain.dt > 0.1:
        raise QuadratureError(
            f"grid step {strain.dt} is too coarse for kernel order {p.alpha}; "
            "refine below 0.1")
    vals = strain.values
    if p.beta == 0.0:
        return SignalSeries(0.0, strain.dt, E * vals)
    n = len(strain)
    ap1 = p.alpha + 1.0
    mlp = MLParams(ap1, 1.0)
    # running kernel integral over [0, k*dt]
    cum = np.empty(n)
    cum[0] = 0.0
    for k in range(1, n):
        cum[k] = 1.0 - ml_eval(mlp, -p.beta * (k * strain.dt)**ap1)
    step = np.diff(cum)
    avg = 0.5 * (vals[:-1] + vals[1:])
    memory = np.convolve(avg, step)[:n - 1]
    sigma = np.empty(n)
    sigma[0] = E * vals[0]
    sigma[1:] = E * (vals[1:] - memory)
    return SignalSeries(0.0, strain.dt, sigma)


def nutting_strain(psi: float, S: float, alpha, beta_exp: float, t_grid) -> SignalSeries:
    """Creep strain of the power-law material law: S**beta * t**alpha / psi.

    The grid must be uniform (the result is a sampled signal); t = 0 is
    allowed and contributes strain 0 for positive alpha.
    """
    _positive(psi, "psi")
    _positive(S, "S")
    _positive(beta_exp, "beta_exp")
    a = _order(alpha)
    t = np.asarray(t_grid, dtype=float)
    if t.ndim != 1 or t.size < 2:
        raise GridError("need a uniform grid with at least 2 samples")
    if not np.all(np.isfinite(t)):
        raise GridError("grid must be finite")
    if np.any(t < 0.0):
        raise DomainError("negative times are outside the law's domain")
    dt = t[1] - t[0]
    if dt <= 0.0 or np.max(np.abs(np.diff(t) - dt)) > 1e-9 * max(dt, abs(t[-1])):
        raise GridError("grid must be uniformly spaced and increasing")
    return SignalSeries(t[0], dt, S**beta_exp / psi * t**a)


def relaxation_time_of_stress(psi: float, S: float, alpha, beta_exp: float,
                              stress: float) -> float:
    """Stress-dependent relaxation time psi**(1/a) * S**(-b/a) * stress**(1/a)."""
    _positive(psi, "psi")
    _positive(S, "S")
    _positive(beta_exp, "beta_exp")
    _positive(stress, "stress")
    a = _order(alpha)
    if a == 0.0:
        raise DomainError("relaxation time is undefined at order 0")
    return psi**(1.0 / a) * S**(-beta_exp / a) * stress**(1.0 / a)
