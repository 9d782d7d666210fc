"""Scalar numeric kernels.

Everything downstream (the bound catalog, the sweeps, the operator
certificates) reduces to four functions of one or two real variables:

- the arithmetic-to-geometric mean ratio  R(t, v) = ((1-v) + v t) / t^v,
- the Kantorovich constant               K(t) = (t+1)^2 / (4t),
- the deformed exponential               exp_r(x) = (1 + r x)^(1/r),
- the identity argument                  (t-1)^2 / t = 4 (K(t) - 1).

The public entry points take the validated value types below; the private
``_*`` kernels accept floats or numpy arrays and are what the grid code uses.
Powers are computed as exp(v*log t) throughout so behaviour at extreme t does
not depend on the platform's pow.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# Below this magnitude exp_r switches to its r -> 0 limit exp(x).
R_ZERO_SWITCH = 1e-10

# Outside [1/RATIO_LOG_FORM, RATIO_LOG_FORM] the ratio is evaluated fully in
# log space to avoid overflow of the separate numerator and t^v factors.
RATIO_LOG_FORM = 1e3


@dataclass(frozen=True)
class EvalPoint:
    """A (t, v) evaluation point: t > 0, weight v in [0, 1]."""

    t: float
    v: float

    def __post_init__(self):
        t = float(self.t)
        v = float(self.v)
        if not math.isfinite(t) or t <= 0.0:
            raise DomainError(f"t must be a finite positive real, got {self.t!r}")
        if not math.isfinite(v) or not 0.0 <= v <= 1.0:
            raise DomainError(f"v must lie in [0, 1], got {self.v!r}")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "v", v)


@dataclass(frozen=True)
class DeformParam:
    """Deformation parameter r of exp_r, restricted to [-1, 1].

    r = 0 denotes the classical exponential limit.  Probes outside [-1, 1]
    bypass this type and call deformed_exp_raw directly.
    """

    r: float

    def __post_init__(self):
        r = float(self.r)
        if not math.isfinite(r) or not -1.0 <= r <= 1.0:
            raise DomainError(f"deformation parameter must lie in [-1, 1], got {self.r!r}")
        object.__setattr__(self, "r", r)


@dataclass(frozen=True)
class KExponents:
    """The exponent pair r = min{v, 1-v}, R = max{v, 1-v} of the K-power bounds."""

    r_min: float
    R_max: float

    def __post_init__(self):
        r_min = float(self.r_min)
        R_max = float(self.R_max)
        if not (0.0 <= r_min <= 0.5 <= R_max <= 1.0):
            raise DomainError(
                f"exponents must satisfy 0 <= r_min <= 1/2 <= R_max <= 1, got ({r_min}, {R_max})"
            )
        if abs(r_min + R_max - 1.0) > 1e-12:
            raise DomainError(f"exponents must sum to 1, got {r_min} + {R_max}")
        object.__setattr__(self, "r_min", r_min)
        object.__setattr__(self, "R_max", R_max)

    @classmethod
    def from_weight(cls, v):
        v = float(v)
        if not 0.0 <= v <= 1.0:
            raise DomainError(f"weight must lie in [0, 1], got {v!r}")
        return cls(min(v, 1.0 - v), max(v, 1.0 - v))


def _pow(t, v):
    """t**v as exp(v*log t); t and v may be arrays, t > 0 assumed."""
    return np.exp(v * np.log(t))


def _ratio(t, v):
    """Mean ratio ((1-v) + v t) / t^v for positive t arrays/floats."""
    num = (1.0 - v) + v * t
    with np.errstate(over="ignore"):
        plain = num * np.exp(-v * np.log(t))
        extreme = (t < 1.0 / RATIO_LOG_FORM) | (t > RATIO_LOG_FORM)
        if np.any(extreme):
            # Fully-log form where t is extreme; num > 0 always, log is safe.
            logged = np.exp(np.log(num) - v * np.log(t))
            return np.where(extreme, logged, plain)
    return plain


def _kantorovich(t):
    """K(t) = (t+1)^2/(4t), computed as 1 + (t-1)^2/(4t).

    The additive form guarantees K >= 1 in floating point and preserves the
    low bits of K - 1, which the identity check leans on.
    """
    return 1.0 + (t - 1.0) ** 2 / (4.0 * t)


def _identity_arg(t):
    return (t - 1.0) ** 2 / t


def _dexp(r, x):
    """exp_r(x) = (1+rx)^(1/r) for scalar r and float/array x.

    Requires 1 + r*x >= 0.  The boundary 1 + r*x = 0 maps to the limit
    value: 0 for r > 0, +inf for r < 0 (log1p(-1) = -inf does it for us).
    """
    r = float(r)
    if abs(r) < R_ZERO_SWITCH:
        with np.errstate(over="ignore"):
            return np.exp(x)
    arg = 1.0 + r * x
    if np.any(arg < 0.0):
        raise DomainError(f"exp_r undefined: 1 + r*x < 0 at r={r}")
    if r == 1.0:
        return 1.0 + x
    if r == -1.0:
        with np.errstate(divide="ignore"):
            return np.divide(1.0, 1.0 - x)
    with np.errstate(divide="ignore", over="ignore"):
        return np.exp(np.log1p(r * x) / r)


def young_ratio(p):
    """Arithmetic-to-geometric mean ratio at an EvalPoint; always >= 1."""
    return float(_ratio(p.t, p.v))


def kantorovich(t):
    """Kantorovich constant (t+1)^2/(4t) for t > 0; K(1/t) = K(t) >= 1."""
    t = float(t)
    if not math.isfinite(t) or t <= 0.0:
        raise DomainError(f"t must be a finite positive real, got {t!r}")
    return float(_kantorovich(t))


def deformed_exp(r, x):
    """exp_r(x) for a DeformParam r; exp(x) when r is (numerically) zero."""
    return float(_dexp(r.r, float(x)))


def deformed_exp_raw(r, x):
    """exp_r(x) for a bare float r with no [-1, 1] admissibility check.

    Exists for optimality probes at r slightly above 1; the domain
    requirement 1 + r*x >= 0 still applies.
    """
    out = _dexp(float(r), x)
    return float(out) if np.isscalar(x) or np.ndim(x) == 0 else out


def kantorovich_identity_arg(t):
    """(t-1)^2/t, which equals 4*(kantorovich(t) - 1)."""
    t = float(t)
    if not math.isfinite(t) or t <= 0.0:
        raise DomainError(f"t must be a finite positive real, got {t!r}")
    return float(_identity_arg(t))
