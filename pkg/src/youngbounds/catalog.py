"""Registry of named bounds on the mean ratio R(t, v) = ((1-v) + v t) / t^v.

Each entry records which side it bounds (upper entries satisfy
R(t, v) <= bound, lower entries bound <= R(t, v)), on which t-range it is
valid, and how to evaluate it.  Three entries carry a deformation parameter;
when the caller omits it the tightest admissible value is used (r = 1 for
C33-expr and C38-hi, r = -1 for C38-lo, best-in-family by the monotonicity
of exp_r in r).

t = 1 belongs to both the t <= 1 and the t >= 1 regions; every entry
evaluates to exactly 1 there.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RegionError, UnknownBoundError
from .scalar import DeformParam, EvalPoint, _dexp, _identity_arg, _kantorovich, _pow, _ratio

UPPER = "upper"
LOWER = "lower"

ALL_T = "all-t"
T_LE_1 = "t-le-1"
T_GE_1 = "t-ge-1"


@dataclass(frozen=True)
class BoundSpec:
    """Catalog entry: identifier, side, validity region, default deformation."""

    id: str
    side: str
    region: str
    deform: DeformParam | None
    description: str


@dataclass(frozen=True)
class Certificate:
    """One inequality checked at one point.

    margin is bound - ratio for upper entries and ratio - bound for lower
    entries, so holds <=> margin >= -tol either way.
    """

    bound_id: str
    point: EvalPoint
    ratio_value: float
    bound_value: float
    margin: float
    holds: bool
    tol: float


@dataclass(frozen=True)
class ChainLink:
    """One inequality of the t <= 1 ordering chain and its signed margin."""

    claim: str
    margin: float


def _exp(x):
    with np.errstate(over="ignore"):
        return np.exp(x)


def _guarded_reciprocal(den):
    # Mathematically den >= 7/8 on each entry's own region (v(1-v) <= 1/4 and
    # the squared factor < 1); the guard only fires on misconfigured input.
    if np.any(den <= 0.0):
        raise DomainError("reciprocal bound denominator is nonpositive")
    return 1.0 / den


def _k_d1(t, v, r):
    return _exp(v * (1.0 - v) * _identity_arg(t))


def _k_kupper(t, v, r):
    return _pow(_kantorovich(t), np.maximum(v, 1.0 - v))


def _k_klower(t, v, r):
    return _pow(_kantorovich(t), np.minimum(v, 1.0 - v))


def _k_d2_sq(t, v, r):
    return _exp(0.5 * v * (1.0 - v) * (t - 1.0) ** 2)


def _k_d2_invsq(t, v, r):
    return _exp(0.5 * v * (1.0 - v) * (1.0 / t - 1.0) ** 2)


def _k_fm_m(t, v, r):
    return 1.0 + 0.5 * v * (1.0 - v) * (t - 1.0) ** 2 * _pow(0.5 * (t + 1.0), -v - 1.0)


def _k_fm_M(t, v, r):
    return 1.0 + 0.5 * v * (1.0 - v) * (t - 1.0) ** 2 * _pow(t, -v - 1.0)


def _k_t31(t, v, r):
    return 1.0 + v * (1.0 - v) * _identity_arg(t)


def _k_c33(t, v, r):
    return _dexp(r, v * (1.0 - v) * _identity_arg(t))


def _k_t36_lo_sq(t, v, r):
    return _guarded_reciprocal(1.0 - 0.5 * v * (1.0 - v) * (t - 1.0) ** 2)


def _k_t36_lo_invsq(t, v, r):
    return _guarded_reciprocal(1.0 - 0.5 * v * (1.0 - v) * (1.0 / t - 1.0) ** 2)


def _k_t36_hi_invsq(t, v, r):
    return 1.0 + 0.5 * v * (1.0 - v) * (1.0 / t - 1.0) ** 2


def _k_t36_hi_sq(t, v, r):
    return 1.0 + 0.5 * v * (1.0 - v) * (t - 1.0) ** 2


def _k_c38_lo(t, v, r):
    ratio = np.minimum(1.0, t) / np.maximum(1.0, t)
    return _dexp(r, 0.5 * v * (1.0 - v) * (1.0 - ratio) ** 2)


def _k_c38_hi(t, v, r):
    ratio = np.maximum(1.0, t) / np.minimum(1.0, t)
    return _dexp(r, 0.5 * v * (1.0 - v) * (1.0 - ratio) ** 2)


class _Entry:
    """BoundSpec plus its kernel and admissible deformation interval."""

    def __init__(self, spec, kernel, r_interval=None):
        self.spec = spec
        self.kernel = kernel
        self.r_interval = r_interval  # (lo, hi, lo_open) with hi closed

    def admit(self, deform):
        """Resolve the deformation to a float r, checking admissibility."""
        if self.r_interval is None:
            if deform is not None:
                raise DomainError(f"{self.spec.id} takes no deformation parameter")
            return None
        if deform is None:
            deform = self.spec.deform
        lo, hi, lo_open = self.r_interval
        ok = (lo < deform.r if lo_open else lo <= deform.r) and deform.r <= hi
        if not ok:
            bracket = "(" if lo_open else "["
            raise DomainError(
                f"{self.spec.id} requires r in {bracket}{lo}, {hi}], got {deform.r}"
            )
        return deform.r


def _entry(bid, side, region, kernel, default_r=None, r_interval=None, description=""):
    deform = DeformParam(default_r) if default_r is not None else None
    return _Entry(BoundSpec(bid, side, region, deform, description), kernel, r_interval)


_CATALOG = (
    _entry("D1-exp", UPPER, ALL_T, _k_d1,
           description="exponential upper bound exp(v(1-v)(t-1)^2/t)"),
    _entry("K-upper", UPPER, ALL_T, _k_kupper,
           description="Kantorovich power upper bound K(t)^max{v,1-v}"),
    _entry("K-lower", LOWER, ALL_T, _k_klower,
           description="Kantorovich power lower bound K(t)^min{v,1-v}"),
    _entry("D2-lo-le1", LOWER, T_LE_1, _k_d2_sq,
           description="exponential lower bound exp((v(1-v)/2)(t-1)^2) for t <= 1"),
    _entry("D2-hi-le1", UPPER, T_LE_1, _k_d2_invsq,
           description="exponential upper bound exp((v(1-v)/2)(1/t-1)^2) for t <= 1"),
    _entry("D2-lo-ge1", LOWER, T_GE_1, _k_d2_invsq,
           description="exponential lower bound exp((v(1-v)/2)(1/t-1)^2) for t >= 1"),
    _entry("D2-hi-ge1", UPPER, T_GE_1, _k_d2_sq,
           description="exponential upper bound exp((v(1-v)/2)(t-1)^2) for t >= 1"),
    _entry("FM-m", LOWER, T_LE_1, _k_fm_m,
           description="polynomial lower bound 1 + (v(1-v)(t-1)^2/2)((t+1)/2)^(-v-1) for t <= 1"),
    _entry("FM-M", UPPER, T_LE_1, _k_fm_M,
           description="polynomial upper bound 1 + (v(1-v)(t-1)^2/2) t^(-v-1) for t <= 1"),
    _entry("T31-poly", UPPER, ALL_T, _k_t31,
           description="polynomial upper bound 1 + v(1-v)(t-1)^2/t"),
    _entry("C33-expr", UPPER, ALL_T, _k_c33, default_r=1.0, r_interval=(0.0, 1.0, True),
           description="deformed-exponential upper bound exp_r(v(1-v)(t-1)^2/t), 0 < r <= 1"),
    _entry("T36-lo-le1", LOWER, T_LE_1, _k_t36_lo_sq,
           description="reciprocal lower bound 1/(1 - (v(1-v)/2)(t-1)^2) for t <= 1"),
    _entry("T36-hi-le1", UPPER, T_LE_1, _k_t36_hi_invsq,
           description="polynomial upper bound 1 + (v(1-v)/2)(1/t-1)^2 for t <= 1"),
    _entry("T36-lo-ge1", LOWER, T_GE_1, _k_t36_lo_invsq,
           description="reciprocal lower bound 1/(1 - (v(1-v)/2)(1/t-1)^2) for t >= 1"),
    _entry("T36-hi-ge1", UPPER, T_GE_1, _k_t36_hi_sq,
           description="polynomial upper bound 1 + (v(1-v)/2)(t-1)^2 for t >= 1"),
    _entry("C38-lo", LOWER, ALL_T, _k_c38_lo, default_r=-1.0, r_interval=(-1.0, 0.0, False),
           description="deformed-exponential lower bound exp_r((v(1-v)/2)(1 - min{1,t}/max{1,t})^2), "
                       "-1 <= r < 0"),
    _entry("C38-hi", UPPER, ALL_T, _k_c38_hi, default_r=1.0, r_interval=(0.0, 1.0, True),
           description="deformed-exponential upper bound exp_r((v(1-v)/2)(1 - max{1,t}/min{1,t})^2), "
                       "0 < r <= 1"),
)

_BY_ID = {e.spec.id: e for e in _CATALOG}


def _lookup(bound_id):
    try:
        return _BY_ID[bound_id]
    except KeyError:
        raise UnknownBoundError(f"unknown bound id {bound_id!r}") from None


def _in_region(region, t):
    if region == T_LE_1:
        return t <= 1.0
    if region == T_GE_1:
        return t >= 1.0
    return True


def bound_ids():
    """All catalog identifiers in stable catalog order."""
    return tuple(e.spec.id for e in _CATALOG)


def list_bounds():
    """All catalog entries as BoundSpec records, stable order."""
    return tuple(e.spec for e in _CATALOG)


def get_bound(bound_id):
    """The BoundSpec for one identifier."""
    return _lookup(bound_id).spec


def evaluate(bound_id, p, deform=None):
    """Value of the named bound at an EvalPoint.

    deform must be omitted for entries without a deformation parameter;
    for C33-expr/C38-hi/C38-lo it defaults to the tightest admissible value.
    """
    entry = _lookup(bound_id)
    if not _in_region(entry.spec.region, p.t):
        raise RegionError(f"{bound_id} is not valid at t={p.t} (region {entry.spec.region})")
    r = entry.admit(deform)
    return float(entry.kernel(p.t, p.v, r))


def evaluate_grid(bound_id, t, v, deform=None):
    """Vectorized evaluate over broadcastable t/v arrays (region unchecked)."""
    entry = _lookup(bound_id)
    return entry.kernel(np.asarray(t, dtype=float), np.asarray(v, dtype=float),
                        entry.admit(deform))


def certify_point(bound_id, p, deform=None, tol=1e-12):
    """Check the named inequality at one point and report the signed margin."""
    entry = _lookup(bound_id)
    bound_value = evaluate(bound_id, p, deform)
    ratio_value = float(_ratio(p.t, p.v))
    if entry.spec.side == UPPER:
        margin = bound_value - ratio_value
    else:
        margin = ratio_value - bound_value
    return Certificate(bound_id, p, ratio_value, bound_value, margin, margin >= -tol, tol)


def tightest(side, p):
    """(id, value) of the smallest upper or largest lower bound valid at p.

    Deformed entries enter with their default (tightest) parameter; ties are
    broken by catalog order.
    """
    if side not in (UPPER, LOWER):
        raise DomainError(f"side must be {UPPER!r} or {LOWER!r}, got {side!r}")
    best = None
    for entry in _CATALOG:
        if entry.spec.side != side or not _in_region(entry.spec.region, p.t):
            continue
        value = evaluate(entry.spec.id, p)
        if best is None:
            best = (entry.spec.id, value)
        elif side == UPPER and value < best[1]:
            best = (entry.spec.id, value)
        elif side == LOWER and value > best[1]:
            best = (entry.spec.id, value)
    return best


def chain_check(p):
    """Margins of the six-link ordering chain on 0 < t <= 1.

    The chain is D2-lo-le1 <= FM-m <= ratio <= FM-M <= D2-hi-le1 together
    with the side links T36-lo-le1 <= FM-m and FM-M <= T36-hi-le1.  Every
    margin is the amount by which its inequality holds (>= 0 in exact
    arithmetic).
    """
    if p.t > 1.0:
        raise RegionError(f"the ordering chain applies to t <= 1 only, got t={p.t}")
    ratio = float(_ratio(p.t, p.v))
    d2lo = evaluate("D2-lo-le1", p)
    fm_lo = evaluate("FM-m", p)
    fm_hi = evaluate("FM-M", p)
    d2hi = evaluate("D2-hi-le1", p)
    t36lo = evaluate("T36-lo-le1", p)
    t36hi = evaluate("T36-hi-le1", p)
    return (
        ChainLink("D2-lo-le1 <= FM-m", fm_lo - d2lo),
        ChainLink("FM-m <= ratio", ratio - fm_lo),
        ChainLink("ratio <= FM-M", fm_hi - ratio),
        ChainLink("FM-M <= D2-hi-le1", d2hi - fm_hi),
        ChainLink("T36-lo-le1 <= FM-m", fm_lo - t36lo),
        ChainLink("FM-M <= T36-hi-le1", t36hi - fm_hi),
    )
