"""Grid sweeps, sign-change witness search, and the reference-value table.

Three jobs live here:

- sweep: certify one catalog bound on a full (t, v) grid and report the
  violation count and the worst margin;
- find_sign_change: look for floating-point evidence that a difference
  function takes both signs (so neither of the two compared bounds
  dominates the other);
- reproduce_remarks: recompute the published six-figure comparison values
  and report the absolute errors.

Scans are deterministic: grids are walked with t as the outer axis in
ascending row-major order, and reductions use numpy's fixed associativity,
so identical inputs always produce identical reports.
"""

from dataclasses import dataclass

import numpy as np

from . import catalog
from .errors import DomainError, RegionError, UnknownDiffError, WitnessNotFoundError
from .scalar import EvalPoint, _dexp, _ratio

LINEAR = "linear"
LOG = "log"

# Refinement shrinks the local step by 10x per round: 21 points across a
# +-1-step window around the incumbent extremum.
_REFINE_POINTS = 21


@dataclass(frozen=True)
class Region:
    """A rectangular (t, v) window with its grid resolution."""

    t_min: float
    t_max: float
    v_min: float
    v_max: float
    t_scale: str = LOG
    n_t: int = 41
    n_v: int = 41

    def __post_init__(self):
        if self.t_scale not in (LINEAR, LOG):
            raise RegionError(f"t_scale must be {LINEAR!r} or {LOG!r}, got {self.t_scale!r}")
        if not 0.0 < self.t_min <= self.t_max < np.inf:
            raise RegionError(f"need 0 < t_min <= t_max, got [{self.t_min}, {self.t_max}]")
        if not 0.0 <= self.v_min <= self.v_max <= 1.0:
            raise RegionError(f"need 0 <= v_min <= v_max <= 1, got [{self.v_min}, {self.v_max}]")
        if self.n_t < 2 or self.n_v < 2:
            raise RegionError(f"grid must be at least 2x2, got {self.n_t}x{self.n_v}")

    def t_grid(self):
        if self.t_scale == LOG:
            return np.geomspace(self.t_min, self.t_max, self.n_t)
        return np.linspace(self.t_min, self.t_max, self.n_t)

    def v_grid(self):
        return np.linspace(self.v_min, self.v_max, self.n_v)


@dataclass(frozen=True)
class SweepReport:
    """Outcome of certifying one bound over a full grid."""

    bound_id: str
    n_points: int
    n_violations: int
    min_margin: float
    argmin_point: EvalPoint


@dataclass(frozen=True)
class NonOrderingWitness:
    """Two points where a difference function takes strictly opposite signs."""

    diff_id: str
    point_pos: EvalPoint
    point_neg: EvalPoint
    value_pos: float
    value_neg: float
    delta: float


class _Diff:
    def __init__(self, diff_id, region, kernel, needs_r=False):
        self.id = diff_id
        self.region = region
        self.kernel = kernel
        self.needs_r = needs_r


def _k_upper_power(t, v):
    return catalog.evaluate_grid("K-upper", t, v)


def _k_lower_power(t, v):
    return catalog.evaluate_grid("K-lower", t, v)


def _d_l(t, v, r):
    return _k_upper_power(t, v) - catalog.evaluate_grid("D1-exp", t, v)


def _d_u1(t, v, r):
    return _k_upper_power(t, v) - catalog.evaluate_grid("T31-poly", t, v)


def _d_u2(t, v, r):
    return _k_upper_power(t, v) - catalog.evaluate_grid("T36-hi-le1", t, v)


def _d_u3(t, v, r):
    return _k_upper_power(t, v) - catalog.evaluate_grid("T36-hi-ge1", t, v)


def _d_l1(t, v, r):
    return _k_lower_power(t, v) - catalog.evaluate_grid("T36-lo-le1", t, v)


def _d_l2(t, v, r):
    return _k_lower_power(t, v) - catalog.evaluate_grid("T36-lo-ge1", t, v)


def _d_ropt(t, v, r):
    # The optimality probe: exp_r of the exponential bound's argument minus
    # the ratio itself, with r allowed outside [-1, 1].
    x = v * (1.0 - v) * (t - 1.0) ** 2 / t
    return _dexp(r, x) - _ratio(t, v)


_DIFFS = (
    _Diff("diff-l", catalog.ALL_T, _d_l),
    _Diff("diff-u1", catalog.ALL_T, _d_u1),
    _Diff("diff-u2", catalog.T_LE_1, _d_u2),
    _Diff("diff-u3", catalog.T_GE_1, _d_u3),
    _Diff("diff-l1", catalog.T_LE_1, _d_l1),
    _Diff("diff-l2", catalog.T_GE_1, _d_l2),
    _Diff("diff-ropt", catalog.ALL_T, _d_ropt, needs_r=True),
)

_DIFF_BY_ID = {d.id: d for d in _DIFFS}

# Default search window [t_lo, t_hi] and threshold delta per difference id.
# The l1/l2 sign changes peak near 8e-4, hence the smaller delta there.
DIFF_PRESETS = {
    "diff-l": (0.1, 10.0, 1e-3),
    "diff-u1": (0.1, 10.0, 1e-3),
    "diff-u2": (0.1, 1.0, 1e-3),
    "diff-u3": (1.0, 10.0, 1e-3),
    "diff-l1": (0.1, 1.0, 1e-4),
    "diff-l2": (1.0, 10.0, 1e-4),
    "diff-ropt": (0.1, 10.0, 1e-3),
}

# Published comparison values: (label, diff id, t, v, r, published value).
# The published figures carry six significant digits.
REMARK_VALUES = (
    ("l(1/2,1/5)", "diff-l", 0.5, 0.2, None, 0.0155215),
    ("l(1/4,1/5)", "diff-l", 0.25, 0.2, None, -0.00425113),
    ("l(3,1/5)", "diff-l", 3.0, 0.2, None, 0.0209862),
    ("l(5,1/5)", "diff-l", 5.0, 0.2, None, -0.0682639),
    ("u_1(1/2,0.6)", "diff-u1", 0.5, 0.6, None, -0.0467732),
    ("u_1(1/2,0.9)", "diff-u1", 0.5, 0.9, None, 0.0668271),
    ("u_2(1/2,0.6)", "diff-u2", 0.5, 0.6, None, -0.0467732),
    ("u_2(1/2,0.9)", "diff-u2", 0.5, 0.9, None, 0.0668271),
    ("u_3(2,0.6)", "diff-u3", 2.0, 0.6, None, -0.0467732),
    ("u_3(2,0.9)", "diff-u3", 2.0, 0.9, None, 0.0668271),
    ("l_1(3/5,0.1)", "diff-l1", 0.6, 0.1, None, -0.000777493),
    ("l_1(3/5,0.4)", "diff-l1", 0.6, 0.4, None, 0.00657566),
    ("l_2(5/3,0.1)", "diff-l2", 5.0 / 3.0, 0.1, None, -0.000777493),
    ("l_2(5/3,0.4)", "diff-l2", 5.0 / 3.0, 0.4, None, 0.00657566),
    ("ropt", "diff-ropt", 1e-6, 0.999999, 1.001, -0.000360488),
)


@dataclass(frozen=True)
class RemarkRow:
    """One recomputed reference value and its absolute error."""

    label: str
    paper_value: float
    computed: float
    abs_error: float


def diff_ids():
    """All difference-function identifiers in registry order."""
    return tuple(d.id for d in _DIFFS)


def _lookup_diff(diff_id):
    try:
        return _DIFF_BY_ID[diff_id]
    except KeyError:
        raise UnknownDiffError(f"unknown difference id {diff_id!r}") from None


def _check_window(region_kind, t_lo, t_hi, what):
    if region_kind == catalog.T_LE_1 and t_hi > 1.0:
        raise RegionError(f"{what} is restricted to t <= 1, window reaches t={t_hi}")
    if region_kind == catalog.T_GE_1 and t_lo < 1.0:
        raise RegionError(f"{what} is restricted to t >= 1, window reaches t={t_lo}")


def sweep(bound_id, region, tol=1e-12, deform=None):
    """Certify one catalog bound at every grid point of a Region.

    The window must lie inside the bound's validity region.  Returns a
    SweepReport; a positive n_violations means some margin fell below -tol
    (which, for in-region input, would contradict the underlying theorem).
    """
    spec = catalog.get_bound(bound_id)
    _check_window(spec.region, region.t_min, region.t_max, bound_id)
    tg = region.t_grid()
    vg = region.v_grid()
    bound_values = catalog.evaluate_grid(bound_id, tg[:, None], vg[None, :], deform)
    ratio_values = _ratio(tg[:, None], vg[None, :])
    if spec.side == catalog.UPPER:
        margin = bound_values - ratio_values
    else:
        margin = ratio_values - bound_values
    margin = np.broadcast_to(margin, (region.n_t, region.n_v))
    flat = int(np.argmin(margin))
    i, j = divmod(flat, region.n_v)
    return SweepReport(
        bound_id=bound_id,
        n_points=region.n_t * region.n_v,
        n_violations=int(np.count_nonzero(margin < -tol)),
        min_margin=float(margin.flat[flat]),
        argmin_point=EvalPoint(float(tg[i]), float(vg[j])),
    )


def eval_diff(diff_id, p, r=None):
    """Signed value of one difference function at an EvalPoint.

    r is consumed only by diff-ropt (where it is required and may exceed 1);
    the other differences have no free parameter.
    """
    diff = _lookup_diff(diff_id)
    if not catalog._in_region(diff.region, p.t):
        raise RegionError(f"{diff_id} is restricted to region {diff.region}, got t={p.t}")
    if diff.needs_r and r is None:
        raise DomainError(f"{diff_id} requires an explicit r")
    return float(diff.kernel(p.t, p.v, float(r) if r is not None else None))


def _grid_extrema(diff, tg, vg, r):
    """Best positive and negative values over the tensor grid, first hit wins."""
    values = np.broadcast_to(
        diff.kernel(tg[:, None], vg[None, :], r), (tg.size, vg.size)
    )
    hi = int(np.argmax(values))
    lo = int(np.argmin(values))
    ihi, jhi = divmod(hi, vg.size)
    ilo, jlo = divmod(lo, vg.size)
    pos = (float(values.flat[hi]), float(tg[ihi]), float(vg[jhi]))
    neg = (float(values.flat[lo]), float(tg[ilo]), float(vg[jlo]))
    return pos, neg


def _refine_axis(center, step, lo, hi, log_scale):
    """21-point window of +-step around center, clipped to [lo, hi]."""
    if log_scale:
        lg = np.log10(center)
        grid = np.logspace(lg - step, lg + step, _REFINE_POINTS)
    else:
        grid = np.linspace(center - step, center + step, _REFINE_POINTS)
    return np.clip(grid, lo, hi)


def find_sign_change(diff_id, region, delta, refine_depth=3, r=None):
    """Search a Region for points where the difference exceeds +-delta.

    Coarse scan on the Region grid first; then up to refine_depth rounds of
    10x local refinement around the incumbent extremum of each sign.  Both
    extrema are refined every round, so the returned witness carries the
    best values found, not merely the first past the threshold.  Raises
    WitnessNotFoundError when refinement is exhausted with a sign missing;
    that is absence of evidence at this delta and depth, not a proof of
    ordering.
    """
    diff = _lookup_diff(diff_id)
    _check_window(diff.region, region.t_min, region.t_max, diff_id)
    if diff.needs_r and r is None:
        raise DomainError(f"{diff_id} requires an explicit r")
    r_value = float(r) if r is not None else None

    log_t = region.t_scale == LOG
    pos, neg = _grid_extrema(diff, region.t_grid(), region.v_grid(), r_value)

    if log_t:
        t_step = (np.log10(region.t_max) - np.log10(region.t_min)) / (region.n_t - 1)
    else:
        t_step = (region.t_max - region.t_min) / (region.n_t - 1)
    v_step = (region.v_max - region.v_min) / (region.n_v - 1)

    def found(best_pos, best_neg):
        return best_pos[0] > delta and best_neg[0] < -delta

    depth = 0
    while not found(pos, neg) and depth < refine_depth:
        for side, best in (("pos", pos), ("neg", neg)):
            tw = _refine_axis(best[1], t_step, region.t_min, region.t_max, log_t)
            vw = _refine_axis(best[2], v_step, region.v_min, region.v_max, False)
            sub_pos, sub_neg = _grid_extrema(diff, tw, vw, r_value)
            if side == "pos" and sub_pos[0] > pos[0]:
                pos = sub_pos
            if side == "neg" and sub_neg[0] < neg[0]:
                neg = sub_neg
        t_step /= 10.0
        v_step /= 10.0
        depth += 1

    if not found(pos, neg):
        raise WitnessNotFoundError(
            f"{diff_id}: no sign change above delta={delta} found "
            f"(best +{pos[0]:.3g} / {neg[0]:.3g} after depth {depth})"
        )
    return NonOrderingWitness(
        diff_id=diff_id,
        point_pos=EvalPoint(pos[1], pos[2]),
        point_neg=EvalPoint(neg[1], neg[2]),
        value_pos=pos[0],
        value_neg=neg[0],
        delta=delta,
    )


def reproduce_remarks():
    """Recompute every published comparison value; rows carry the abs error."""
    rows = []
    for label, diff_id, t, v, r, published in REMARK_VALUES:
        computed = eval_diff(diff_id, EvalPoint(t, v), r)
        rows.append(RemarkRow(label, published, computed, abs(computed - published)))
    return tuple(rows)
