"""Grid-based verifiers for the four stochastic orders, plus sign-function evaluators.

Conventions (smaller = shorter-lived):

* ``m1 <=st m2``      -- survival of m1 below survival of m2 pointwise.
* ``m1 <=hr m2``      -- survival ratio S_{m2}/S_{m1} nondecreasing;
                         equivalently hazard of m1 >= hazard of m2 pointwise.
* ``m1 <=star m2``    -- quantile_{m2}(cdf_{m1}(x)) / x nondecreasing.
* ``m1 <=lorenz m2``  -- Lorenz curve of m1 above the one of m2 pointwise.

Every check returns an :class:`OrderVerdict` for both directions with the
worst violation magnitude and its grid witness.  Monotonicity checks use the
scaled consecutive-difference slack ``slack * max(1, |value|)`` so that grid
discretization of a genuinely monotone curve cannot fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .baseline import BaselineDistribution
from .errors import (
    DomainError,
    InfiniteMeanSuspected,
    NumericalError,
    ParameterError,
    TailError,
)
from .mixture import EvaluationGrid, MixtureModel

__all__ = [
    "OrderVerdict",
    "LorenzCurve",
    "check_st",
    "check_hr",
    "check_star",
    "lorenz_curve",
    "check_lorenz",
    "default_lorenz_grid",
    "h_pa",
    "h_plambda",
    "h_hr",
]

DEFAULT_SLACK = 1e-9

# grid points where survival drops below this are dropped before forming
# ratios or hazards; the remaining suffix is recorded as truncated
_SURVIVAL_FLOOR = 1e-280

# cdf levels outside this band cannot be inverted to the monotonicity slack:
# near u = 1 the cdf's own ulp (~2e-16) floors the quantile resolution at
# ~2e-16/((1-u) * ln(1/(1-u))) relative, which crosses 1e-9 around 1-u ~ 3e-8
_CDF_LO = 1e-300
_CDF_HI = 1.0 - 3e-8


@dataclass(frozen=True)
class OrderVerdict:
    """Two-sided dominance/monotonicity result over a grid.

    ``holds_leq`` answers "is m1 <= m2 in this order"; ``holds_geq`` the
    reverse.  Both can be true only when the curves coincide within slack.
    ``witness_t`` is the t-coordinate of the worst violation found.
    """

    holds_leq: bool
    holds_geq: bool
    max_violation_leq: float
    max_violation_geq: float
    witness_t: float
    inconclusive: bool = False
    reason: str = ""
    hazard_holds_leq: bool | None = None
    hazard_holds_geq: bool | None = None
    hazard_disagrees: bool = False
    truncated_at_t: float | None = None
    notes: tuple[str, ...] = ()


def _directional_verdict(
    viol_leq: np.ndarray,
    viol_geq: np.ndarray,
    t: np.ndarray,
    slack: float,
    **extra,
) -> OrderVerdict:
    max_leq = float(np.max(viol_leq)) if viol_leq.size else 0.0
    max_geq = float(np.max(viol_geq)) if viol_geq.size else 0.0
    if max_leq >= max_geq and viol_leq.size:
        witness = float(t[int(np.argmax(viol_leq))])
    elif viol_geq.size:
        witness = float(t[int(np.argmax(viol_geq))])
    else:
        witness = float("nan")
    return OrderVerdict(
        holds_leq=max_leq <= slack,
        holds_geq=max_geq <= slack,
        max_violation_leq=max_leq,
        max_violation_geq=max_geq,
        witness_t=witness,
        **extra,
    )


def check_st(
    m1: MixtureModel,
    m2: MixtureModel,
    grid: EvaluationGrid,
    slack: float = DEFAULT_SLACK,
) -> OrderVerdict:
    """Pointwise survival comparison on the grid."""
    x = grid.x_values
    s1 = np.asarray(m1.survival(x))
    s2 = np.asarray(m2.survival(x))
    return _directional_verdict(
        np.maximum(s1 - s2, 0.0), np.maximum(s2 - s1, 0.0), grid.t_values, slack
    )


def _monotone_violations(values: np.ndarray, slack_scale: np.ndarray) -> np.ndarray:
    """Per-step violation of nondecreasingness, scaled by max(1, |value|)."""
    drops = -(np.diff(values))
    return np.maximum(drops / slack_scale, 0.0)


def _truncate_to_positive_survival(
    m1: MixtureModel, m2: MixtureModel, grid: EvaluationGrid
) -> tuple[np.ndarray, np.ndarray, np.ndarray, float | None]:
    x = grid.x_values
    s1 = np.asarray(m1.survival(x))
    s2 = np.asarray(m2.survival(x))
    safe = (s1 >= _SURVIVAL_FLOOR) & (s2 >= _SURVIVAL_FLOOR)
    if np.all(safe):
        return grid.t_values, s1, s2, None
    cut = int(np.argmin(safe))  # first unsafe index; survival is nonincreasing
    t_cut = float(grid.t_values[cut])
    return grid.t_values[:cut], s1[:cut], s2[:cut], t_cut


def check_hr(
    m1: MixtureModel,
    m2: MixtureModel,
    grid: EvaluationGrid,
    slack: float = DEFAULT_SLACK,
) -> OrderVerdict:
    """Hazard-rate order via survival-ratio monotonicity, cross-checked on hazards.

    Primary criterion: m1 <=hr m2 iff S_{m2}/S_{m1} is nondecreasing along the
    grid.  Secondary: pointwise hazards (m1 <=hr m2 iff hazard_{m1} >=
    hazard_{m2}).  The verdict carries both; ``hazard_disagrees`` flags a
    split decision beyond slack.  Grid points past survival underflow are
    dropped and the truncation point recorded.
    """
    t, s1, s2, t_cut = _truncate_to_positive_survival(m1, m2, grid)
    if t.size < 2:
        return OrderVerdict(
            holds_leq=False,
            holds_geq=False,
            max_violation_leq=float("nan"),
            max_violation_geq=float("nan"),
            witness_t=float("nan"),
            inconclusive=True,
            reason="fewer than two grid points with positive survival",
            truncated_at_t=t_cut,
        )
    x = t / (1.0 - t)
    ratio_leq = s2 / s1
    ratio_geq = s1 / s2
    scale_leq = np.maximum(1.0, np.abs(ratio_leq[:-1]))
    scale_geq = np.maximum(1.0, np.abs(ratio_geq[:-1]))
    viol_leq = _monotone_violations(ratio_leq, scale_leq)
    viol_geq = _monotone_violations(ratio_geq, scale_geq)

    h1 = np.asarray(m1.hazard(x))
    h2 = np.asarray(m2.hazard(x))
    hscale = np.maximum(1.0, np.maximum(np.abs(h1), np.abs(h2)))
    hviol_leq = float(np.max(np.maximum((h2 - h1) / hscale, 0.0)))
    hviol_geq = float(np.max(np.maximum((h1 - h2) / hscale, 0.0)))
    hz_leq = hviol_leq <= slack
    hz_geq = hviol_geq <= slack

    verdict = _directional_verdict(
        viol_leq,
        viol_geq,
        t[:-1],
        slack,
        hazard_holds_leq=hz_leq,
        hazard_holds_geq=hz_geq,
        hazard_disagrees=False,
        truncated_at_t=t_cut,
        notes=() if t_cut is None else (f"grid truncated at t={t_cut:.6g} (survival underflow)",),
    )
    if (verdict.holds_leq != hz_leq) or (verdict.holds_geq != hz_geq):
        verdict = replace(
            verdict,
            hazard_disagrees=True,
            notes=verdict.notes + ("ratio and hazard criteria disagree beyond slack",),
        )
    return verdict


def check_star(
    m1: MixtureModel,
    m2: MixtureModel,
    grid: EvaluationGrid,
    slack: float = DEFAULT_SLACK,
) -> OrderVerdict:
    """Star order: monotonicity of quantile_{other}(cdf_{one}(x)) / x.

    A ``TailError`` during quantile inversion marks the verdict inconclusive.
    Grid points whose cdf is numerically 0 or 1 are dropped (recorded) since
    they cannot be inverted.
    """
    x_all = grid.x_values
    u1 = np.asarray(m1.cdf(x_all))
    u2 = np.asarray(m2.cdf(x_all))
    keep = (u1 > _CDF_LO) & (u1 < _CDF_HI) & (u2 > _CDF_LO) & (u2 < _CDF_HI)
    notes: tuple[str, ...] = ()
    if not np.all(keep):
        notes = (f"{int(np.sum(~keep))} grid points dropped (cdf at 0 or 1)",)
    t = grid.t_values[keep]
    if t.size < 2:
        return OrderVerdict(
            holds_leq=False, holds_geq=False,
            max_violation_leq=float("nan"), max_violation_geq=float("nan"),
            witness_t=float("nan"), inconclusive=True,
            reason="fewer than two grid points with invertible cdf", notes=notes,
        )
    x = t / (1.0 - t)
    try:
        s_12 = np.array([m2.quantile(u) for u in u1[keep]])
        s_21 = np.array([m1.quantile(u) for u in u2[keep]])
    except TailError as exc:
        return OrderVerdict(
            holds_leq=False, holds_geq=False,
            max_violation_leq=float("nan"), max_violation_geq=float("nan"),
            witness_t=float("nan"), inconclusive=True,
            reason=f"quantile inversion hit the tail guard: {exc}", notes=notes,
        )
    ratio_leq = s_12 / x
    ratio_geq = s_21 / x
    viol_leq = _monotone_violations(ratio_leq, np.maximum(1.0, np.abs(ratio_leq[:-1])))
    viol_geq = _monotone_violations(ratio_geq, np.maximum(1.0, np.abs(ratio_geq[:-1])))
    return _directional_verdict(viol_leq, viol_geq, t[:-1], slack, notes=notes)


# -- Lorenz ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LorenzCurve:
    """Normalized quantile integral L(p) on a clipped probability grid."""

    p_values: np.ndarray = field(repr=False)
    l_values: np.ndarray = field(repr=False)
    mean: float


def default_lorenz_grid(points: int = 1601, tail_points: int = 400) -> np.ndarray:
    """Uniform grid on [1e-6, 0.99] plus a geometric refinement toward 1 - 1e-6.

    The refinement keeps the trapezoid rule accurate where heavy-ish quantile
    functions grow fastest.
    """
    body = np.linspace(1e-6, 0.99, points)
    tail = 1.0 - np.geomspace(1e-2, 1e-6, tail_points)
    return np.unique(np.concatenate([body, tail]))


def lorenz_curve(m: MixtureModel, u_grid: np.ndarray | None = None) -> LorenzCurve:
    """Trapezoid quadrature of the quantile function over u in [1e-6, 1-1e-6].

    Raises ``InfiniteMeanSuspected`` when the top 1% of the u-range carries
    more than half of the integral while the top quantile exceeds 1e9, or when
    the quantile inversion itself explodes past the tail guard.
    """
    u = default_lorenz_grid() if u_grid is None else np.asarray(u_grid, dtype=float)
    if u.ndim != 1 or u.size < 3:
        raise ParameterError("lorenz grid needs at least three probability levels")
    if np.any(u <= 0) or np.any(u >= 1) or np.any(np.diff(u) <= 0):
        raise ParameterError("lorenz grid must be strictly increasing inside (0, 1)")
    try:
        q = np.array([m.quantile(v) for v in u])
    except TailError as exc:
        raise InfiniteMeanSuspected(
            f"quantile diverged while integrating the mean: {exc}"
        ) from exc
    steps = np.diff(u)
    segments = 0.5 * (q[1:] + q[:-1]) * steps
    total = float(np.sum(segments))
    if total <= 0:
        raise NumericalError("mean integral is not positive")
    top_cut = u[-1] - 0.01 * (u[-1] - u[0])
    top_share = float(np.sum(segments[u[1:] > top_cut])) / total
    if top_share > 0.5 and q[-1] > 1e9:
        raise InfiniteMeanSuspected(
            f"top 1% of the u-range carries {top_share:.1%} of the mean integral"
        )
    cum = np.concatenate([[0.0], np.cumsum(segments)])
    return LorenzCurve(p_values=u, l_values=cum / total, mean=total)


def check_lorenz(
    m1: MixtureModel,
    m2: MixtureModel,
    u_grid: np.ndarray | None = None,
    slack: float = DEFAULT_SLACK,
) -> OrderVerdict:
    """Lorenz order: m1 <=lorenz m2 iff L_{m1}(p) >= L_{m2}(p) - slack for all p."""
    u = default_lorenz_grid() if u_grid is None else np.asarray(u_grid, dtype=float)
    c1 = lorenz_curve(m1, u)
    c2 = lorenz_curve(m2, u)
    diff = c1.l_values - c2.l_values
    return _directional_verdict(
        np.maximum(-diff, 0.0), np.maximum(diff, 0.0), u, slack
    )


# -- sign-function evaluators --------------------------------------------------
#
# Each evaluator computes the exact value of the Schur-type derivative
# combination
#
#     H = (p1-p2) * (dG/dp1 - dG/dp2) + (c1-c2) * (dG/dc1 - dG/dc2)
#
# for G the two-component mixture survival (c = tilt or rate power) or the
# two-component mixture hazard (c = tilt), using closed-form partial
# derivatives.  The sign of H drives the dominance conclusions; its value is
# validated against central finite differences in the test suite.


def _require_positive_x(x: float) -> float:
    x = float(x)
    if not (x > 0 and np.isfinite(x)):
        raise DomainError(f"evaluation point must be > 0, got {x!r}")
    return x


def h_pa(
    p: tuple[float, float],
    alpha: tuple[float, float],
    lam: float,
    baseline: BaselineDistribution,
    x: float,
) -> float:
    """Derivative combination of the vary-tilt mixture survival at fixed x."""
    x = _require_positive_x(x)
    p1, p2 = p
    a1, a2 = alpha
    z = float(np.exp(lam * baseline.log_survival(x)))
    m1 = 1.0 - (1.0 - a1) * z
    m2 = 1.0 - (1.0 - a2) * z
    d_p = (a1 - a2) * (z - z * z) / (m1 * m2)
    d_a = (z - z * z) * (p1 * m2 * m2 - p2 * m1 * m1) / (m1 * m1 * m2 * m2)
    return (p1 - p2) * d_p + (a1 - a2) * d_a


def h_plambda(
    p: tuple[float, float],
    lam: tuple[float, float],
    alpha: float,
    baseline: BaselineDistribution,
    x: float,
) -> float:
    """Derivative combination of the vary-rate-power mixture survival at fixed x."""
    x = _require_positive_x(x)
    p1, p2 = p
    l1, l2 = lam
    logs = float(baseline.log_survival(x))
    z1, z2 = np.exp(l1 * logs), np.exp(l2 * logs)
    ab = 1.0 - alpha
    m1 = 1.0 - ab * z1
    m2 = 1.0 - ab * z2
    d_p = alpha * (z1 - z2) / (m1 * m2)
    d_l = alpha * logs * (p1 * z1 * m2 * m2 - p2 * z2 * m1 * m1) / (m1 * m1 * m2 * m2)
    return (p1 - p2) * d_p + (l1 - l2) * d_l


def h_hr(
    p: tuple[float, float],
    alpha: tuple[float, float],
    lam: float,
    baseline: BaselineDistribution,
    x: float,
) -> float:
    """Derivative combination of the vary-tilt mixture hazard at fixed x.

    The sign claim behind this evaluator is asserted under the balance
    condition p1*alpha1 == p2*alpha2, which is enforced as a precondition.
    """
    x = _require_positive_x(x)
    p1, p2 = p
    a1, a2 = alpha
    if abs(p1 * a1 - p2 * a2) > 1e-10:
        raise ParameterError(
            f"h_hr requires p1*alpha1 == p2*alpha2 within 1e-10, got {p1 * a1!r} vs {p2 * a2!r}"
        )
    z = float(np.exp(lam * baseline.log_survival(x)))
    r = float(baseline.hazard(x))
    m1 = 1.0 - (1.0 - a1) * z
    m2 = 1.0 - (1.0 - a2) * z
    n = p1 * a1 * m2 * m2 + p2 * a2 * m1 * m1
    d = m1 * m2 * (p1 * a1 * m2 + p2 * a2 * m1)
    # quotient-rule partials of lam*r*N/D in each of the four coordinates
    dn_p1, dd_p1 = a1 * m2 * m2, a1 * m1 * m2 * m2
    dn_p2, dd_p2 = a2 * m1 * m1, a2 * m1 * m1 * m2
    dn_a1 = p1 * m2 * m2 + 2.0 * p2 * a2 * m1 * z
    dd_a1 = z * m2 * (p1 * a1 * m2 + p2 * a2 * m1) + m1 * m2 * (p1 * m2 + p2 * a2 * z)
    dn_a2 = p2 * m1 * m1 + 2.0 * p1 * a1 * m2 * z
    dd_a2 = z * m1 * (p1 * a1 * m2 + p2 * a2 * m1) + m1 * m2 * (p2 * m1 + p1 * a1 * z)
    c = lam * r / (d * d)
    dp1 = c * (dn_p1 * d - n * dd_p1)
    dp2 = c * (dn_p2 * d - n * dd_p2)
    da1 = c * (dn_a1 * d - n * dd_a1)
    da2 = c * (dn_a2 * d - n * dd_a2)
    return (p1 - p2) * (dp1 - dp2) + (a1 - a2) * (da1 - da2)
