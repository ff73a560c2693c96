"""The tilt/rate-power transform of a baseline survival function.

A random variable follows the transformed law with tilt ``alpha`` and rate
power ``lam`` over baseline survival S when its survival function is

    F(x) = alpha * S(x)**lam / (1 - (1 - alpha) * S(x)**lam).

``alpha = 1`` reduces to the proportional-hazards power S**lam; ``lam = 1``
reduces to the proportional-odds tilt alpha*S / (1 - (1-alpha)*S).  The tilt
may be any positive real.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .baseline import BaselineDistribution
from .errors import DomainError, NumericalError, ParameterError

__all__ = ["MphrParams", "survival", "density", "hazard", "inverse_survival"]


@dataclass(frozen=True)
class MphrParams:
    """Tilt ``alpha`` > 0 and rate power ``lam`` > 0."""

    alpha: float
    lam: float

    def __post_init__(self):
        for name, v in (("alpha", self.alpha), ("lam", self.lam)):
            if not (v > 0 and np.isfinite(v)):
                raise ParameterError(f"{name} must be a positive real, got {v!r}")


def _tilted_power(p: MphrParams, d: BaselineDistribution, x):
    # S**lam computed in log space so far-tail grid points degrade to 0.0
    # instead of producing spurious NaNs.
    return np.exp(p.lam * d.log_survival(x))


def survival(p: MphrParams, d: BaselineDistribution, x):
    """Survival alpha*z / (1 - (1-alpha)*z) with z = S(x)**lam."""
    z = _tilted_power(p, d, x)
    denom = 1.0 - (1.0 - p.alpha) * z
    if np.any(denom <= 0):
        raise NumericalError("tilted survival denominator is non-positive")
    return p.alpha * z / denom


def density(p: MphrParams, d: BaselineDistribution, x):
    """Density lam*alpha*z*r(x) / (1 - (1-alpha)*z)**2 with r the baseline hazard."""
    z = _tilted_power(p, d, x)
    denom = 1.0 - (1.0 - p.alpha) * z
    if np.any(denom <= 0):
        raise NumericalError("tilted survival denominator is non-positive")
    return p.lam * p.alpha * z * d.hazard(x) / denom**2


def hazard(p: MphrParams, d: BaselineDistribution, x):
    """Hazard lam*r(x) / (1 - (1-alpha)*z); requires the survival not to underflow."""
    z = _tilted_power(p, d, x)
    if np.any(z == 0.0):
        arr = np.asarray(x, dtype=float)
        witness = float(arr[np.asarray(z) == 0.0][0]) if arr.ndim else float(arr)
        raise NumericalError("survival underflow in hazard evaluation", witness=witness)
    return p.lam * d.hazard(x) / (1.0 - (1.0 - p.alpha) * z)


def inverse_survival(p: MphrParams, d: BaselineDistribution, u):
    """Solve survival(x) = u in closed form: S**lam = u / (alpha + u*(1-alpha))."""
    arr = np.asarray(u, dtype=float)
    if np.any(arr <= 0) or np.any(arr > 1) or np.any(np.isnan(arr)):
        raise DomainError(f"survival level must lie in (0, 1], got {u!r}")
    z = arr / (p.alpha + arr * (1.0 - p.alpha))
    return d.inverse_survival(z ** (1.0 / p.lam))
