"""Strictly stable random variates by the Chambers-Mallows-Stuck transform.

Only two families are supported: symmetric stable laws for any index in
(0, 2), and totally positively skewed laws for index below 1 (these live on
the positive half-line). Both are generated at unit scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SpecError
from .rng import RngState, as_rng

SYMMETRIC = "symmetric"
ONE_SIDED = "one-sided-positive"
SKEWS = (SYMMETRIC, ONE_SIDED)

# below this distance from 1 the CMS formula loses precision; use tan(U)
_CAUCHY_EPS = 1e-10


@dataclass(frozen=True)
class StableParams:
    alpha: float
    skew: str = SYMMETRIC

    def __post_init__(self):
        if not 0 < self.alpha < 2:
            raise SpecError(f"stable index must lie in (0, 2), got {self.alpha}")
        if self.skew not in SKEWS:
            raise SpecError(f"unknown stable skew {self.skew!r}")
        if self.skew == ONE_SIDED and not self.alpha < 1:
            raise SpecError("one-sided-positive stable law requires alpha < 1")


def sample_stable(params: StableParams, n: int, rng: RngState | int | None = None) -> np.ndarray:
    """Draw ``n`` i.i.d. stable variates.

    ``U = pi * (u - 1/2)`` is uniform on (-pi/2, pi/2) and ``E = -log(1 - u')``
    is unit exponential. The symmetric case is

        sin(alpha U) / cos(U)**(1/alpha) * (cos((1 - alpha) U) / E)**((1 - alpha)/alpha)

    which reduces to ``tan(U)`` (standard Cauchy) at ``alpha = 1``. The
    one-sided case shifts the angle by ``pi/2`` (skewness parameter 1).
    """
    if n < 1:
        raise SpecError("sample size must be >= 1")
    rng = as_rng(rng)
    a = params.alpha
    u = np.pi * (rng.random(n) - 0.5)
    if params.skew == SYMMETRIC and abs(a - 1.0) < _CAUCHY_EPS:
        return np.tan(u)
    e = -np.log1p(-rng.random(n))
    if params.skew == SYMMETRIC:
        return (np.sin(a * u) / np.cos(u) ** (1.0 / a)
                * (np.cos((1.0 - a) * u) / e) ** ((1.0 - a) / a))
    shifted = a * (u + np.pi / 2)
    return (np.sin(shifted) / np.cos(u) ** (1.0 / a)
            * (np.cos(u - shifted) / e) ** ((1.0 - a) / a))


def variance_growth_exponent(alpha: float, sizes, reps: int, rng: RngState | int | None = None) -> float:
    """Log-log slope of the median plug-in variance against sample size.

    For symmetric stable samples with ``alpha < 1`` the 1/n variance grows
    like ``n ** (2/alpha - 1)``; the returned least-squares slope estimates
    that exponent.
    """
    if not 0 < alpha < 1:
        raise SpecError("variance growth exponent is defined for 0 < alpha < 1")
    sizes = [int(s) for s in sizes]
    if len(sizes) < 3:
        raise SpecError("need at least 3 sample sizes for the regression")
    if any(b <= a for a, b in zip(sizes, sizes[1:])) or sizes[0] < 2:
        raise SpecError("sizes must be strictly increasing and >= 2")
    if reps < 50:
        raise SpecError("reps must be >= 50")
    rng = as_rng(rng)
    params = StableParams(alpha)
    medians = []
    for n in sizes:
        draws = sample_stable(params, n * reps, rng).reshape(reps, n)
        medians.append(np.median(draws.var(axis=1)))
    slope, _ = np.polyfit(np.log(sizes), np.log(medians), 1)
    return float(slope)
