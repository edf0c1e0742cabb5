"""Level-kappa outlier bounds and the laws that attain them.

For any finite-variance law ``p(kappa; X) <= 1 / kappa^2``; the bound is
reached only by the symmetric three-point law on ``{-1, 0, 1}``. For
unimodal laws and ``kappa > 2 / sqrt(3)`` the sharper Gauss bound
``4 / (9 kappa^2)`` holds, reached by an atom at zero mixed with a uniform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .distributions import DistributionSpec, discrete, spike_uniform
from .errors import InapplicableBoundError, SpecError

GAUSS_MIN_KAPPA = 2 / math.sqrt(3)


def selberg_bound(kappa: float) -> float:
    if not kappa > 1:
        raise SpecError(f"Chebyshev/Selberg level needs kappa > 1, got {kappa}")
    return 1.0 / kappa ** 2


def gauss_bound(kappa: float) -> float:
    if not kappa > GAUSS_MIN_KAPPA:
        raise InapplicableBoundError(f"Gauss bound needs kappa > 2/sqrt(3), got {kappa}")
    return 4.0 / (9.0 * kappa ** 2)


def _check_p(p, upper_inclusive: bool) -> None:
    ok = 0 < p <= 1 if upper_inclusive else 0 < p < 1
    if not ok:
        raise SpecError(f"p must lie in (0, 1{']' if upper_inclusive else ')'}, got {p}")


def example1_spec(p) -> DistributionSpec:
    """Three-point law on ``-1, 0, 1`` with masses ``p/2, 1 - p, p/2``."""
    _check_p(p, upper_inclusive=False)
    half = p / 2 if isinstance(p, Fraction) else float(p) / 2
    return discrete({-1.0: half, 0.0: 1 - p, 1.0: half})


def example2_spec(p) -> DistributionSpec:
    """Zero with mass ``1 - p``, else uniform on ``[-1, 1]``."""
    _check_p(p, upper_inclusive=True)
    return spike_uniform(p)


def example2_prob(p: float, kappa: float) -> float:
    """``P{|X| >= kappa sd}`` for the spike-uniform law, ``p (1 - kappa sqrt(p/3))``.

    Clamped to 0 where ``kappa sqrt(p/3) > 1``.
    """
    _check_p(p, upper_inclusive=True)
    return max(0.0, p * (1.0 - kappa * math.sqrt(p / 3.0)))


def example2_maximizer(kappa: float) -> tuple[float, float]:
    """``(p*, max)`` of ``example2_prob`` over ``p``: ``(4/(3 kappa^2), 4/(9 kappa^2))``."""
    if not kappa > GAUSS_MIN_KAPPA:
        raise InapplicableBoundError(f"maximizer needs kappa > 2/sqrt(3), got {kappa}")
    return 4.0 / (3.0 * kappa ** 2), 4.0 / (9.0 * kappa ** 2)


@dataclass(frozen=True)
class BoundReport:
    kappa: float
    chebyshev_selberg: float
    gauss: float | None  # None where the Gauss bound is inapplicable
    extremal_three_point_p: float
    extremal_spike_uniform_p: float | None

    def as_row(self) -> list:
        return [self.kappa, self.chebyshev_selberg, self.gauss,
                self.extremal_three_point_p, self.extremal_spike_uniform_p]


def bound_report(kappa: float) -> BoundReport:
    selberg = selberg_bound(kappa)
    if kappa > GAUSS_MIN_KAPPA:
        p_star, gauss = example2_maximizer(kappa)
    else:
        p_star = gauss = None
    return BoundReport(float(kappa), selberg, gauss, selberg, p_star)
