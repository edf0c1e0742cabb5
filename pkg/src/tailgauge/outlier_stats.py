"""Outlier probabilities at level kappa.

Two functionals are computed here. The empirical one standardizes a sample
by its own mean and 1/n standard deviation and counts observations at or
beyond ``kappa``. The theoretical one is ``P{|X - EX| >= kappa * sd(X)}``
for a distribution spec. Both use ``>=``: the three-point extremal law
only reaches probability ``p`` at ``kappa = 1/sqrt(p)`` if observations
sitting exactly on the boundary count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import distributions as dist
from .errors import DegenerateSampleError, SpecError, UnsupportedSpecError
from .rng import RngState, as_rng

EMPIRICAL = "empirical-plug-in"
EXACT = "exact"
MONTE_CARLO = "monte-carlo"

# relative slack for atoms lying on the kappa * sd boundary
ATOM_TIE_RTOL = 1e-12

# ostensible-heavy-tail heuristics (see ostensibility_report)
PIKE_HALF_WIDTH = 0.5
PIKE_MASS_MIN = 0.6
GAUSS_FRACTION = 0.25
HILL_INDEX_MIN = 2.0


@dataclass(frozen=True)
class OutlierEstimate:
    kappa: float
    n: int  # 0 for exact values
    estimate: float
    std_error: float
    flagged: int
    mode: str


@dataclass(frozen=True)
class BetaVerdict:
    observation: float
    exceedance_prob: float
    beta: float

    @property
    def is_beta_outlier(self) -> bool:
        return self.exceedance_prob <= self.beta


def _check_kappa(kappa: float) -> float:
    kappa = float(kappa)
    if not kappa >= 0 or math.isnan(kappa):
        raise SpecError(f"kappa must be nonnegative, got {kappa}")
    return kappa


def standardized_distances(data) -> np.ndarray:
    """``|x_j - mean| / s_n`` with the 1/n standard deviation."""
    x = np.asarray(data, dtype=float).ravel()
    if x.size < 2:
        raise DegenerateSampleError("need at least 2 observations")
    if not np.all(np.isfinite(x)):
        raise DegenerateSampleError("data contain non-finite values")
    centered = x - x.mean()
    s = math.sqrt(np.mean(centered ** 2))
    if s == 0 or not np.isfinite(s):
        raise DegenerateSampleError("sample has zero spread; outlier level undefined")
    return np.abs(centered) / s


def flag_outliers(data, kappa: float) -> list[int]:
    """Positions of observations at least ``kappa`` plug-in sds from the mean."""
    kappa = _check_kappa(kappa)
    return np.flatnonzero(standardized_distances(data) >= kappa).tolist()


def empirical_pn(data, kappa: float) -> OutlierEstimate:
    """Fraction of the sample flagged at level ``kappa``, with binomial SE."""
    kappa = _check_kappa(kappa)
    z = standardized_distances(data)
    n = z.size
    flagged = int(np.count_nonzero(z >= kappa))
    p = flagged / n
    return OutlierEstimate(kappa, n, p, math.sqrt(p * (1 - p) / n), flagged, EMPIRICAL)


def exact_outlier_prob(spec, kappa: float) -> OutlierEstimate:
    """``P{|X - EX| >= kappa * sd(X)}`` from closed-form tail probabilities."""
    kappa = _check_kappa(kappa)
    m = dist.moments(spec)
    if not m.finite_variance:
        raise UnsupportedSpecError("outlier probability needs a finite variance")
    if not dist.has_cdf(spec):
        raise UnsupportedSpecError("outlier probability needs an available cdf")
    if m.variance == 0:
        raise DegenerateSampleError("degenerate law: zero variance")
    t = kappa * m.sd
    if t == 0:
        return OutlierEstimate(kappa, 0, 1.0, 0.0, 0, EXACT)
    lo, hi = m.mean - t, m.mean + t
    p = dist.prob_le(spec, lo) + dist.prob_ge(spec, hi)
    # atoms a rounding error inside the boundary count as on it
    slack = ATOM_TIE_RTOL * max(t, abs(m.mean))
    p += dist.atom_mass(spec, lo, lo + slack) - dist.atom_mass(spec, lo, lo)
    p += dist.atom_mass(spec, hi - slack, hi) - dist.atom_mass(spec, hi, hi)
    return OutlierEstimate(kappa, 0, min(1.0, p), 0.0, 0, EXACT)


def mc_outlier_prob(spec, kappa: float, n: int, rng: RngState | int | None = None) -> OutlierEstimate:
    """Plug-in outlier fraction of a fresh sample of size ``n``."""
    if n < 100:
        raise SpecError("Monte Carlo estimate needs n >= 100")
    est = empirical_pn(dist.sample(spec, n, as_rng(rng)), kappa)
    return OutlierEstimate(est.kappa, est.n, est.estimate, est.std_error, est.flagged, MONTE_CARLO)


def beta_outlier_test(spec, x: float, beta: float) -> BetaVerdict:
    """Two-sided exceedance ``P{|X - EX| >= |x - EX|}`` compared with ``beta``."""
    if not 0 <= beta <= 1:
        raise SpecError(f"beta must be a probability, got {beta}")
    m = dist.moments(spec)
    if not math.isfinite(m.mean):
        raise UnsupportedSpecError("beta test needs a finite mean")
    if not dist.has_cdf(spec):
        raise UnsupportedSpecError("beta test needs an available cdf")
    d = abs(float(x) - m.mean)
    if d == 0:
        prob = 1.0
    else:
        prob = min(1.0, dist.prob_le(spec, m.mean - d) + dist.prob_ge(spec, m.mean + d))
    return BetaVerdict(float(x), prob, float(beta))


def hill_tail_index(data, k_order: int) -> float:
    """Hill estimate of the tail index from the ``k_order`` largest ``|x|``.

    Uses the (k+1)-th largest absolute value as the threshold:
    ``1 / mean(log(x_(i) / x_(k+1)))`` over ``i = 1..k``.
    """
    x = np.abs(np.asarray(data, dtype=float).ravel())
    k = int(k_order)
    if k < 5:
        raise SpecError("k_order must be >= 5")
    if not k < x.size / 2:
        raise SpecError(f"k_order must be below n/2 = {x.size / 2}")
    x = x[x > 0]
    if x.size <= k:
        raise DegenerateSampleError("not enough positive absolute values for the Hill estimator")
    top = np.sort(x)[-(k + 1):]
    gamma = np.mean(np.log(top[1:]) - np.log(top[0]))
    if gamma <= 0:
        raise DegenerateSampleError("tied upper order statistics; Hill estimator undefined")
    return float(1.0 / gamma)


@dataclass(frozen=True)
class OstensibilityReport:
    n: int
    kappa: float
    pike_mass: float
    outlier_rate: float
    hill_index: float
    k_order: int
    rate_threshold: float

    @property
    def ostensible(self) -> bool:
        return (self.pike_mass > PIKE_MASS_MIN
                and self.outlier_rate > self.rate_threshold
                and self.hill_index > HILL_INDEX_MIN)


def ostensibility_report(data, kappa: float) -> OstensibilityReport:
    """Heuristic check for a peaked body with thin tails posing as heavy tails.

    The sample is labelled ostensible when more than 60% of it lies within
    half a plug-in sd of the mean, its outlier rate at ``kappa`` exceeds a
    quarter of the unimodal maximum ``4 / (9 kappa^2)``, and the Hill index
    of its tail is above 2 (i.e. the tail is not actually heavy).
    """
    x = np.asarray(data, dtype=float).ravel()
    if x.size < 100:
        raise SpecError("ostensibility report needs n >= 100")
    kappa = _check_kappa(kappa)
    if kappa == 0:
        raise SpecError("ostensibility report needs kappa > 0")
    z = standardized_distances(x)
    k = math.ceil(math.sqrt(x.size))
    return OstensibilityReport(
        n=x.size,
        kappa=kappa,
        pike_mass=float(np.mean(z <= PIKE_HALF_WIDTH)),
        outlier_rate=float(np.mean(z >= kappa)),
        hill_index=hill_tail_index(x - x.mean(), k),
        k_order=k,
        rate_threshold=GAUSS_FRACTION * 4 / (9 * kappa ** 2),
    )
