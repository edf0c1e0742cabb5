"""Seeded experiment procedures and their tabular results.

Every procedure is a pure function of its parameters and seed. Replication
``r`` of grid point ``i`` draws from ``substream(seed, i * reps + r)``, so the
result does not depend on evaluation order.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import distributions as dist
from .errors import DegenerateSampleError, SpecError, UnsupportedSpecError
from .outlier_stats import empirical_pn, exact_outlier_prob, mc_outlier_prob
from .quadrature import DEFAULT_SETTINGS, QuadratureSettings, quotient_cdf
from .rng import make_rng, substream
from .stable import StableParams, sample_stable

DEFAULT_KAPPA = 5.0
BOOTSTRAP_RESAMPLES = 200
# substream indices at or above this offset feed bootstraps, not replications
_BOOTSTRAP_STREAM = 1 << 40

FIG1_SPEC = dist.Mixture((
    (Fraction(71, 75), dist.Uniform(-0.1, 0.1)),
    (Fraction(4, 75), dist.Uniform(-1.0, 1.0)),
))
FIG2_SPEC = dist.Mixture((
    (Fraction(4, 75), dist.Normal(0.0, 1.0)),
    (Fraction(71, 75), dist.Normal(0.0, 0.1)),
))

CSV_COLUMNS = ("x", "value", "std_error")
HISTOGRAM_COLUMNS = ("bin_lo", "bin_hi", "count")


@dataclass
class ExperimentResult:
    name: str
    seed: int
    rows: list  # of (x, value, std_error)
    metadata: dict = field(default_factory=dict)
    histogram: list | None = None  # of (bin_lo, bin_hi, count), aligned with rows
    runtime_s: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if not self.rows:
            raise SpecError(f"experiment {self.name!r} produced no rows")
        self.rows = [tuple(float(v) for v in row) for row in self.rows]
        if any(r[2] < 0 for r in self.rows):
            raise SpecError("standard errors must be nonnegative")

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if self.histogram is None:
            writer.writerow(CSV_COLUMNS)
            writer.writerows([fmt(v) for v in row] for row in self.rows)
        else:
            writer.writerow(CSV_COLUMNS + HISTOGRAM_COLUMNS)
            for row, (lo, hi, count) in zip(self.rows, self.histogram):
                writer.writerow([fmt(v) for v in row] + [fmt(lo), fmt(hi), str(int(count))])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "name": self.name,
            "seed": self.seed,
            "columns": list(CSV_COLUMNS),
            "rows": [list(r) for r in self.rows],
            "metadata": self.metadata,
            "runtime_s": self.runtime_s,
        }
        if self.histogram is not None:
            doc["histogram"] = [{"bin_lo": lo, "bin_hi": hi, "count": int(c)}
                                for lo, hi, c in self.histogram]
        return json.dumps(doc, indent=2, default=_json_default)


def fmt(value) -> str:
    """Locale-independent number with 7 significant digits."""
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    return format(float(value), ".7g")


def _json_default(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, Fraction):
        return str(obj)
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def bootstrap_median_se(values, rng, resamples: int = BOOTSTRAP_RESAMPLES) -> float:
    """Bootstrap standard error of the median of ``values``."""
    values = np.sort(np.asarray(values, dtype=float))
    idx = rng.integers(0, values.size, size=(resamples, values.size))
    return float(np.std(np.median(values[idx], axis=1), ddof=1))


def _check_sizes(sizes) -> list[int]:
    sizes = [int(n) for n in sizes]
    if not sizes:
        raise SpecError("need at least one sample size")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise SpecError("sizes must be strictly increasing")
    if sizes[0] < 2:
        raise SpecError("sample sizes must be >= 2")
    return sizes


# --------------------------------------------------------------------------
# heavy-tailed collapse


def theorem1_fractions(alpha: float, kappa: float, n: int, reps: int, seed: int, grid_index: int = 0) -> np.ndarray:
    """Outlier fractions of ``reps`` symmetric stable samples of size ``n``."""
    params = StableParams(alpha)
    out = np.empty(reps)
    for r in range(reps):
        x = sample_stable(params, n, substream(seed, grid_index * reps + r))
        out[r] = empirical_pn(x, kappa).estimate
    return out


def run_theorem1(alpha: float, kappa: float = DEFAULT_KAPPA, sizes=(100, 1000, 10_000, 100_000),
                 reps: int = 200, seed: int = 0) -> ExperimentResult:
    """Median plug-in outlier fraction of stable samples as ``n`` grows."""
    start = time.perf_counter()
    sizes = _check_sizes(sizes)
    if reps < 50:
        raise SpecError("reps must be >= 50")
    StableParams(alpha)
    rows = []
    for i, n in enumerate(sizes):
        fr = theorem1_fractions(alpha, kappa, n, reps, seed, i)
        se = bootstrap_median_se(fr, substream(seed, _BOOTSTRAP_STREAM + i))
        rows.append((n, float(np.median(fr)), se))
    meta = {"alpha": alpha, "kappa": kappa, "sizes": sizes, "replications": reps,
            "statistic": "median over replications of the plug-in outlier fraction"}
    return ExperimentResult("theorem1", seed, rows, meta, runtime_s=time.perf_counter() - start)


# --------------------------------------------------------------------------
# figures 1-3


def _scatter_experiment(spec, n: int, kappa: float, seed: int) -> tuple[np.ndarray, dict, list]:
    x = dist.sample(spec, n, make_rng(seed))
    m = dist.moments(spec)
    outside = np.abs(x - m.mean) >= kappa * m.sd
    emp = empirical_pn(x, kappa)
    p = exact_outlier_prob(spec, kappa).estimate
    meta = {
        "n": n,
        "kappa": kappa,
        "spec": dist.spec_to_dict(spec),
        "mean_true": m.mean,
        "sigma_true": m.sd,
        "p_exact": p,
        "expected_flagged": n * p,
        "flagged_true_sigma": int(outside.sum()),
        "flagged_empirical": emp.flagged,
        "empirical_pn": emp.estimate,
        "rows": "x = observation, value = 1 if outside mean +- kappa * true sigma",
    }
    rows = [(xi, float(o), 0.0) for xi, o in zip(x, outside)]
    return x, meta, rows


def run_fig1(seed: int = 0, n: int = 500, kappa: float = DEFAULT_KAPPA) -> ExperimentResult:
    """Sample from the two-uniform mixture and count points beyond +-kappa sigma."""
    start = time.perf_counter()
    _, meta, rows = _scatter_experiment(FIG1_SPEC, n, kappa, seed)
    return ExperimentResult("fig1", seed, rows, meta, runtime_s=time.perf_counter() - start)


def run_fig2_fig3(seed: int = 0, n: int = 5000, kappa: float = DEFAULT_KAPPA,
                  scale: float = 20.0, bins: int = 60) -> ExperimentResult:
    """Two-normal mixture sample, flagged at kappa, with a histogram of ``scale * x``.

    The histogram spans ``[-scale * max|x|, scale * max|x|]`` and is attached
    to the result; :func:`histogram_result` turns it into its own table.
    """
    start = time.perf_counter()
    x, meta, rows = _scatter_experiment(FIG2_SPEC, n, kappa, seed)
    scaled = scale * x
    edge = float(np.max(np.abs(scaled)))
    counts, edges = np.histogram(scaled, bins=bins, range=(-edge, edge))
    meta["histogram_scale"] = scale
    meta["histogram_bins"] = bins
    meta["histogram"] = [[float(lo), float(hi), int(c)] for lo, hi, c in zip(edges[:-1], edges[1:], counts)]
    return ExperimentResult("fig2", seed, rows, meta, runtime_s=time.perf_counter() - start)


def histogram_result(result: ExperimentResult) -> ExperimentResult:
    """Histogram table (bin center, count) carried by a fig2 result."""
    bins = result.metadata.get("histogram")
    if not bins:
        raise SpecError(f"result {result.name!r} carries no histogram")
    rows = [((lo + hi) / 2, c, 0.0) for lo, hi, c in bins]
    meta = {k: v for k, v in result.metadata.items() if k != "histogram"}
    return ExperimentResult("fig3", result.seed, rows, meta, histogram=[tuple(b) for b in bins],
                            runtime_s=result.runtime_s)


# --------------------------------------------------------------------------
# figure 4


def fig4_fractions(alpha: float, kappa: float, n: int, reps: int, seed: int, grid_index: int = 0,
                   shifted: bool = False) -> np.ndarray:
    spec = dist.ParetoScaleQuotient(alpha, shifted)
    out = np.empty(reps)
    for r in range(reps):
        x = dist.sample(spec, n, substream(seed, grid_index * reps + r))
        out[r] = empirical_pn(x, kappa).estimate
    return out


def _check_alphas(alphas) -> list[float]:
    alphas = [float(a) for a in alphas]
    if not alphas or any(not 2 < a <= 10 for a in alphas):
        raise SpecError("alphas must lie in (2, 10]")
    if any(b <= a for a, b in zip(alphas, alphas[1:])):
        raise SpecError("alphas must be increasing")
    return alphas


def run_fig4(alphas=(2.5, 4.0, 6.0, 8.0, 10.0), kappa: float = DEFAULT_KAPPA, n: int = 100_000,
             reps: int = 50, seed: int = 0, shifted: bool = False) -> ExperimentResult:
    """Median plug-in outlier fraction of the Gaussian/Pareto-scale quotient versus alpha.

    ``X / A`` has no finite variance for any alpha, so each sample is
    standardized by its own sd (empirical-sigma protocol). ``shifted``
    divides by ``A + 1`` instead.
    """
    start = time.perf_counter()
    alphas = _check_alphas(alphas)
    if n < 10_000:
        raise SpecError("n must be >= 10^4")
    if reps < 1:
        raise SpecError("reps must be >= 1")
    rows = []
    for i, a in enumerate(alphas):
        fr = fig4_fractions(a, kappa, n, reps, seed, i, shifted)
        se = bootstrap_median_se(fr, substream(seed, _BOOTSTRAP_STREAM + i))
        rows.append((a, float(np.median(fr)), se))
    meta = {"kappa": kappa, "n": n, "replications": reps, "alphas": alphas,
            "model": "X/(A+1)" if shifted else "X/A",
            "protocol": "empirical-sigma: each sample standardized by its own 1/n sd, "
                        "because Var(X/A) is infinite for every alpha"}
    return ExperimentResult("fig4", seed, rows, meta, runtime_s=time.perf_counter() - start)


def fig4_exact_curve(alphas=(2.5, 4.0, 6.0, 8.0, 10.0), kappa: float = DEFAULT_KAPPA) -> ExperimentResult:
    """Exact ``p(kappa; X / (A + 1))`` versus alpha, by quadrature.

    Only the shifted quotient has a finite variance, so this is the one
    version of the figure-4 curve that needs no sampling.
    """
    start = time.perf_counter()
    alphas = _check_alphas(alphas)
    rows = [(a, exact_outlier_prob(dist.ParetoScaleQuotient(a, shifted=True), kappa).estimate, 0.0)
            for a in alphas]
    meta = {"kappa": kappa, "alphas": alphas, "model": "X/(A+1)", "protocol": "exact (quadrature)"}
    return ExperimentResult("fig4-exact", 0, rows, meta, runtime_s=time.perf_counter() - start)


# --------------------------------------------------------------------------
# truncation


def _exact_or_nan(spec, kappa: float) -> float:
    try:
        return exact_outlier_prob(spec, kappa).estimate
    except (UnsupportedSpecError, DegenerateSampleError):
        return math.nan


def _mc_or_nan(spec, kappa: float, n: int, rng) -> tuple[float, float]:
    try:
        est = mc_outlier_prob(spec, kappa, n, rng)
    except DegenerateSampleError:
        return math.nan, 0.0
    return est.estimate, est.std_error


def run_theorem2_demo(spec, kappa: float, threshold: float | None = None, seed: int = 0,
                      n: int = 1_000_000, truncate_compact: bool = False) -> ExperimentResult:
    """Outlier probability of ``spec`` versus its truncated, compactly supported version.

    Non-compact laws are truncated at ``threshold`` (default ``2 kappa sd``)
    with the cut mass moved to zero. A law that already has compact support
    is its own compact counterpart unless ``truncate_compact`` is set;
    truncating inside the support can lower the outlier probability.

    Rows: x=0 exact p for the law, x=1 exact p for the compact version,
    x=2 and x=3 their Monte Carlo estimates from ``n`` draws (omitted when
    ``n == 0``).
    """
    start = time.perf_counter()
    truncated = dist.truncate(spec, kappa, threshold)
    lo, hi = dist.support(spec)
    compact = math.isfinite(lo) and math.isfinite(hi)
    star = spec if compact and not truncate_compact else truncated
    p_x = _exact_or_nan(spec, kappa)
    p_star = _exact_or_nan(star, kappa)
    rows = [(0, p_x, 0.0), (1, p_star, 0.0)]
    if n:
        rows.append((2, *_mc_or_nan(spec, kappa, n, substream(seed, 0))))
        rows.append((3, *_mc_or_nan(star, kappa, n, substream(seed, 1))))
    meta = {
        "kappa": kappa,
        "threshold": truncated.threshold,
        "spec": dist.spec_to_dict(spec),
        "construction": "truncation" if star is truncated else "identity (compact support)",
        "sigma": dist.moments(spec).sd,
        "sigma_star": dist.moments(star).sd,
        "degenerate_star": dist.moments(star).variance == 0,
        "n": n,
        "row_labels": ["exact p(X)", "exact p(X*)", "monte-carlo p(X)", "monte-carlo p(X*)"][:len(rows)],
        "holds": bool(p_star >= p_x) if not math.isnan(p_x + p_star) else None,
    }
    return ExperimentResult("theorem2", seed, rows, meta, runtime_s=time.perf_counter() - start)


__all__ = [
    "ExperimentResult", "QuadratureSettings", "DEFAULT_SETTINGS", "quotient_cdf",
    "FIG1_SPEC", "FIG2_SPEC", "bootstrap_median_se", "run_theorem1", "theorem1_fractions",
    "run_fig1", "run_fig2_fig3", "histogram_result", "run_fig4", "fig4_fractions", "fig4_exact_curve",
    "run_theorem2_demo", "fmt",
]
