"""Algebraic distribution specs with exact moments, cdfs and samplers.

A spec is an immutable value built from a handful of variants:

* ``Atom``: point mass;
* ``Uniform`` and ``Normal``;
* ``Mixture``: finite mixture of other specs;
* ``Stable``: strictly stable law (symmetric, or positive with alpha < 1);
* ``ParetoScaleQuotient``: ``X / A`` with ``X`` standard normal and
  ``A + 1`` Pareto(alpha) on ``[1, inf)``, or ``X / (A + 1)`` when
  ``shifted`` (the only version with a finite variance);
* ``Truncated``: the base law on ``{|x| < A}`` with the rest of the mass
  moved to an atom at zero.

Closed forms are used wherever they exist. Tail probabilities are computed
directly (not as ``1 - cdf``) so that small outlier probabilities keep full
relative precision.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Union

import numpy as np
from scipy import special

from .errors import SpecError, UnsupportedSpecError
from .rng import RngState, as_rng
from .stable import ONE_SIDED, SKEWS, SYMMETRIC, StableParams, sample_stable

WEIGHT_SUM_TOL = 1e-12
# smallest scale value the quotient sampler divides by
QUOTIENT_SCALE_FLOOR = 1e-300

Weight = Union[float, Fraction]


# --------------------------------------------------------------------------
# spec variants


@dataclass(frozen=True)
class Atom:
    value: float


@dataclass(frozen=True)
class Uniform:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise SpecError(f"uniform needs lo < hi, got [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class Normal:
    mean: float = 0.0
    sd: float = 1.0

    def __post_init__(self):
        if not self.sd > 0:
            raise SpecError(f"normal sd must be positive, got {self.sd}")


@dataclass(frozen=True)
class Mixture:
    components: tuple  # of (weight, spec) pairs

    def __post_init__(self):
        comps = tuple((_parse_weight(w), d) for w, d in self.components)
        if not comps:
            raise SpecError("mixture needs at least one component")
        for w, d in comps:
            if not 0 <= w <= 1:
                raise SpecError(f"mixture weight {w} outside [0, 1]")
            if not isinstance(d, _SPEC_TYPES):
                raise SpecError(f"mixture component is not a spec: {d!r}")
        total = math.fsum(float(w) for w, _ in comps)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise SpecError(f"mixture weights sum to {total!r}, not 1")
        object.__setattr__(self, "components", comps)

    @property
    def weights(self) -> np.ndarray:
        return np.array([float(w) for w, _ in self.components])


@dataclass(frozen=True)
class Stable:
    alpha: float
    skew: str = SYMMETRIC

    def __post_init__(self):
        StableParams(self.alpha, self.skew)

    @property
    def params(self) -> StableParams:
        return StableParams(self.alpha, self.skew)


@dataclass(frozen=True)
class ParetoScaleQuotient:
    alpha: float
    shifted: bool = False

    def __post_init__(self):
        if not self.alpha > 2:
            raise SpecError(f"quotient law needs alpha > 2, got {self.alpha}")


@dataclass(frozen=True)
class Truncated:
    base: "DistributionSpec"
    threshold: float

    def __post_init__(self):
        if not self.threshold > 0:
            raise SpecError(f"truncation threshold must be positive, got {self.threshold}")
        if not isinstance(self.base, _SPEC_TYPES):
            raise SpecError(f"truncation base is not a spec: {self.base!r}")


DistributionSpec = Union[Atom, Uniform, Normal, Mixture, Stable, ParetoScaleQuotient, Truncated]
_SPEC_TYPES = (Atom, Uniform, Normal, Mixture, Stable, ParetoScaleQuotient, Truncated)


def _parse_weight(w) -> Weight:
    if isinstance(w, Fraction):
        return w
    if isinstance(w, str):
        try:
            return Fraction(w.strip()) if "/" in w else float(w)
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecError(f"bad weight {w!r}") from exc
    if isinstance(w, Real):
        return float(w)
    raise SpecError(f"bad weight {w!r}")


def discrete(masses: dict) -> DistributionSpec:
    """Finite discrete law from a ``{value: probability}`` mapping."""
    if len(masses) == 1:
        return Atom(float(next(iter(masses))))
    return Mixture(tuple((w, Atom(float(v))) for v, w in masses.items()))


def spike_uniform(p: Weight, half_width: float = 1.0) -> DistributionSpec:
    """Atom at zero with mass ``1 - p`` plus ``Uniform(-h, h)`` with mass ``p``."""
    p = _parse_weight(p)
    if p == 1:
        return Uniform(-half_width, half_width)
    return Mixture(((1 - p, Atom(0.0)), (p, Uniform(-half_width, half_width))))


# --------------------------------------------------------------------------
# moments


@dataclass(frozen=True)
class MomentSummary:
    mean: float
    variance: float  # math.inf when the second moment diverges
    support: tuple

    @property
    def sd(self) -> float:
        return math.sqrt(self.variance)

    @property
    def finite_variance(self) -> bool:
        return math.isfinite(self.variance)


def support(spec: DistributionSpec) -> tuple:
    """Smallest closed interval ``(lower, upper)`` carrying all the mass."""
    if isinstance(spec, Atom):
        return (spec.value, spec.value)
    if isinstance(spec, Uniform):
        return (spec.lo, spec.hi)
    if isinstance(spec, Mixture):
        bounds = [support(d) for w, d in spec.components if w > 0]
        return (min(b[0] for b in bounds), max(b[1] for b in bounds))
    if isinstance(spec, Stable) and spec.skew == ONE_SIDED:
        return (0.0, math.inf)
    if isinstance(spec, Truncated):
        lo, hi = support(spec.base)
        a = spec.threshold
        lo, hi = max(lo, -a), min(hi, a)
        if lo > hi:
            return (0.0, 0.0)
        return (min(lo, 0.0), max(hi, 0.0))
    return (-math.inf, math.inf)


def _raw_moments(spec: DistributionSpec) -> tuple[float, float]:
    """(E X, E X^2); nan for an undefined mean, inf for a divergent moment."""
    if isinstance(spec, Atom):
        return spec.value, spec.value ** 2
    if isinstance(spec, Uniform):
        lo, hi = spec.lo, spec.hi
        return (lo + hi) / 2, (lo * lo + lo * hi + hi * hi) / 3
    if isinstance(spec, Normal):
        return spec.mean, spec.mean ** 2 + spec.sd ** 2
    if isinstance(spec, Mixture):
        m1 = m2 = 0.0
        for w, d in spec.components:
            if w == 0:
                continue
            a, b = _raw_moments(d)
            m1 += float(w) * a
            m2 += float(w) * b
        return m1, m2
    if isinstance(spec, Stable):
        if spec.skew == ONE_SIDED:
            return math.inf, math.inf
        return (0.0 if spec.alpha > 1 else math.nan), math.inf
    if isinstance(spec, ParetoScaleQuotient):
        if spec.shifted:
            # E[(A + 1)^-2] = alpha / (alpha + 2)
            return 0.0, spec.alpha / (spec.alpha + 2)
        # E[1/A] diverges at a = 0, so not even the mean exists
        return math.nan, math.inf
    if isinstance(spec, Truncated):
        _, m1, m2 = _partial_moments(spec.base, -spec.threshold, spec.threshold)
        return m1, m2
    raise SpecError(f"not a distribution spec: {spec!r}")


def moments(spec: DistributionSpec) -> MomentSummary:
    """Mean, variance and support of ``spec``.

    Mixture variance follows the law of total variance; heavy-tailed
    variants report an infinite variance.
    """
    m1, m2 = _raw_moments(spec)
    if math.isinf(m2) or math.isnan(m1):
        var = math.inf
    elif isinstance(spec, (Normal, Uniform, Atom)):
        var = _exact_variance(spec)
    elif isinstance(spec, Mixture):
        parts = [(float(w), moments(d)) for w, d in spec.components if w != 0]
        var = sum(w * (m.variance + (m.mean - m1) ** 2) for w, m in parts)
    else:
        var = max(m2 - m1 * m1, 0.0)
    return MomentSummary(m1, var, support(spec))


def _exact_variance(spec) -> float:
    if isinstance(spec, Normal):
        return spec.sd ** 2
    if isinstance(spec, Uniform):
        return (spec.hi - spec.lo) ** 2 / 12
    return 0.0


def _normal_partial(mu: float, sd: float, lo: float, hi: float) -> tuple[float, float, float]:
    a, b = (lo - mu) / sd, (hi - mu) / sd
    mass = _normal_interval(a, b)
    pa = 0.0 if math.isinf(a) else math.exp(-a * a / 2) / math.sqrt(2 * math.pi)
    pb = 0.0 if math.isinf(b) else math.exp(-b * b / 2) / math.sqrt(2 * math.pi)
    z1 = pa - pb
    z2 = mass + (0.0 if math.isinf(a) else a * pa) - (0.0 if math.isinf(b) else b * pb)
    return mass, mu * mass + sd * z1, mu * mu * mass + 2 * mu * sd * z1 + sd * sd * z2


def _normal_interval(a: float, b: float) -> float:
    # P{a < Z < b} evaluated on the side with the smaller tails
    if a > 0:
        return special.ndtr(-a) - special.ndtr(-b)
    return special.ndtr(b) - special.ndtr(a)


def _partial_moments(spec: DistributionSpec, lo: float, hi: float) -> tuple[float, float, float]:
    """(P, E[X; .], E[X^2; .]) restricted to the open interval ``(lo, hi)``."""
    if isinstance(spec, Atom):
        v = spec.value
        return (1.0, v, v * v) if lo < v < hi else (0.0, 0.0, 0.0)
    if isinstance(spec, Uniform):
        a, b = max(lo, spec.lo), min(hi, spec.hi)
        if a >= b:
            return 0.0, 0.0, 0.0
        width = spec.hi - spec.lo
        return (b - a) / width, (b * b - a * a) / (2 * width), (b ** 3 - a ** 3) / (3 * width)
    if isinstance(spec, Normal):
        return _normal_partial(spec.mean, spec.sd, lo, hi)
    if isinstance(spec, Mixture):
        acc = np.zeros(3)
        for w, d in spec.components:
            if w > 0:
                acc += float(w) * np.array(_partial_moments(d, lo, hi))
        return tuple(float(v) for v in acc)
    if isinstance(spec, Truncated):
        a = spec.threshold
        inner_lo, inner_hi = max(lo, -a), min(hi, a)
        mass = m1 = m2 = 0.0
        if inner_lo < inner_hi:
            mass, m1, m2 = _partial_moments(spec.base, inner_lo, inner_hi)
        if lo < 0 < hi:
            mass += _tail_mass(spec.base, a)
        return mass, m1, m2
    if isinstance(spec, Stable) and spec.skew == SYMMETRIC and _is_cauchy(spec):
        # standard Cauchy: density 1/(pi (1 + x^2))
        if math.isinf(lo) or math.isinf(hi):
            raise UnsupportedSpecError("Cauchy moments over unbounded intervals diverge")
        mass = (math.atan(hi) - math.atan(lo)) / math.pi
        m1 = (math.log1p(hi * hi) - math.log1p(lo * lo)) / (2 * math.pi)
        m2 = (hi - lo) / math.pi - mass
        return mass, m1, m2
    raise UnsupportedSpecError(f"partial moments unavailable for {type(spec).__name__}")


def _is_cauchy(spec: Stable) -> bool:
    return spec.skew == SYMMETRIC and spec.alpha == 1.0


def _tail_mass(spec: DistributionSpec, a: float) -> float:
    """P{|X| >= a}."""
    return prob_le(spec, -a) + prob_ge(spec, a)


# --------------------------------------------------------------------------
# cdf and tail probabilities


def cdf(spec: DistributionSpec, x: float) -> float:
    """P{X <= x}."""
    return prob_le(spec, x)


def prob_le(spec: DistributionSpec, x: float) -> float:
    """P{X <= x}, computed from the lower tail."""
    return _lower(spec, float(x), closed=True)


def prob_lt(spec: DistributionSpec, x: float) -> float:
    """P{X < x}."""
    return _lower(spec, float(x), closed=False)


def prob_ge(spec: DistributionSpec, x: float) -> float:
    """P{X >= x}, computed from the upper tail."""
    return _upper(spec, float(x), closed=True)


def prob_gt(spec: DistributionSpec, x: float) -> float:
    """P{X > x}."""
    return _upper(spec, float(x), closed=False)


def _lower(spec, x: float, closed: bool) -> float:
    if isinstance(spec, Atom):
        return 1.0 if (x >= spec.value if closed else x > spec.value) else 0.0
    if isinstance(spec, Uniform):
        return min(1.0, max(0.0, (x - spec.lo) / (spec.hi - spec.lo)))
    if isinstance(spec, Normal):
        return float(special.ndtr((x - spec.mean) / spec.sd))
    if isinstance(spec, Mixture):
        return math.fsum(float(w) * _lower(d, x, closed) for w, d in spec.components if w > 0)
    if isinstance(spec, Stable):
        if _is_cauchy(spec):
            return 0.5 + math.atan(x) / math.pi if math.isfinite(x) else float(x > 0)
        raise UnsupportedSpecError(f"cdf unavailable for stable law with alpha={spec.alpha}")
    if isinstance(spec, ParetoScaleQuotient):
        from .quadrature import DEFAULT_SETTINGS, quotient_cdf
        return quotient_cdf(spec.alpha, x, DEFAULT_SETTINGS, spec.shifted)
    if isinstance(spec, Truncated):
        a = spec.threshold
        # mass of the base strictly inside (-a, min(x, a)) or up to x inclusive
        if x <= -a:
            inner = 0.0
        elif x >= a:
            inner = 1.0 - _tail_mass(spec.base, a)
        else:
            inner = _lower(spec.base, x, closed) - prob_le(spec.base, -a)
        at_zero = _tail_mass(spec.base, a) if (x >= 0 if closed else x > 0) else 0.0
        return min(1.0, max(0.0, inner + at_zero))
    raise SpecError(f"not a distribution spec: {spec!r}")


def _upper(spec, x: float, closed: bool) -> float:
    if isinstance(spec, Atom):
        return 1.0 if (spec.value >= x if closed else spec.value > x) else 0.0
    if isinstance(spec, Uniform):
        return min(1.0, max(0.0, (spec.hi - x) / (spec.hi - spec.lo)))
    if isinstance(spec, Normal):
        return float(special.ndtr((spec.mean - x) / spec.sd))
    if isinstance(spec, Mixture):
        return math.fsum(float(w) * _upper(d, x, closed) for w, d in spec.components if w > 0)
    if isinstance(spec, Stable):
        if _is_cauchy(spec):
            return 0.5 - math.atan(x) / math.pi if math.isfinite(x) else float(x < 0)
        raise UnsupportedSpecError(f"cdf unavailable for stable law with alpha={spec.alpha}")
    if isinstance(spec, ParetoScaleQuotient):
        from .quadrature import DEFAULT_SETTINGS, quotient_cdf
        return quotient_cdf(spec.alpha, -x, DEFAULT_SETTINGS, spec.shifted)
    if isinstance(spec, Truncated):
        a = spec.threshold
        if x >= a:
            inner = 0.0
        elif x <= -a:
            inner = 1.0 - _tail_mass(spec.base, a)
        else:
            inner = _upper(spec.base, x, closed) - prob_ge(spec.base, a)
        at_zero = _tail_mass(spec.base, a) if (x <= 0 if closed else x < 0) else 0.0
        return min(1.0, max(0.0, inner + at_zero))
    raise SpecError(f"not a distribution spec: {spec!r}")


def atom_mass(spec: DistributionSpec, lo: float, hi: float) -> float:
    """Total mass of point masses located in the closed interval ``[lo, hi]``."""
    if isinstance(spec, Atom):
        return 1.0 if lo <= spec.value <= hi else 0.0
    if isinstance(spec, Mixture):
        return math.fsum(float(w) * atom_mass(d, lo, hi) for w, d in spec.components if w > 0)
    if isinstance(spec, Truncated):
        a = spec.threshold
        inner = atom_mass(spec.base, max(lo, -a), min(hi, a)) if max(lo, -a) <= min(hi, a) else 0.0
        # atoms of the base sitting exactly on +-a were moved to zero
        inner -= atom_mass(spec.base, a, a) if lo <= a <= hi else 0.0
        inner -= atom_mass(spec.base, -a, -a) if lo <= -a <= hi else 0.0
        if lo <= 0 <= hi:
            inner += _tail_mass(spec.base, a)
        return max(inner, 0.0)
    return 0.0


def has_cdf(spec: DistributionSpec) -> bool:
    if isinstance(spec, Stable):
        return _is_cauchy(spec)
    if isinstance(spec, Mixture):
        return all(has_cdf(d) for w, d in spec.components if w > 0)
    if isinstance(spec, Truncated):
        return has_cdf(spec.base)
    return True


# --------------------------------------------------------------------------
# sampling


def pareto_scale_draws(alpha: float, n: int, rng: RngState | int | None = None) -> np.ndarray:
    """Draws of ``A`` with density ``alpha / (a + 1) ** (alpha + 1)`` on ``[0, inf)``.

    Inverse cdf: ``A = u ** (-1/alpha) - 1`` with ``u`` uniform on (0, 1].
    """
    if not alpha > 0:
        raise SpecError("Pareto index must be positive")
    rng = as_rng(rng)
    u = 1.0 - rng.random(n)
    return u ** (-1.0 / alpha) - 1.0


def sample(spec: DistributionSpec, n: int, rng: RngState | int | None = None) -> np.ndarray:
    """Draw ``n`` i.i.d. observations from ``spec``."""
    if int(n) < 1:
        raise SpecError("sample size must be >= 1")
    return _sample(spec, int(n), as_rng(rng))


def _sample(spec, n: int, rng: RngState) -> np.ndarray:
    if n == 0:
        return np.empty(0)
    if isinstance(spec, Atom):
        return np.full(n, float(spec.value))
    if isinstance(spec, Uniform):
        return rng.uniform(spec.lo, spec.hi, n)
    if isinstance(spec, Normal):
        return rng.normal(spec.mean, spec.sd, n)
    if isinstance(spec, Mixture):
        weights = spec.weights
        idx = rng.choice(len(weights), size=n, p=weights / weights.sum())
        out = np.empty(n)
        for j, (_, comp) in enumerate(spec.components):
            mask = idx == j
            out[mask] = _sample(comp, int(mask.sum()), rng)
        return out
    if isinstance(spec, Stable):
        return sample_stable(spec.params, n, rng)
    if isinstance(spec, ParetoScaleQuotient):
        scale = pareto_scale_draws(spec.alpha, n, rng)
        scale = scale + 1.0 if spec.shifted else np.maximum(scale, QUOTIENT_SCALE_FLOOR)
        return rng.standard_normal(n) / scale
    if isinstance(spec, Truncated):
        x = _sample(spec.base, n, rng)
        x[np.abs(x) >= spec.threshold] = 0.0
        return x
    raise SpecError(f"not a distribution spec: {spec!r}")


# --------------------------------------------------------------------------
# transforms


def mirror(spec: DistributionSpec) -> DistributionSpec:
    """Law of ``-X``."""
    if isinstance(spec, Atom):
        return Atom(-spec.value)
    if isinstance(spec, Uniform):
        return Uniform(-spec.hi, -spec.lo)
    if isinstance(spec, Normal):
        return Normal(-spec.mean, spec.sd)
    if isinstance(spec, Mixture):
        return Mixture(tuple((w, mirror(d)) for w, d in spec.components))
    if isinstance(spec, Truncated):
        return Truncated(mirror(spec.base), spec.threshold)
    if isinstance(spec, Stable) and spec.skew == ONE_SIDED:
        raise UnsupportedSpecError("mirror of a one-sided stable law is not representable")
    return spec


def is_symmetric(spec: DistributionSpec) -> bool:
    """Structural check that ``X`` and ``-X`` have the same law."""
    if isinstance(spec, Atom):
        return spec.value == 0
    if isinstance(spec, Uniform):
        return spec.lo == -spec.hi
    if isinstance(spec, Normal):
        return spec.mean == 0
    if isinstance(spec, Stable):
        return spec.skew == SYMMETRIC
    if isinstance(spec, ParetoScaleQuotient):
        return True
    if isinstance(spec, Truncated):
        return is_symmetric(spec.base)
    if isinstance(spec, Mixture):
        pending = [(float(w), d) for w, d in spec.components if w > 0 and not is_symmetric(d)]
        while pending:
            w, d = pending.pop()
            target = mirror(d)
            for i, (w2, d2) in enumerate(pending):
                if d2 == target and abs(w2 - w) <= WEIGHT_SUM_TOL:
                    del pending[i]
                    break
            else:
                return False
        return True
    return False


def affine(spec: DistributionSpec, scale: float, shift: float = 0.0) -> DistributionSpec:
    """Law of ``scale * X + shift`` for the variants where it is representable."""
    if scale == 0:
        raise SpecError("affine scale must be nonzero")
    if isinstance(spec, Atom):
        return Atom(scale * spec.value + shift)
    if isinstance(spec, Uniform):
        lo, hi = sorted((scale * spec.lo + shift, scale * spec.hi + shift))
        return Uniform(lo, hi)
    if isinstance(spec, Normal):
        return Normal(scale * spec.mean + shift, abs(scale) * spec.sd)
    if isinstance(spec, Mixture):
        return Mixture(tuple((w, affine(d, scale, shift)) for w, d in spec.components))
    if isinstance(spec, Truncated) and shift == 0:
        return Truncated(affine(spec.base, scale), abs(scale) * spec.threshold)
    raise UnsupportedSpecError(f"affine image of {type(spec).__name__} is not representable")


def truncate(spec: DistributionSpec, kappa: float, threshold: float | None = None) -> Truncated:
    """Keep ``spec`` on ``{|x| < threshold}`` and move the rest of the mass to 0.

    The threshold must exceed ``kappa * sd``; it defaults to twice that.
    """
    if not kappa > 1:
        raise SpecError(f"kappa must exceed 1, got {kappa}")
    if not is_symmetric(spec):
        raise SpecError("truncation requires a law symmetric about 0")
    m = moments(spec)
    if not m.finite_variance:
        raise SpecError("truncation requires finite variance")
    level = kappa * m.sd
    if threshold is None:
        threshold = 2 * level
    if not threshold > level:
        raise SpecError(f"threshold {threshold} must exceed kappa * sd = {level}")
    return Truncated(spec, float(threshold))


# --------------------------------------------------------------------------
# JSON


def spec_to_dict(spec: DistributionSpec) -> dict:
    if isinstance(spec, Atom):
        return {"type": "atom", "value": spec.value}
    if isinstance(spec, Uniform):
        return {"type": "uniform", "lo": spec.lo, "hi": spec.hi}
    if isinstance(spec, Normal):
        return {"type": "normal", "mean": spec.mean, "sd": spec.sd}
    if isinstance(spec, Mixture):
        return {"type": "mixture", "components": [
            {"weight": str(w) if isinstance(w, Fraction) else w, "dist": spec_to_dict(d)}
            for w, d in spec.components
        ]}
    if isinstance(spec, Stable):
        return {"type": "stable", "alpha": spec.alpha, "skew": spec.skew}
    if isinstance(spec, ParetoScaleQuotient):
        doc = {"type": "pareto_scale_quotient", "alpha": spec.alpha}
        if spec.shifted:
            doc["shifted"] = True
        return doc
    if isinstance(spec, Truncated):
        return {"type": "truncated", "base": spec_to_dict(spec.base), "threshold": spec.threshold}
    raise SpecError(f"not a distribution spec: {spec!r}")


def spec_from_dict(doc: dict) -> DistributionSpec:
    if not isinstance(doc, dict) or "type" not in doc:
        raise SpecError(f"spec document needs a 'type' field: {doc!r}")
    kind = str(doc["type"]).lower()
    try:
        if kind == "atom":
            return Atom(float(doc["value"]))
        if kind == "uniform":
            return Uniform(float(doc["lo"]), float(doc["hi"]))
        if kind == "normal":
            return Normal(float(doc.get("mean", 0.0)), float(doc.get("sd", 1.0)))
        if kind == "mixture":
            return Mixture(tuple((c["weight"], spec_from_dict(c["dist"])) for c in doc["components"]))
        if kind == "stable":
            return Stable(float(doc["alpha"]), doc.get("skew", SYMMETRIC))
        if kind in ("pareto_scale_quotient", "quotient"):
            return ParetoScaleQuotient(float(doc["alpha"]), bool(doc.get("shifted", False)))
        if kind == "truncated":
            return Truncated(spec_from_dict(doc["base"]), float(doc["threshold"]))
    except (KeyError, TypeError) as exc:
        raise SpecError(f"malformed {kind} spec: {doc!r}") from exc
    raise SpecError(f"unknown spec type {doc['type']!r}; expected one of "
                    "atom, uniform, normal, mixture, stable, pareto_scale_quotient, truncated")


def loads_spec(text: str) -> DistributionSpec:
    try:
        return spec_from_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec is not valid JSON: {exc}") from exc


def dumps_spec(spec: DistributionSpec, **kwargs) -> str:
    return json.dumps(spec_to_dict(spec), **kwargs)


def load_spec(path) -> DistributionSpec:
    with open(path, encoding="utf-8") as fh:
        return loads_spec(fh.read())


__all__ = [
    "Atom", "Uniform", "Normal", "Mixture", "Stable", "ParetoScaleQuotient", "Truncated",
    "DistributionSpec", "MomentSummary", "SKEWS",
    "discrete", "spike_uniform", "moments", "support", "cdf", "prob_le", "prob_lt",
    "prob_ge", "prob_gt", "atom_mass", "has_cdf", "sample", "pareto_scale_draws", "mirror",
    "is_symmetric", "affine", "truncate", "spec_to_dict", "spec_from_dict",
    "loads_spec", "dumps_spec", "load_spec",
]
