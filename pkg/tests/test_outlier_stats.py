import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import stats

from tailgauge import distributions as d
from tailgauge import outlier_stats as o
from tailgauge.errors import DegenerateSampleError, SpecError, UnsupportedSpecError
from tailgauge.experiments import theorem1_fractions
from tailgauge.stable import StableParams, sample_stable

from conftest import symmetric_corpus

FIG1_P5 = 0.0147510


def test_empirical_pn_hand_example():
    est = o.empirical_pn([1, -1, 0, 0], 1)
    assert (est.estimate, est.flagged, est.n, est.mode) == (0.5, 2, 4, o.EMPIRICAL)
    assert est.std_error == pytest.approx(math.sqrt(0.25 / 4))


def test_flag_outliers_hand_example():
    assert o.flag_outliers([1, -1, 0, 0], 1) == [0, 1]


def test_plug_in_sd_uses_one_over_n():
    # with 1/(n-1) the distances would be 1.22 and a level of 1.3 would flag nothing
    assert o.flag_outliers([1, -1, 0, 0], 1.3) == [0, 1]


@pytest.mark.parametrize("data", [[3.0, 3.0, 3.0], [1.0], [], [1.0, math.nan, 2.0]])
def test_degenerate_samples_rejected(data):
    with pytest.raises(DegenerateSampleError):
        o.empirical_pn(data, 2)


@given(st.lists(st.floats(-1e6, 1e6), min_size=2, max_size=200), st.floats(0, 20))
def test_estimate_record_invariants(data, kappa):
    try:
        est = o.empirical_pn(data, kappa)
    except DegenerateSampleError:
        return
    assert 0 <= est.flagged <= est.n
    assert est.estimate == est.flagged / est.n
    assert est.std_error >= 0


def test_exact_examples(fig1):
    assert o.exact_outlier_prob(d.discrete({-1.0: 0.02, 0.0: 0.96, 1.0: 0.02}), 4).estimate == 0.04
    # (4/75)(1 - 5 sigma) with sigma^2 = 4.71/225
    oracle = 4 / 75 * (1 - 5 * math.sqrt(4.71 / 225))
    assert o.exact_outlier_prob(fig1, 5).estimate == pytest.approx(oracle, abs=1e-15)
    assert o.exact_outlier_prob(fig1, 5).estimate == pytest.approx(FIG1_P5, abs=1e-6)


def test_exact_normal_tail(fig2):
    assert o.exact_outlier_prob(d.Normal(), 2).estimate == pytest.approx(2 * stats.norm.sf(2), rel=1e-14)
    sd = math.sqrt(4 / 75 + 71 / 75 * 0.01)
    oracle = 2 * (4 / 75 * stats.norm.sf(5 * sd) + 71 / 75 * stats.norm.sf(50 * sd))
    assert o.exact_outlier_prob(fig2, 5).estimate == pytest.approx(oracle, rel=1e-12)
    assert o.exact_outlier_prob(fig2, 5).estimate == pytest.approx(0.011211, abs=1e-5)


@pytest.mark.parametrize("spec, error", [
    (d.Stable(1.5), UnsupportedSpecError),
    (d.ParetoScaleQuotient(3), UnsupportedSpecError),
    (d.Atom(2.0), DegenerateSampleError),
])
def test_exact_rejections(spec, error):
    with pytest.raises(error):
        o.exact_outlier_prob(spec, 2)


@pytest.mark.slow
def test_monte_carlo_examples(fig1):
    n = 1_000_000
    est = o.mc_outlier_prob(fig1, 5, n, 1)
    assert est.mode == o.MONTE_CARLO
    assert abs(est.estimate - FIG1_P5) <= 4 * math.sqrt(FIG1_P5 * (1 - FIG1_P5) / n)
    assert o.mc_outlier_prob(d.Normal(), 5, n, 2).estimate <= 5e-6


def test_monte_carlo_point_mass():
    with pytest.raises(DegenerateSampleError):
        o.mc_outlier_prob(d.Atom(0.0), 5, 1000, 0)


@pytest.mark.parametrize("a", [-3, 0.1, 7])
@pytest.mark.parametrize("b", [-5, 0, 12])
def test_affine_invariance_of_exact_probability(a, b):
    for name, spec in symmetric_corpus().items():
        if name.startswith("truncated_cauchy") or (name.startswith("truncated") and b != 0):
            continue  # no spec form: stable laws carry no scale, truncation is centred at zero
        for kappa in (1.5, 2, 3, 5):
            assert (o.exact_outlier_prob(d.affine(spec, a, b), kappa).estimate
                    == pytest.approx(o.exact_outlier_prob(spec, kappa).estimate, rel=1e-12, abs=1e-15)), name


def test_affine_image_of_scale_free_law_rejected():
    with pytest.raises(UnsupportedSpecError):
        d.affine(d.Truncated(d.Stable(1.0), 10.0), 2, 0)


def test_affine_invariance_keeps_boundary_atoms():
    spec = d.discrete({-1.0: 0.02, 0.0: 0.96, 1.0: 0.02})
    for a in (-3, 0.1, 7):
        for b in (-5, 0, 12):
            assert o.exact_outlier_prob(d.affine(spec, a, b), 5).estimate == 0.04


@pytest.mark.parametrize("a", [-3, 0.1, 7])
@pytest.mark.parametrize("b", [-5, 0, 12])
def test_affine_invariance_of_flags(fig2, a, b):
    x = d.sample(fig2, 5000, 3)
    assert o.flag_outliers(a * x + b, 5) == o.flag_outliers(x, 5)


@settings(deadline=None)
@given(st.lists(st.floats(-100, 100).filter(lambda v: v == 0 or abs(v) > 1e-6), min_size=3, max_size=50, unique=True),
       st.sampled_from([-3, 0.1, 7]), st.sampled_from([-5, 0, 12]))
def test_affine_invariance_of_flags_generated(data, a, b):
    x = np.array(data)
    try:
        z = o.standardized_distances(x)
    except DegenerateSampleError:
        return
    kappa = 1.5
    # skip levels that fall within rounding distance of an observation
    if np.any(np.abs(z - kappa) < 1e-9):
        return
    assert o.flag_outliers(a * x + b, kappa) == o.flag_outliers(x, kappa)


@pytest.mark.parametrize("kappa", [1.2, 2, 5, 10])
def test_chebyshev_dominance(corpus, kappa):
    for name, spec in corpus.items():
        assert o.exact_outlier_prob(spec, kappa).estimate <= min(1, 1 / kappa ** 2) + 1e-15, name


@pytest.mark.slow
@pytest.mark.parametrize("name, kappa", [("fig1_uniform_mixture", 3), ("normal", 2), ("spike_uniform_p0.12", 2)])
def test_monte_carlo_consistency(corpus, name, kappa):
    spec, n = corpus[name], 10_000
    p = o.exact_outlier_prob(spec, kappa).estimate
    band = 4 * math.sqrt(p * (1 - p) / n)
    hits = sum(abs(o.mc_outlier_prob(spec, kappa, n, seed).estimate - p) <= band for seed in range(500))
    assert hits >= 495


@pytest.mark.slow
@pytest.mark.parametrize("alpha", [0.8, 1.5])
def test_stable_outlier_rate_collapses(alpha):
    medians = [np.median(theorem1_fractions(alpha, 5, n, 200, 7, i)) for i, n in enumerate([100, 1000, 10_000])]
    assert medians[0] >= medians[1] >= medians[2]
    assert medians[2] < medians[0] / 2


def test_beta_test():
    v = o.beta_outlier_test(d.Normal(), 0, 0.01)
    assert v.exceedance_prob == 1.0 and not v.is_beta_outlier
    v = o.beta_outlier_test(d.Normal(), 3, 0.01)
    assert v.exceedance_prob == pytest.approx(2 * stats.norm.sf(3), rel=1e-14)
    assert v.is_beta_outlier
    assert o.BetaVerdict(1.0, 0.05, 0.05).is_beta_outlier


def test_beta_test_errors():
    with pytest.raises(UnsupportedSpecError):
        o.beta_outlier_test(d.Stable(1.5), 1, 0.1)
    with pytest.raises(SpecError):
        o.beta_outlier_test(d.Normal(), 1, 1.5)


def test_hill_on_pareto():
    a_plus_one = d.pareto_scale_draws(2.0, 100_000, np.random.default_rng(4)) + 1
    assert o.hill_tail_index(a_plus_one, 1000) == pytest.approx(2.0, abs=0.2)


def test_hill_on_normal():
    assert o.hill_tail_index(np.random.default_rng(5).standard_normal(100_000), 1000) > 3


@pytest.mark.parametrize("k", [2, 60])
def test_hill_order_limits(k):
    with pytest.raises(SpecError):
        o.hill_tail_index(np.arange(1.0, 101.0), k)


def test_hill_needs_positive_values():
    with pytest.raises(DegenerateSampleError):
        o.hill_tail_index(np.r_[np.zeros(95), 1.0, 2.0, 3.0, 4.0, 5.0], 10)


def test_ostensible_normal_mixture(fig2):
    report = o.ostensibility_report(d.sample(fig2, 5000, 0), 5)
    assert report.ostensible
    assert report.k_order == math.ceil(math.sqrt(5000))


def test_normal_not_ostensible():
    report = o.ostensibility_report(d.sample(d.Normal(), 5000, 0), 5)
    assert not report.ostensible
    assert report.outlier_rate <= report.rate_threshold


def test_stable_not_ostensible():
    x = sample_stable(StableParams(1.5), 100_000, 0)
    assert not o.ostensibility_report(x, 5).ostensible


def test_ostensibility_needs_hundred_points():
    with pytest.raises(SpecError):
        o.ostensibility_report(np.arange(50.0), 5)


def test_negative_kappa_rejected():
    with pytest.raises(SpecError):
        o.flag_outliers([1, 2, 3], -1)
