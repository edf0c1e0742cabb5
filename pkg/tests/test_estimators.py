import numpy as np
import pytest
from sklearn.base import clone

from tailgauge import distributions as d
from tailgauge.errors import DegenerateSampleError, SpecError
from tailgauge.estimators import HillTailIndex, KappaOutlierDetector, check_univariate
from tailgauge.outlier_stats import empirical_pn, flag_outliers, hill_tail_index


def test_params_and_clone():
    det = KappaOutlierDetector(kappa=3)
    assert det.get_params() == {"kappa": 3}
    assert clone(det).set_params(kappa=4).kappa == 4
    assert HillTailIndex(k_order=50).get_params() == {"k_order": 50}


def test_fit_predict_matches_flag_outliers(fig2):
    x = d.sample(fig2, 5000, 0)
    labels = KappaOutlierDetector(5).fit_predict(x.reshape(-1, 1))
    assert np.flatnonzero(labels == -1).tolist() == flag_outliers(x, 5)
    assert set(labels) <= {-1, 1}


def test_fitted_attributes(fig2):
    x = d.sample(fig2, 5000, 1)
    det = KappaOutlierDetector(5).fit(x)
    assert det.location_ == pytest.approx(x.mean())
    assert det.scale_ == pytest.approx(x.std())
    assert det.outlier_fraction_ == empirical_pn(x, 5).estimate
    assert det.n_features_in_ == 1 and det.n_samples_ == 5000


def test_scores_and_decision():
    det = KappaOutlierDetector(1).fit([1, -1, 0, 0])
    z = np.abs(np.array([2.0, 0.0])) / np.sqrt(0.5)
    assert det.score_samples([2.0, 0.0]) == pytest.approx(-z)
    assert det.decision_function([2.0, 0.0]) == pytest.approx(1 - z)
    assert det.predict([2.0, 0.0]).tolist() == [-1, 1]


def test_unfitted_predict_raises():
    from sklearn.exceptions import NotFittedError
    with pytest.raises(NotFittedError):
        KappaOutlierDetector().predict([1.0])


def test_validation():
    with pytest.raises(ValueError):
        check_univariate(np.zeros((5, 2)))
    with pytest.raises(DegenerateSampleError):
        KappaOutlierDetector().fit([2.0, 2.0, 2.0])
    with pytest.raises(SpecError):
        KappaOutlierDetector(kappa=-1).fit([1.0, 2.0])
    with pytest.raises(ValueError):
        KappaOutlierDetector().fit([1.0, np.nan])


def test_hill_estimator_wrapper():
    x = np.random.default_rng(2).standard_t(3, 10_000)
    est = HillTailIndex().fit(x)
    assert est.k_order_ == 100
    assert est.tail_index_ == hill_tail_index(x, 100)
    assert HillTailIndex(k_order=500).fit(x).tail_index_ == pytest.approx(3, abs=0.8)
