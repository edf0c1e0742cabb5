"""scikit-learn compatible wrappers around the sample-level functionals."""

from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator, OutlierMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .errors import DegenerateSampleError, SpecError
from .outlier_stats import hill_tail_index


def check_univariate(X) -> np.ndarray:
    """Validate ``X`` as one variable: shape ``(n,)`` or ``(n, 1)``; returns 1-D floats."""
    arr = check_array(X, ensure_2d=False, dtype=np.float64)
    if arr.ndim == 2:
        if arr.shape[1] != 1:
            raise ValueError(f"expected a single column, got shape {arr.shape}")
        arr = arr[:, 0]
    return arr


class KappaOutlierDetector(OutlierMixin, BaseEstimator):
    """Flag observations at least ``kappa`` standard deviations from the mean.

    ``fit`` stores the sample mean and the 1/n standard deviation;
    ``predict`` returns -1 for observations with ``|x - mean| / sd >= kappa``
    and 1 otherwise. ``fit_predict`` on a sample reproduces
    :func:`tailgauge.outlier_stats.flag_outliers`.

    Parameters
    ----------
    kappa : float, default=5.0
        Outlier level in units of the fitted standard deviation.

    Attributes
    ----------
    location_ : float
    scale_ : float
    outlier_fraction_ : float
        Fraction of the training sample flagged (the empirical ``p_n``).
    """

    def __init__(self, kappa: float = 5.0):
        self.kappa = kappa

    def fit(self, X, y=None):
        if not (self.kappa >= 0 and math.isfinite(self.kappa)):
            raise SpecError(f"kappa must be a nonnegative number, got {self.kappa}")
        x = check_univariate(X)
        if x.size < 2:
            raise DegenerateSampleError("need at least 2 observations")
        self.location_ = float(x.mean())
        self.scale_ = float(np.sqrt(np.mean((x - self.location_) ** 2)))
        if self.scale_ == 0:
            raise DegenerateSampleError("sample has zero spread; outlier level undefined")
        self.n_features_in_ = 1
        self.n_samples_ = x.size
        self.outlier_fraction_ = float(np.mean(self._distance(x) >= self.kappa))
        return self

    def _distance(self, x: np.ndarray) -> np.ndarray:
        return np.abs(x - self.location_) / self.scale_

    def score_samples(self, X) -> np.ndarray:
        """Negated standardized distance; lower means more outlying."""
        check_is_fitted(self)
        return -self._distance(check_univariate(X))

    def decision_function(self, X) -> np.ndarray:
        """``kappa - distance``; nonpositive values are outliers."""
        return self.kappa + self.score_samples(X)

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self)
        return np.where(self._distance(check_univariate(X)) >= self.kappa, -1, 1)


class HillTailIndex(BaseEstimator):
    """Hill estimator of the tail index of ``|X|``.

    Parameters
    ----------
    k_order : int or None, default=None
        Number of upper order statistics; ``ceil(sqrt(n))`` when None.
    """

    def __init__(self, k_order: int | None = None):
        self.k_order = k_order

    def fit(self, X, y=None):
        x = check_univariate(X)
        k = math.ceil(math.sqrt(x.size)) if self.k_order is None else int(self.k_order)
        self.tail_index_ = hill_tail_index(x, k)
        self.k_order_ = k
        self.n_features_in_ = 1
        return self
