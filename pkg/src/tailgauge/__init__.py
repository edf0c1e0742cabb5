"""Probability of level-kappa outliers: exact values, estimates and bounds."""

from .bounds import (BoundReport, bound_report, example1_spec, example2_maximizer,
                     example2_prob, example2_spec, gauss_bound, selberg_bound)
from .distributions import (Atom, Mixture, MomentSummary, Normal, ParetoScaleQuotient,
                            Stable, Truncated, Uniform, cdf, load_spec, moments, sample,
                            spec_from_dict, spec_to_dict, truncate)
from .errors import (DegenerateSampleError, InapplicableBoundError, NumericalError, SpecError,
                     TailgaugeError, UnsupportedSpecError)
from .estimators import HillTailIndex, KappaOutlierDetector
from .experiments import (ExperimentResult, fig4_exact_curve, run_fig1, run_fig2_fig3, run_fig4,
                          run_theorem1, run_theorem2_demo)
from .outlier_stats import (BetaVerdict, OutlierEstimate, beta_outlier_test, empirical_pn,
                            exact_outlier_prob, flag_outliers, hill_tail_index, mc_outlier_prob,
                            ostensibility_report)
from .quadrature import QuadratureSettings, quotient_cdf
from .rng import make_rng, substream
from .stable import StableParams, sample_stable, variance_growth_exponent

__version__ = "0.1.0"
