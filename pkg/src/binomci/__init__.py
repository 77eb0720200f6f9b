"""Confidence intervals for a binomial proportion with exact coverage tools.

Provides the classical Wald, Wilson, Clopper-Pearson and Bayesian
equal-tailed intervals, exact (enumeration-based) coverage and length
evaluation, and a calibration solver that shrinks the Clopper-Pearson
interval until its mean coverage under a Beta weight hits the nominal target.
"""

from .adjust import (
    AdjustmentResult,
    BracketError,
    ConvergenceError,
    SolverConfig,
    SolverError,
    adjusted_interval,
    resolve_levels,
    solve_posterior,
    solve_prior,
)
from .coverage import (
    CoveragePoint,
    MeanCoverageEvaluator,
    MeanCoverageQuery,
    binom_pmf,
    exact_coverage,
    expected_length,
    interval_metrics,
    mean_coverage,
    outcome_intervals,
)
from .intervals import (
    METHODS,
    BinomialObservation,
    EstimatorSpec,
    Interval,
    adjusted_cp,
    bayes_beta,
    clopper_pearson,
    normal_quantile,
    wald,
    wilson,
)
from .report import GridCell, ReportConfig
from .special import ShapePair, beta_quantile, log_beta, reg_inc_beta

__version__ = "0.1.0"

__all__ = [
    "AdjustmentResult",
    "BinomialObservation",
    "BracketError",
    "ConvergenceError",
    "CoveragePoint",
    "EstimatorSpec",
    "GridCell",
    "Interval",
    "MeanCoverageEvaluator",
    "MeanCoverageQuery",
    "METHODS",
    "ReportConfig",
    "ShapePair",
    "SolverConfig",
    "SolverError",
    "adjusted_cp",
    "adjusted_interval",
    "bayes_beta",
    "beta_quantile",
    "binom_pmf",
    "clopper_pearson",
    "exact_coverage",
    "expected_length",
    "interval_metrics",
    "log_beta",
    "mean_coverage",
    "normal_quantile",
    "outcome_intervals",
    "resolve_levels",
    "solve_posterior",
    "solve_prior",
    "wald",
    "wilson",
    "__version__",
]
