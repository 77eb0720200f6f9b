"""Confidence interval constructors for a binomial proportion.

All constructors take a (successes, trials) observation and a two-sided level
alpha and return a closed interval [lower, upper] inside [0, 1].  The
equal-tailed beta-quantile intervals compute their upper endpoint through the
reflection identity B(1 - q; a, b) = 1 - B(q; b, a), which makes the
(n, X) <-> (n, n - X) symmetry exact in floating point as well.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .special import ShapePair, beta_quantile

__all__ = [
    "Interval",
    "BinomialObservation",
    "EstimatorSpec",
    "METHODS",
    "normal_quantile",
    "wald",
    "wilson",
    "clopper_pearson",
    "bayes_beta",
    "adjusted_cp",
]

METHODS = (
    "wald",
    "wilson",
    "clopper_pearson",
    "bayes_beta",
    "adjusted_cp_prior",
    "adjusted_cp_posterior",
)

_PRIOR_METHODS = {"bayes_beta", "adjusted_cp_prior", "adjusted_cp_posterior"}


@dataclass(frozen=True)
class Interval:
    """A closed subinterval [lower, upper] of [0, 1]."""

    lower: float
    upper: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.lower <= self.upper <= 1.0):
            raise ValueError(f"invalid interval ({self.lower}, {self.upper})")

    @property
    def length(self) -> float:
        return self.upper - self.lower

    def contains(self, p: float) -> bool:
        return self.lower <= p <= self.upper


@dataclass(frozen=True)
class BinomialObservation:
    """X successes out of n trials."""

    n: int
    x: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if not 0 <= self.x <= self.n:
            raise ValueError(f"x must lie in [0, n], got x={self.x}, n={self.n}")


@dataclass(frozen=True)
class EstimatorSpec:
    """A named interval method together with its nominal level and, where the
    method calls for one, a Beta prior."""

    method: str
    nominal_alpha: float
    prior: Optional[ShapePair] = None

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if not 0.0 < self.nominal_alpha < 1.0:
            raise ValueError(f"nominal_alpha must lie in (0, 1), got {self.nominal_alpha}")
        if self.method in _PRIOR_METHODS:
            if self.prior is None:
                raise ValueError(f"method {self.method!r} requires a prior")
        elif self.prior is not None:
            raise ValueError(f"method {self.method!r} does not take a prior")


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")


# Coefficients of Acklam's rational approximation to the standard normal
# quantile (three-piece, |relative error| < 1.2e-9 before refinement).
_ACKLAM_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
             1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_ACKLAM_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
             6.680131188771972e+01, -1.328068155288572e+01)
_ACKLAM_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
             -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_ACKLAM_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
             3.754408661907416e+00)
_ACKLAM_LOW = 0.02425

_SQRT2 = math.sqrt(2.0)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def normal_quantile(q: float) -> float:
    """Standard normal quantile, rational approximation plus one Newton step
    against the erfc-based normal CDF.  Accurate to a few ulp."""
    if not 0.0 < q < 1.0:
        raise ValueError(f"q must lie in (0, 1), got {q}")
    a, b, c, d = _ACKLAM_A, _ACKLAM_B, _ACKLAM_C, _ACKLAM_D
    if q < _ACKLAM_LOW:
        t = math.sqrt(-2.0 * math.log(q))
        x = (((((c[0] * t + c[1]) * t + c[2]) * t + c[3]) * t + c[4]) * t + c[5]) / \
            ((((d[0] * t + d[1]) * t + d[2]) * t + d[3]) * t + 1.0)
    elif q <= 1.0 - _ACKLAM_LOW:
        t = q - 0.5
        r = t * t
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * t / \
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0)
    else:
        t = math.sqrt(-2.0 * math.log1p(-q))
        x = -(((((c[0] * t + c[1]) * t + c[2]) * t + c[3]) * t + c[4]) * t + c[5]) / \
            ((((d[0] * t + d[1]) * t + d[2]) * t + d[3]) * t + 1.0)
    # One Newton refinement: x -= (Phi(x) - q) / phi(x).
    err = 0.5 * math.erfc(-x / _SQRT2) - q
    x -= err * _SQRT_2PI * math.exp(0.5 * x * x)
    return x


def wald(obs: BinomialObservation, alpha: float) -> Interval:
    """Normal-approximation interval p_hat +/- z * sqrt(p_hat (1 - p_hat) / n),
    clamped to [0, 1].  Degenerates to a point at X = 0 and X = n."""
    _check_alpha(alpha)
    z = normal_quantile(1.0 - alpha / 2.0)
    p_hat = obs.x / obs.n
    half = z * math.sqrt(p_hat * (1.0 - p_hat) / obs.n)
    return Interval(max(0.0, p_hat - half), min(1.0, p_hat + half))


def wilson(obs: BinomialObservation, alpha: float) -> Interval:
    """Score interval: quadratic inversion of the normal test, never degenerate."""
    _check_alpha(alpha)
    z = normal_quantile(1.0 - alpha / 2.0)
    n, x = obs.n, obs.x
    z2 = z * z
    p_hat = x / n
    center = (x + z2 / 2.0) / (n + z2)
    half = z / (n + z2) * math.sqrt(p_hat * (1.0 - p_hat) * n + z2 / 4.0)
    lower = 0.0 if x == 0 else max(0.0, center - half)
    upper = 1.0 if x == n else min(1.0, center + half)
    return Interval(lower, upper)


def clopper_pearson(obs: BinomialObservation, alpha: float) -> Interval:
    """Exact equal-tailed interval from beta quantiles:

        lower = B(alpha/2; X, n - X + 1),   0 when X = 0,
        upper = B(1 - alpha/2; X + 1, n - X),   1 when X = n.
    """
    _check_alpha(alpha)
    n, x = obs.n, obs.x
    half = alpha / 2.0
    lower = 0.0 if x == 0 else beta_quantile(half, x, n - x + 1)
    upper = 1.0 if x == n else 1.0 - beta_quantile(half, n - x, x + 1)
    return Interval(lower, upper)


def bayes_beta(obs: BinomialObservation, alpha: float, prior: ShapePair) -> Interval:
    """Equal-tailed posterior credible interval under a Beta(r, s) prior:
    quantiles alpha/2 and 1 - alpha/2 of Beta(X + r, n - X + s)."""
    _check_alpha(alpha)
    a = obs.x + prior.a
    b = obs.n - obs.x + prior.b
    half = alpha / 2.0
    return Interval(beta_quantile(half, a, b), 1.0 - beta_quantile(half, b, a))


def adjusted_cp(obs: BinomialObservation, alpha_prime: float) -> Interval:
    """The coverage-adjusted interval: Clopper-Pearson evaluated at the
    adjusted level alpha_prime in place of the nominal alpha."""
    return clopper_pearson(obs, alpha_prime)
