"""Exact frequentist evaluation of interval estimators.

Pointwise coverage and expected length come from enumerating the n + 1
possible outcomes: coverage(p) = sum over X of 1{p in I(X)} * P(X | p), with
closed-interval membership, and length likewise weights each interval's width
by the binomial pmf.  Binomial probabilities are assembled in log space.

Mean coverage integrates the coverage function against a Beta weight density
and has a closed form: integrating pmf * density over one interval is a
difference of regularized incomplete betas at shifted shapes, so the whole
integral is a finite sum of such differences.  ``MeanCoverageEvaluator`` keeps
the shape-dependent arrays cached so that a bisection solve can re-evaluate
cheaply as the level moves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

import numpy as np

from .intervals import (
    BinomialObservation,
    EstimatorSpec,
    Interval,
    bayes_beta,
    clopper_pearson,
    wald,
    wilson,
)
from .special import (
    ShapePair,
    _beta_quantile_array,
    _betainc_array,
    _log_beta_array,
    log_beta,
)

__all__ = [
    "CoveragePoint",
    "MeanCoverageQuery",
    "outcome_intervals",
    "interval_metrics",
    "exact_coverage",
    "expected_length",
    "mean_coverage",
    "MeanCoverageEvaluator",
]

ResolvedAlpha = Union[float, Sequence[float]]


@dataclass(frozen=True)
class CoveragePoint:
    """Exact coverage probability and expected length at a single p."""

    p: float
    coverage: float
    expected_length: float


@dataclass(frozen=True)
class MeanCoverageQuery:
    """Mean coverage of the level-alpha_prime Clopper-Pearson interval under a
    Beta weight density.

    ``weight`` is the Beta(r, s) shape pair.  With ``conditioning_x`` unset the
    weight density is that prior itself; with ``conditioning_x = X`` it is the
    posterior Beta(X + r, n - X + s) given X successes in the same n trials.
    """

    alpha_prime: float
    n: int
    weight: ShapePair
    conditioning_x: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if not 0.0 < self.alpha_prime < 1.0:
            raise ValueError(f"alpha_prime must lie strictly in (0, 1), got {self.alpha_prime}")
        if self.conditioning_x is not None and not 0 <= self.conditioning_x <= self.n:
            raise ValueError(f"conditioning_x must lie in [0, n], got {self.conditioning_x}")


@lru_cache(maxsize=1024)
def _log_binom_coeffs(n: int) -> np.ndarray:
    """ln C(n, k) for k = 0..n."""
    lg = [math.lgamma(k + 1) for k in range(n + 1)]
    total = math.lgamma(n + 1)
    return np.array([total - lg[k] - lg[n - k] for k in range(n + 1)])


def binom_pmf(n: int, p: float) -> np.ndarray:
    """Binomial pmf vector over k = 0..n, computed in log space."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if p == 0.0:
        out = np.zeros(n + 1)
        out[0] = 1.0
        return out
    if p == 1.0:
        out = np.zeros(n + 1)
        out[n] = 1.0
        return out
    k = np.arange(n + 1)
    log_pmf = _log_binom_coeffs(n) + k * math.log(p) + (n - k) * math.log1p(-p)
    return np.exp(log_pmf)


def _normalize_levels(n: int, resolved_alpha: ResolvedAlpha) -> tuple[float, ...]:
    if isinstance(resolved_alpha, (int, float)):
        return (float(resolved_alpha),) * (n + 1)
    levels = tuple(float(a) for a in resolved_alpha)
    if len(levels) != n + 1:
        raise ValueError(f"need one level per outcome: expected {n + 1} values, got {len(levels)}")
    return levels


@lru_cache(maxsize=512)
def _outcome_intervals_cached(spec: EstimatorSpec, n: int, levels: tuple[float, ...]) -> tuple[Interval, ...]:
    out = []
    for x in range(n + 1):
        obs = BinomialObservation(n, x)
        alpha = levels[x]
        if spec.method == "wald":
            iv = wald(obs, alpha)
        elif spec.method == "wilson":
            iv = wilson(obs, alpha)
        elif spec.method == "bayes_beta":
            iv = bayes_beta(obs, alpha, spec.prior)
        else:
            # clopper_pearson and both adjusted variants share the CP form;
            # the adjustment enters only through the level.
            iv = clopper_pearson(obs, alpha)
        out.append(iv)
    return tuple(out)


def outcome_intervals(spec: EstimatorSpec, n: int, resolved_alpha: ResolvedAlpha) -> tuple[Interval, ...]:
    """The realized interval for every outcome X = 0..n.

    ``resolved_alpha`` is the level actually used per outcome: the nominal
    alpha for uncorrected methods, the solved alpha' for prior-corrected ones,
    or a sequence of n + 1 per-outcome levels for posterior-corrected ones.
    """
    return _outcome_intervals_cached(spec, n, _normalize_levels(n, resolved_alpha))


def interval_metrics(intervals: Sequence[Interval], n: int, p: float) -> CoveragePoint:
    """Coverage and expected length at p of a family of per-outcome intervals."""
    if len(intervals) != n + 1:
        raise ValueError(f"expected {n + 1} intervals, got {len(intervals)}")
    pmf = binom_pmf(n, p)
    cover = 0.0
    length = 0.0
    for x, iv in enumerate(intervals):
        w = pmf[x]
        length += w * (iv.upper - iv.lower)
        if iv.lower <= p <= iv.upper:
            cover += w
    return CoveragePoint(p, cover, length)


def exact_coverage(spec: EstimatorSpec, n: int, p: float, resolved_alpha: ResolvedAlpha) -> float:
    """Exact coverage probability at p: the binomial mass of the outcomes whose
    realized interval contains p."""
    return interval_metrics(outcome_intervals(spec, n, resolved_alpha), n, p).coverage


def expected_length(spec: EstimatorSpec, n: int, p: float, resolved_alpha: ResolvedAlpha) -> float:
    """Expected interval length at p under the binomial outcome distribution."""
    return interval_metrics(outcome_intervals(spec, n, resolved_alpha), n, p).expected_length


class MeanCoverageEvaluator:
    """Closed-form mean coverage of Clopper-Pearson intervals at a movable level.

    For a Beta(w1, w2) weight density, the term for outcome Y is

        C(n, Y) * B(Y + w1, n - Y + w2) / B(w1, w2)
               * [I_{pU(Y)}(Y + w1, n - Y + w2) - I_{pL(Y)}(Y + w1, n - Y + w2)],

    where (pL, pU) are the CP endpoints at the queried level.  Everything that
    depends only on (n, w1, w2) is precomputed here; evaluating at a new level
    costs one batched quantile solve (warm-started from the previous call) and
    two batched incomplete-beta sweeps.
    """

    def __init__(self, n: int, w1: float, w2: float):
        if n < 1:
            raise ValueError(f"n must be a positive integer, got {n}")
        self.n = n
        y = np.arange(n + 1, dtype=float)
        shape_a = y + w1
        shape_b = n - y + w2
        self._shape_a = shape_a
        self._shape_b = shape_b
        self._ln_beta_shapes = _log_beta_array(shape_a, shape_b)
        self._coef = np.exp(_log_binom_coeffs(n) + self._ln_beta_shapes - log_beta(w1, w2))
        # Lower endpoints exist for X = 1..n: quantiles of Beta(X, n - X + 1).
        xs = np.arange(1, n + 1, dtype=float)
        self._q_shape_a = xs
        self._q_shape_b = n - xs + 1.0
        self._ln_beta_q = _log_beta_array(self._q_shape_a, self._q_shape_b)
        self._warm: Optional[np.ndarray] = None

    def __call__(self, alpha_prime: float) -> float:
        if not 0.0 < alpha_prime < 1.0:
            raise ValueError(f"alpha_prime must lie strictly in (0, 1), got {alpha_prime}")
        n = self.n
        half = alpha_prime / 2.0
        inner = _beta_quantile_array(half, self._q_shape_a, self._q_shape_b,
                                     x0=self._warm, ln_beta_ab=self._ln_beta_q)
        self._warm = inner
        p_lower = np.concatenate(([0.0], inner))
        # Upper endpoints by reflection: pU(Y) = 1 - pL(n - Y), exact at Y = n.
        p_upper = 1.0 - p_lower[::-1]
        i_hi = _betainc_array(p_upper, self._shape_a, self._shape_b, ln_beta_ab=self._ln_beta_shapes)
        i_lo = _betainc_array(p_lower, self._shape_a, self._shape_b, ln_beta_ab=self._ln_beta_shapes)
        return float(np.dot(self._coef, i_hi - i_lo))


def mean_coverage(query: MeanCoverageQuery) -> float:
    """Mean coverage per ``MeanCoverageQuery``: the coverage function of the
    level-alpha_prime Clopper-Pearson interval integrated against the Beta
    weight (prior, or posterior when ``conditioning_x`` is set)."""
    r, s = query.weight.a, query.weight.b
    if query.conditioning_x is None:
        w1, w2 = r, s
    else:
        w1, w2 = query.conditioning_x + r, query.n - query.conditioning_x + s
    return MeanCoverageEvaluator(query.n, w1, w2)(query.alpha_prime)
