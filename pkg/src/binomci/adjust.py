"""Bisection solver for the adjusted confidence level.

Mean coverage of the Clopper-Pearson interval is continuous and strictly
decreasing in the level, so the level alpha' at which it equals the nominal
target 1 - alpha is found by plain bisection on [alpha, upper].  The upper
bracket starts at min(0.5, 20 * alpha) and is doubled toward 0.999 until the
mean coverage there falls below the target.  When the coverage function is
flat at the tolerance scale, the midpoint of the final bracket is the
canonical answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .coverage import MeanCoverageEvaluator
from .intervals import BinomialObservation, Interval, adjusted_cp
from .special import ShapePair

__all__ = [
    "SolverConfig",
    "AdjustmentResult",
    "SolverError",
    "BracketError",
    "ConvergenceError",
    "solve_prior",
    "solve_posterior",
    "adjusted_interval",
    "resolve_levels",
]

_BRACKET_CAP = 0.999


class SolverError(Exception):
    """Base class for adjusted-level solver failures."""


class BracketError(SolverError):
    """No bracketing upper level exists below the cap."""


class ConvergenceError(SolverError):
    """Iteration budget exhausted before meeting the tolerance.

    ``best`` carries the closest iterate seen, so callers can still inspect it.
    """

    def __init__(self, message: str, best: "AdjustmentResult"):
        super().__init__(message)
        self.best = best

    def __reduce__(self):
        # Default exception pickling would drop ``best`` (it is not in args),
        # which matters when the error crosses a worker-process boundary.
        return type(self), (self.args[0], self.best)


@dataclass(frozen=True)
class SolverConfig:
    """Bisection controls.  ``tol`` bounds |mean coverage - (1 - alpha)| at the
    returned level; ``initial_upper`` of None means min(0.5, 20 * alpha)."""

    tol: float = 1e-8
    max_iterations: int = 200
    initial_upper: Optional[float] = None

    def __post_init__(self) -> None:
        if not 0.0 < self.tol < 0.01:
            raise ValueError(f"tol must lie in (0, 0.01), got {self.tol}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be positive, got {self.max_iterations}")
        if self.initial_upper is not None and not 0.0 < self.initial_upper < 1.0:
            raise ValueError(f"initial_upper must lie in (0, 1), got {self.initial_upper}")


@dataclass(frozen=True)
class AdjustmentResult:
    """Solved level alpha' with the mean coverage achieved there, the number of
    coverage evaluations spent, and the final bracket."""

    alpha_prime: float
    achieved_mean_coverage: float
    iterations: int
    bracket_low: float
    bracket_high: float


def _bisect_adjusted_level(coverage_at: Callable[[float], float], alpha: float,
                           config: SolverConfig) -> AdjustmentResult:
    """Bisection driver, generic over the coverage evaluator.

    ``coverage_at`` must be continuous and strictly decreasing on (0, 1).
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    target = 1.0 - alpha
    tol = config.tol
    evals = 0

    c_low = coverage_at(alpha)
    evals += 1
    if c_low < target - tol:
        raise ValueError(
            f"mean coverage at the nominal level is already below target "
            f"({c_low:.10f} < {target:.10f}); no adjustment applies")
    if abs(c_low - target) <= tol:
        return AdjustmentResult(alpha, c_low, evals, alpha, alpha)

    high = config.initial_upper if config.initial_upper is not None else min(0.5, 20.0 * alpha)
    if high <= alpha:
        high = min(_BRACKET_CAP, 0.5 * (alpha + 1.0))
    high = min(high, _BRACKET_CAP)
    c_high = coverage_at(high)
    evals += 1
    while c_high >= target - tol:
        if abs(c_high - target) <= tol:
            return AdjustmentResult(high, c_high, evals, alpha, high)
        if high >= _BRACKET_CAP:
            raise BracketError(
                f"mean coverage stays above {target} for every level up to {_BRACKET_CAP}")
        high = min(_BRACKET_CAP, 2.0 * high)
        c_high = coverage_at(high)
        evals += 1

    low = alpha
    guess = 0.5 * (low + high)
    best: Optional[AdjustmentResult] = None
    while evals < config.max_iterations:
        c_guess = coverage_at(guess)
        evals += 1
        result = AdjustmentResult(guess, c_guess, evals, low, high)
        if best is None or abs(c_guess - target) < abs(best.achieved_mean_coverage - target):
            best = result
        if abs(c_guess - target) <= tol:
            return result
        if c_guess > target:
            low = guess
        else:
            high = guess
        nxt = 0.5 * (low + high)
        if nxt == guess or not low < nxt < high:
            # The bracket has collapsed to float resolution without meeting tol.
            raise ConvergenceError(
                f"bracket collapsed at level {guess} with |coverage - target| = "
                f"{abs(c_guess - target):.3e} > tol {tol}", best)
        guess = nxt
    raise ConvergenceError(
        f"no level within tolerance after {evals} coverage evaluations", best)


def solve_prior(alpha: float, n: int, prior: ShapePair,
                config: SolverConfig = SolverConfig()) -> AdjustmentResult:
    """Adjusted level calibrated so that mean coverage under the Beta prior
    itself equals 1 - alpha."""
    return _solve_prior_cached(alpha, n, prior, config)


@lru_cache(maxsize=4096)
def _solve_prior_cached(alpha: float, n: int, prior: ShapePair,
                        config: SolverConfig) -> AdjustmentResult:
    evaluator = MeanCoverageEvaluator(n, prior.a, prior.b)
    return _bisect_adjusted_level(evaluator, alpha, config)


def solve_posterior(alpha: float, n: int, x: int, prior: ShapePair,
                    config: SolverConfig = SolverConfig()) -> AdjustmentResult:
    """Adjusted level calibrated against the posterior Beta(x + r, n - x + s),
    conditioning the correction on the observed count."""
    if not 0 <= x <= n:
        raise ValueError(f"x must lie in [0, n], got x={x}, n={n}")
    return _solve_posterior_cached(alpha, n, x, prior, config)


@lru_cache(maxsize=4096)
def _solve_posterior_cached(alpha: float, n: int, x: int, prior: ShapePair,
                            config: SolverConfig) -> AdjustmentResult:
    evaluator = MeanCoverageEvaluator(n, x + prior.a, n - x + prior.b)
    return _bisect_adjusted_level(evaluator, alpha, config)


def adjusted_interval(alpha: float, obs: BinomialObservation, prior: ShapePair,
                      mode: str = "prior",
                      config: SolverConfig = SolverConfig()) -> tuple[Interval, AdjustmentResult]:
    """Solve for alpha' and return the Clopper-Pearson interval at that level.

    ``mode`` selects the calibration weight: "prior" uses the prior density,
    "posterior" conditions on the observed x.
    """
    if mode == "prior":
        result = solve_prior(alpha, obs.n, prior, config)
    elif mode == "posterior":
        result = solve_posterior(alpha, obs.n, obs.x, prior, config)
    else:
        raise ValueError(f"mode must be 'prior' or 'posterior', got {mode!r}")
    return adjusted_cp(obs, result.alpha_prime), result


def resolve_levels(method: str, alpha: float, n: int, prior: Optional[ShapePair],
                   config: SolverConfig = SolverConfig()):
    """The per-outcome level(s) a method actually uses at sample size n.

    Returns the nominal alpha for uncorrected methods, the solved scalar
    alpha' for the prior-corrected method, and a tuple of n + 1 per-outcome
    levels for the posterior-corrected one (solved per outcome; for symmetric
    priors the solve is reused across mirrored outcomes).
    """
    if method == "adjusted_cp_prior":
        if prior is None:
            raise ValueError("prior-corrected method requires a prior")
        return solve_prior(alpha, n, prior, config).alpha_prime
    if method == "adjusted_cp_posterior":
        if prior is None:
            raise ValueError("posterior-corrected method requires a prior")
        levels = [0.0] * (n + 1)
        symmetric = prior.a == prior.b
        for x in range(n + 1):
            if symmetric and x > n - x:
                levels[x] = levels[n - x]
            else:
                levels[x] = solve_posterior(alpha, n, x, prior, config).alpha_prime
        return tuple(levels)
    return alpha
