"""Grid sweeps behind the CLI reports.

Turns the per-outcome interval machinery into tabular artifacts: the solved
adjusted-level table, coverage/length curves over a p grid, and win/lose/tie
comparison grids for a pair of methods.  All row assembly is deterministic so
identical inputs produce byte-identical files.
"""

from __future__ import annotations

import csv
import io
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .adjust import SolverConfig, SolverError, resolve_levels, solve_prior
from .coverage import _log_binom_coeffs, outcome_intervals
from .intervals import METHODS, _PRIOR_METHODS, EstimatorSpec
from .special import ShapePair

# Pseudo-method for the degenerate always-[0, 1] interval.  It never reaches
# the estimator layer; the sweeps special-case it.
FULL_METHOD = "full"
SWEEP_METHODS = METHODS + (FULL_METHOD,)

VERDICT_A = "A_wins"
VERDICT_B = "B_wins"
VERDICT_TIE = "tie"
VERDICTS = (VERDICT_A, VERDICT_B, VERDICT_TIE)

HEATMAP_METRICS = ("coverage", "length")

# The two-level-by-thirty-size layout of the published adjusted-level table.
TABLE_N_VALUES = tuple(range(5, 101, 5)) + tuple(range(110, 201, 10))
TABLE_ALPHA_VALUES = (0.05, 0.01)

ALPHA_TABLE_HEADER = ("n", "alpha", "alpha_prime")
CURVES_HEADER = ("method", "n", "p", "coverage", "expected_length")
HEATMAP_HEADER = ("n", "p", "metric_a", "metric_b", "verdict")


@dataclass(frozen=True)
class ReportConfig:
    """Grid and formatting knobs shared by the curve and comparison reports."""

    p_grid_count: int = 500
    p_min: float = 0.001
    p_max: float = 0.5
    n_list: tuple[int, ...] = ()
    decimals_for_tie: int = 3
    output_format: str = "csv"

    def __post_init__(self) -> None:
        if self.p_grid_count < 2:
            raise ValueError(f"p_grid_count must be at least 2, got {self.p_grid_count}")
        if not 0.0 < self.p_min < self.p_max < 1.0:
            raise ValueError(
                f"need 0 < p_min < p_max < 1, got p_min={self.p_min}, p_max={self.p_max}")
        if any(n < 1 for n in self.n_list):
            raise ValueError(f"n_list entries must be positive, got {self.n_list}")
        if self.decimals_for_tie < 1:
            raise ValueError(f"decimals_for_tie must be positive, got {self.decimals_for_tie}")
        if self.output_format not in ("csv", "svg"):
            raise ValueError(f"output_format must be csv or svg, got {self.output_format!r}")

    def p_grid(self) -> np.ndarray:
        """Equidistant p values from p_min to p_max inclusive, ascending."""
        return np.linspace(self.p_min, self.p_max, self.p_grid_count)


@dataclass(frozen=True)
class GridCell:
    """One (n, p) comparison cell: both metric values plus the rounded verdict."""

    n: int
    p: float
    metric_a: float
    metric_b: float
    verdict: str

    def __post_init__(self) -> None:
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}, got {self.verdict!r}")


def classify(metric: str, value_a: float, value_b: float, decimals: int) -> str:
    """Win/lose/tie verdict after rounding both values to ``decimals`` places.

    For ``length`` the strictly smaller rounded value wins; for ``coverage``
    the strictly larger one.  Equal rounded values tie.
    """
    if metric not in HEATMAP_METRICS:
        raise ValueError(f"metric must be one of {HEATMAP_METRICS}, got {metric!r}")
    ra = round(value_a, decimals)
    rb = round(value_b, decimals)
    if ra == rb:
        return VERDICT_TIE
    if metric == "length":
        return VERDICT_A if ra < rb else VERDICT_B
    return VERDICT_A if ra > rb else VERDICT_B


def _pmf_matrix(n: int, p: np.ndarray) -> np.ndarray:
    """Binomial pmf as an (n + 1, len(p)) matrix; p must lie strictly in (0, 1)."""
    y = np.arange(n + 1, dtype=float)[:, None]
    log_p = np.log(p)[None, :]
    log_q = np.log1p(-p)[None, :]
    return np.exp(_log_binom_coeffs(n)[:, None] + y * log_p + (n - y) * log_q)


def method_curves(method: str, n: int, alpha: float, prior: Optional[ShapePair],
                  p: np.ndarray, solver_config: SolverConfig = SolverConfig(),
                  ) -> tuple[np.ndarray, np.ndarray]:
    """Exact coverage and expected length across the p grid for one method.

    Per-outcome levels are resolved once per n (a single adjusted-level solve,
    or one per outcome for the posterior-corrected method) and reused for the
    whole grid.  Returns ``(coverage, expected_length)`` arrays aligned to p.
    """
    p = np.asarray(p, dtype=float)
    if method == FULL_METHOD:
        return np.ones_like(p), np.ones_like(p)
    prior = prior if method in _PRIOR_METHODS else None
    spec = EstimatorSpec(method, alpha, prior)
    levels = resolve_levels(method, alpha, n, prior, solver_config)
    intervals = outcome_intervals(spec, n, levels)
    lower = np.array([iv.lower for iv in intervals])
    upper = np.array([iv.upper for iv in intervals])
    weights = _pmf_matrix(n, p)
    inside = (lower[:, None] <= p[None, :]) & (p[None, :] <= upper[:, None])
    coverage = np.where(inside, weights, 0.0).sum(axis=0)
    length = (upper - lower) @ weights
    return coverage, length


def _compare_at_n(n: int, method_a: str, prior_a: Optional[ShapePair],
                  method_b: str, prior_b: Optional[ShapePair], metric: str,
                  alpha: float, p: np.ndarray, solver_config: SolverConfig,
                  ) -> tuple[np.ndarray, np.ndarray]:
    """Metric rows for both sides of a comparison at one sample size."""
    cov_a, len_a = method_curves(method_a, n, alpha, prior_a, p, solver_config)
    cov_b, len_b = method_curves(method_b, n, alpha, prior_b, p, solver_config)
    if metric == "length":
        return len_a, len_b
    return cov_a, cov_b


def _run_keyed(tasks: Sequence[tuple], func: Callable, workers: int) -> dict:
    """Run ``func(*args)`` for each ``(key, args)`` task, optionally on a
    process pool.  Results come back keyed in task order regardless of which
    worker finishes first, so downstream assembly is order-stable."""
    if workers <= 1 or len(tasks) <= 1:
        return {key: func(*args) for key, args in tasks}
    results = {}
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        futures = {key: pool.submit(func, *args) for key, args in tasks}
        for key, future in futures.items():
            results[key] = future.result()
    return results


def alpha_table_rows(alphas: Sequence[float], ns: Sequence[int], prior: ShapePair,
                     solver_config: SolverConfig = SolverConfig(),
                     ) -> list[tuple[int, float, float]]:
    """Solved level rows, ordered by n ascending then alpha ascending.

    A solver failure aborts the whole table and names the offending cell.
    """
    rows = []
    for n in sorted(set(int(n) for n in ns)):
        for alpha in sorted(set(float(a) for a in alphas)):
            try:
                result = solve_prior(alpha, n, prior, solver_config)
            except (SolverError, ValueError) as exc:
                raise SolverError(
                    f"adjusted-level table cell n={n}, alpha={alpha}: {exc}") from exc
            rows.append((n, alpha, result.alpha_prime))
    return rows


def curves_rows(methods: Sequence[str], ns: Sequence[int], alpha: float,
                prior: Optional[ShapePair], config: ReportConfig,
                solver_config: SolverConfig = SolverConfig(), workers: int = 1,
                ) -> list[tuple[str, int, float, float, float]]:
    """Curve rows ordered by method (as given), then n, then ascending p."""
    p = config.p_grid()
    method_order = list(dict.fromkeys(methods))
    n_order = sorted(set(int(n) for n in ns))
    tasks = [((method, n), (method, n, alpha, prior, p, solver_config))
             for method in method_order for n in n_order]
    sweeps = _run_keyed(tasks, method_curves, workers)
    rows = []
    for method in method_order:
        for n in n_order:
            coverage, length = sweeps[(method, n)]
            for j, pj in enumerate(p):
                rows.append((method, n, float(pj), float(coverage[j]), float(length[j])))
    return rows


def heatmap_cells(method_a: str, method_b: str, metric: str, alpha: float,
                  prior_a: Optional[ShapePair], prior_b: Optional[ShapePair],
                  config: ReportConfig, solver_config: SolverConfig = SolverConfig(),
                  workers: int = 1) -> list[GridCell]:
    """Comparison cells for every (n, p) on the grid, n ascending then p ascending."""
    if metric not in HEATMAP_METRICS:
        raise ValueError(f"metric must be one of {HEATMAP_METRICS}, got {metric!r}")
    p = config.p_grid()
    n_order = sorted(set(int(n) for n in config.n_list))
    if not n_order:
        raise ValueError("comparison grid needs at least one n")
    tasks = [(n, (n, method_a, prior_a, method_b, prior_b, metric, alpha, p, solver_config))
             for n in n_order]
    sweeps = _run_keyed(tasks, _compare_at_n, workers)
    cells = []
    for n in n_order:
        values_a, values_b = sweeps[n]
        for j, pj in enumerate(p):
            a = float(values_a[j])
            b = float(values_b[j])
            verdict = classify(metric, a, b, config.decimals_for_tie)
            cells.append(GridCell(n, float(pj), a, b, verdict))
    return cells


def format_alpha_table(rows: Sequence[tuple[int, float, float]]) -> list[tuple[str, str, str]]:
    """String rows for the adjusted-level table: alpha' fixed at 6 decimals."""
    return [(str(n), repr(alpha), f"{alpha_prime:.6f}") for n, alpha, alpha_prime in rows]


def format_curves(rows: Sequence[tuple[str, int, float, float, float]],
                  ) -> list[tuple[str, str, str, str, str]]:
    """String rows for the curves report; values keep full round-trip precision."""
    return [(method, str(n), repr(p), repr(cov), repr(length))
            for method, n, p, cov, length in rows]


def format_heatmap(cells: Sequence[GridCell]) -> list[tuple[str, str, str, str, str]]:
    """String rows for the comparison grid; metrics keep full precision, the
    verdict column carries the rounded outcome."""
    return [(str(c.n), repr(c.p), repr(c.metric_a), repr(c.metric_b), c.verdict)
            for c in cells]


def render_csv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """CSV text: header row, comma separators, LF line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def write_text_atomic(path: str | os.PathLike, text: str) -> None:
    """Write ``text`` to ``path`` without ever exposing a partial file: the
    content lands in a temporary sibling first and is renamed into place."""
    path = os.fspath(path)
    directory = os.path.dirname(path) or "."
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-",
                                    suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise
