"""Command-line interface.

Subcommands: ``interval`` (one interval for one observation), ``alpha-table``
(solved adjusted levels as CSV), ``curves`` (exact coverage and expected
length over a p grid as CSV), ``heatmap`` (pairwise win/lose/tie comparison
as CSV plus SVG), and ``example`` (a built-in worked scenario).

Exit codes: 0 success, 1 usage error, 2 solver failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .adjust import SolverConfig, SolverError, adjusted_interval
from .intervals import (
    BinomialObservation,
    Interval,
    bayes_beta,
    clopper_pearson,
    wald,
    wilson,
)
from .report import (
    FULL_METHOD,
    HEATMAP_METRICS,
    ALPHA_TABLE_HEADER,
    CURVES_HEADER,
    HEATMAP_HEADER,
    TABLE_ALPHA_VALUES,
    TABLE_N_VALUES,
    ReportConfig,
    alpha_table_rows,
    curves_rows,
    format_alpha_table,
    format_curves,
    format_heatmap,
    heatmap_cells,
    render_csv,
    write_text_atomic,
)
from .special import ShapePair
from .svg import render_heatmap_svg

USAGE_EXIT = 1
SOLVER_EXIT = 2

METHOD_ALIASES = {
    "wald": "wald",
    "wilson": "wilson",
    "cp": "clopper_pearson",
    "clopper-pearson": "clopper_pearson",
    "clopper_pearson": "clopper_pearson",
    "bayes": "bayes_beta",
    "bayes-beta": "bayes_beta",
    "bayes_beta": "bayes_beta",
    "adjusted-prior": "adjusted_cp_prior",
    "adjusted_cp_prior": "adjusted_cp_prior",
    "adjusted-posterior": "adjusted_cp_posterior",
    "adjusted_cp_posterior": "adjusted_cp_posterior",
    "full": FULL_METHOD,
}

_PRIOR_METHODS = ("bayes_beta", "adjusted_cp_prior", "adjusted_cp_posterior")


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with status 1 on usage problems."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _parse_prior(text: str, parser: argparse.ArgumentParser) -> ShapePair:
    parts = text.split(",")
    if len(parts) != 2:
        parser.error(f"--prior expects two comma-separated shapes, got {text!r}")
    try:
        a, b = float(parts[0]), float(parts[1])
    except ValueError:
        parser.error(f"--prior shapes must be numbers, got {text!r}")
    if not (a > 0.0 and b > 0.0):
        parser.error(f"--prior shapes must be positive, got {text!r}")
    return ShapePair(a, b)


def _parse_int_list(text: str, flag: str, parser: argparse.ArgumentParser) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        parser.error(f"{flag} expects comma-separated integers, got {text!r}")
    if not values or any(v < 1 for v in values):
        parser.error(f"{flag} entries must be positive integers, got {text!r}")
    return values


def _parse_float_list(text: str, flag: str, parser: argparse.ArgumentParser) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        parser.error(f"{flag} expects comma-separated numbers, got {text!r}")
    if not values:
        parser.error(f"{flag} needs at least one value")
    return values


def _resolve_method(name: str, parser: argparse.ArgumentParser) -> str:
    key = METHOD_ALIASES.get(name.lower())
    if key is None:
        parser.error(f"unknown method {name!r}; choose from "
                     + ", ".join(sorted(set(METHOD_ALIASES))))
    return key


def _check_alpha(alpha: float, parser: argparse.ArgumentParser) -> None:
    if not 0.0 < alpha < 1.0:
        parser.error(f"--alpha must lie in (0, 1), got {alpha}")


def _solver_config(args, parser: argparse.ArgumentParser) -> SolverConfig:
    try:
        return SolverConfig(tol=args.tol)
    except ValueError as exc:
        parser.error(str(exc))


def _report_config(args, parser: argparse.ArgumentParser, n_list=()) -> ReportConfig:
    try:
        return ReportConfig(p_grid_count=args.p_count, p_min=args.p_min,
                            p_max=args.p_max, n_list=tuple(n_list),
                            decimals_for_tie=getattr(args, "tie_decimals", 3),
                            output_format=args.format)
    except ValueError as exc:
        parser.error(str(exc))


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        write_text_atomic(out, text)


def _interval_for(method: str, obs: BinomialObservation, alpha: float,
                  prior: Optional[ShapePair], config: SolverConfig,
                  ) -> tuple[Interval, Optional[float]]:
    """The interval plus, for the corrected methods, the solved level."""
    if method == "wald":
        return wald(obs, alpha), None
    if method == "wilson":
        return wilson(obs, alpha), None
    if method == "clopper_pearson":
        return clopper_pearson(obs, alpha), None
    if method == "bayes_beta":
        return bayes_beta(obs, alpha, prior), None
    if method == FULL_METHOD:
        return Interval(0.0, 1.0), None
    mode = "prior" if method == "adjusted_cp_prior" else "posterior"
    interval, result = adjusted_interval(alpha, obs, prior, mode, config)
    return interval, result.alpha_prime


def _require_prior(method: str, prior: Optional[ShapePair],
                   parser: argparse.ArgumentParser) -> None:
    if method in _PRIOR_METHODS and prior is None:
        parser.error(f"method {method!r} needs --prior R,S")


def _format_interval(iv: Interval, precision: int) -> str:
    return f"{iv.lower:.{precision}f} {iv.upper:.{precision}f}"


def _cmd_interval(args, parser) -> int:
    method = _resolve_method(args.method, parser)
    _check_alpha(args.alpha, parser)
    prior = _parse_prior(args.prior, parser) if args.prior else None
    _require_prior(method, prior, parser)
    solver_config = _solver_config(args, parser)
    try:
        obs = BinomialObservation(args.n, args.x)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        interval, alpha_prime = _interval_for(method, obs, args.alpha, prior, solver_config)
    except (SolverError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return SOLVER_EXIT
    lines = []
    if alpha_prime is not None:
        lines.append(f"alpha_prime {alpha_prime:.6f}")
    lines.append(_format_interval(interval, args.precision))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_alpha_table(args, parser) -> int:
    if args.format != "csv":
        parser.error("alpha-table only writes csv")
    _check_alpha_list = _parse_float_list(args.alpha_list, "--alpha-list", parser)
    for alpha in _check_alpha_list:
        if not 0.0 < alpha < 1.0:
            parser.error(f"--alpha-list values must lie in (0, 1), got {alpha}")
    ns = _parse_int_list(args.n_list, "--n-list", parser)
    prior = _parse_prior(args.prior, parser) if args.prior else ShapePair(1.0, 1.0)
    solver_config = _solver_config(args, parser)
    try:
        rows = alpha_table_rows(_check_alpha_list, ns, prior, solver_config)
    except SolverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return SOLVER_EXIT
    _emit(render_csv(ALPHA_TABLE_HEADER, format_alpha_table(rows)), args.out)
    return 0


def _cmd_curves(args, parser) -> int:
    if args.format != "csv":
        parser.error("curves only writes csv")
    _check_alpha(args.alpha, parser)
    methods = [_resolve_method(name, parser)
               for name in args.methods.split(",") if name.strip()]
    if not methods:
        parser.error("--methods needs at least one method")
    prior = _parse_prior(args.prior, parser) if args.prior else None
    for method in methods:
        _require_prior(method, prior, parser)
    ns = _parse_int_list(args.n_list, "--n-list", parser)
    config = _report_config(args, parser)
    solver_config = _solver_config(args, parser)
    if args.workers < 1:
        parser.error(f"--workers must be positive, got {args.workers}")
    try:
        rows = curves_rows(methods, ns, args.alpha, prior, config,
                           solver_config, workers=args.workers)
    except (SolverError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return SOLVER_EXIT
    _emit(render_csv(CURVES_HEADER, format_curves(rows)), args.out)
    if args.figure:
        from .figures import render_curves_figure

        render_curves_figure(args.figure, rows, args.alpha)
    return 0


def _heatmap_paths(out: str) -> tuple[str, str]:
    stem, ext = os.path.splitext(out)
    base = stem if ext.lower() in (".svg", ".csv") else out
    return base + ".csv", base + ".svg"


def _cmd_heatmap(args, parser) -> int:
    if args.out is None:
        parser.error("heatmap needs --out (it writes both a csv and an svg)")
    _check_alpha(args.alpha, parser)
    method_a = _resolve_method(args.method_a, parser)
    method_b = _resolve_method(args.method_b, parser)
    if args.metric not in HEATMAP_METRICS:
        parser.error(f"--metric must be one of {HEATMAP_METRICS}, got {args.metric!r}")
    prior = _parse_prior(args.prior, parser) if args.prior else None
    _require_prior(method_a, prior, parser)
    _require_prior(method_b, prior, parser)
    if args.n_min < 1 or args.n_max < args.n_min:
        parser.error(f"need 1 <= n-min <= n-max, got {args.n_min}..{args.n_max}")
    if args.tie_decimals < 1:
        parser.error(f"--tie-decimals must be positive, got {args.tie_decimals}")
    if args.workers < 1:
        parser.error(f"--workers must be positive, got {args.workers}")
    config = _report_config(args, parser, n_list=range(args.n_min, args.n_max + 1))
    solver_config = _solver_config(args, parser)
    try:
        cells = heatmap_cells(method_a, method_b, args.metric, args.alpha,
                              prior, prior, config, solver_config,
                              workers=args.workers)
    except (SolverError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return SOLVER_EXIT
    csv_path, svg_path = _heatmap_paths(args.out)
    write_text_atomic(csv_path, render_csv(HEATMAP_HEADER, format_heatmap(cells)))
    write_text_atomic(svg_path, render_heatmap_svg(cells))
    if args.figure:
        from .figures import render_heatmap_figure

        render_heatmap_figure(args.figure, cells)
    return 0


def _cmd_example(args, parser) -> int:
    _check_alpha(args.alpha, parser)
    solver_config = _solver_config(args, parser)
    try:
        obs = BinomialObservation(args.n, args.x)
    except ValueError as exc:
        parser.error(str(exc))
    override = _parse_prior(args.prior, parser) if args.prior else None
    prior_weight = override or ShapePair(1.0, 1.0)
    posterior_weight = override or ShapePair(0.5, 0.5)
    d = args.precision
    lines = [f"n {obs.n}  x {obs.x}  alpha {args.alpha:g}"]
    cp = clopper_pearson(obs, args.alpha)
    lines.append(f"clopper_pearson {_format_interval(cp, d)}")
    try:
        for mode, weight in (("prior", prior_weight), ("posterior", posterior_weight)):
            interval, result = adjusted_interval(args.alpha, obs, weight, mode, solver_config)
            lines.append(f"adjusted_cp_{mode} beta({weight.a:g},{weight.b:g}) "
                         f"alpha_prime {result.alpha_prime:.6f} "
                         f"{_format_interval(interval, d)}")
    except (SolverError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return SOLVER_EXIT
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--alpha", type=float, default=0.05,
                        help="nominal error level (default 0.05)")
    common.add_argument("--prior", metavar="R,S", default=None,
                        help="Beta shape pair, e.g. 1,1 or 0.5,0.5")
    common.add_argument("--tol", type=float, default=1e-8,
                        help="solver tolerance on mean coverage (default 1e-8)")
    common.add_argument("--out", metavar="PATH", default=None,
                        help="output file (default stdout; heatmap requires it)")
    common.add_argument("--format", choices=("csv", "svg"), default="csv",
                        help="output format for tabular commands")
    common.add_argument("--workers", type=int, default=1,
                        help="process count for grid sweeps (default 1)")
    common.add_argument("--precision", type=int, default=4,
                        help="decimal places for printed endpoints (default 4)")

    parser = _Parser(prog="binomci",
                     description="Binomial proportion intervals with exact "
                                 "coverage tools and mean-coverage calibration.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p_int = sub.add_parser("interval", parents=[common],
                           help="one interval for one observation")
    p_int.add_argument("--method", required=True,
                       help="wald, wilson, cp, bayes, adjusted-prior, "
                            "adjusted-posterior or full")
    p_int.add_argument("--n", type=int, required=True, help="number of trials")
    p_int.add_argument("--x", type=int, required=True, help="number of successes")
    p_int.set_defaults(func=_cmd_interval)

    p_tab = sub.add_parser("alpha-table", parents=[common],
                           help="solved adjusted levels as CSV")
    p_tab.add_argument("--n-list", default=",".join(str(n) for n in TABLE_N_VALUES),
                       help="comma-separated sample sizes (default: the 30 "
                            "published sizes 5..200)")
    p_tab.add_argument("--alpha-list",
                       default=",".join(str(a) for a in TABLE_ALPHA_VALUES),
                       help="comma-separated nominal levels (default 0.05,0.01)")
    p_tab.set_defaults(func=_cmd_alpha_table)

    p_cur = sub.add_parser("curves", parents=[common],
                           help="exact coverage and length curves as CSV")
    p_cur.add_argument("--methods", required=True,
                       help="comma-separated method names")
    p_cur.add_argument("--n-list", required=True,
                       help="comma-separated sample sizes")
    p_cur.add_argument("--p-count", type=int, default=500,
                       help="grid points (default 500)")
    p_cur.add_argument("--p-min", type=float, default=0.001)
    p_cur.add_argument("--p-max", type=float, default=0.5)
    p_cur.add_argument("--figure", metavar="PATH", default=None,
                       help="also render a matplotlib figure to PATH")
    p_cur.set_defaults(func=_cmd_curves)

    p_heat = sub.add_parser("heatmap", parents=[common],
                            help="pairwise comparison grid as CSV plus SVG")
    p_heat.add_argument("--method-a", required=True, help="first method")
    p_heat.add_argument("--method-b", required=True, help="second method")
    p_heat.add_argument("--metric", choices=HEATMAP_METRICS, default="length",
                        help="comparison metric (default length)")
    p_heat.add_argument("--n-min", type=int, default=5)
    p_heat.add_argument("--n-max", type=int, default=100)
    p_heat.add_argument("--p-count", type=int, default=500,
                        help="grid points (default 500)")
    p_heat.add_argument("--p-min", type=float, default=0.001)
    p_heat.add_argument("--p-max", type=float, default=0.5)
    p_heat.add_argument("--tie-decimals", type=int, default=3,
                        help="rounding for the win/lose/tie verdict (default 3)")
    p_heat.add_argument("--figure", metavar="PATH", default=None,
                        help="also render a matplotlib figure to PATH")
    p_heat.set_defaults(func=_cmd_heatmap)

    p_ex = sub.add_parser("example", parents=[common],
                          help="built-in worked scenario (96 trials, 4 successes)")
    p_ex.add_argument("--n", type=int, default=96, help="number of trials")
    p_ex.add_argument("--x", type=int, default=4, help="number of successes")
    p_ex.set_defaults(func=_cmd_example)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
