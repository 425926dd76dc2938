"""Command-line front end.

Exit codes: 0 success, 1 input or validation error, 2 numerical failure
(non-convergence, overflow).
"""

from __future__ import annotations

import argparse
import datetime as dt
import json
import logging
import sys
from typing import Any, Sequence, TextIO

from . import scenarios as scenario_io
from .calibration import DEFAULT_REPLICATIONS, ParetoSpec, estimate_lambda, eta_from_uplift
from .cost import DEFAULT_HORIZON, make_path, uncertainty_cost
from .embi import (
    DEFAULT_END,
    DEFAULT_SPLIT,
    DEFAULT_START,
    period_uplift,
    period_uplift_ratio_of_means,
    ratio_series,
    read_spread_csv,
    to_csv,
)
from .errors import ConvergenceError, InputError, NumericalError, UncertaintyCostError
from .model import SteadyState
from .solver import solve_steady_state

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICAL = 2

log = logging.getLogger("uncertainty_cost")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for numerical failures here.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit_json(obj: Any, out: TextIO) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def _display_state(state: SteadyState) -> dict[str, str]:
    return {
        "k_tilde": f"{state.k_tilde:.2f}",
        "g_A": f"{state.g_a:.3f}",
        "g_Y": f"{state.g_y:.3f}",
        "r": f"{state.r:.4f}",
    }


def _solve(sf: scenario_io.ScenarioFile, name: str) -> SteadyState:
    sc = sf.scenario(name)
    return solve_steady_state(sc.params, sc.solver)


def cmd_solve(args: argparse.Namespace, out: TextIO) -> int:
    sf = scenario_io.load(args.scenarios)
    sc = sf.scenario(args.name)
    state = solve_steady_state(sc.params, sc.solver)
    if args.format == "json":
        _emit_json(
            {
                "scenario": sc.name,
                "params": sc.params.to_dict(),
                "steady_state": state.to_dict(),
                "display": _display_state(state),
            },
            out,
        )
        return EXIT_OK
    full = {"k_tilde": state.k_tilde, "g_A": state.g_a, "g_Y": state.g_y, "r": state.r}
    shown = _display_state(state)
    out.write(f"scenario {sc.name} ({sc.params.kind.value} economy, eta={sc.params.eta:g})\n")
    out.write(f"{'':10s}{'full precision':>24s}{'display':>10s}\n")
    for key, value in full.items():
        out.write(f"{key:10s}{value:>24.16g}{shown[key]:>10s}\n")
    out.write(f"converged in {state.iterations} iterations, residual {state.residual:.3g}\n")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, out: TextIO) -> int:
    sf = scenario_io.load(args.scenarios)
    comp = sf.comparison(args.name)
    horizon = comp.horizon if args.horizon is None else args.horizon
    discount = comp.discount if args.discount is None else args.discount
    y0 = comp.y0 if args.y0 is None else args.y0
    low = _solve(sf, comp.low)
    high = _solve(sf, comp.high)
    report = uncertainty_cost(low, high, horizon_years=horizon, discount_rate=discount, y0=y0)
    if args.format == "json":
        _emit_json(
            {
                "comparison": comp.name,
                "low": comp.low,
                "high": comp.high,
                "eta_convention": sf.eta_convention,
                "eta_low": sf.scenario(comp.low).params.eta,
                "eta_high": sf.scenario(comp.high).params.eta,
                "low_state": low.to_dict(),
                "high_state": high.to_dict(),
                "report": report.to_dict(),
                "loss_display": f"{report.loss:.1%}",
            },
            out,
        )
        return EXIT_OK
    out.write(f"comparison {comp.name}: {comp.low} (low) vs {comp.high} (high)\n")
    if sf.eta_convention:
        out.write(f"eta convention: {sf.eta_convention}\n")
    out.write(f"horizon t=0..{horizon}, discount {discount:g}, y0 {y0:g}\n")
    out.write(f"{'':8s}{'g_Y':>10s}{'PV':>14s}\n")
    out.write(f"{'low':8s}{low.g_y:>10.6f}{report.pv_low:>14.6f}\n")
    out.write(f"{'high':8s}{high.g_y:>10.6f}{report.pv_high:>14.6f}\n")
    out.write(f"loss {report.loss:.1%} (unrounded {report.loss:.10g})\n")
    return EXIT_OK


def cmd_trajectory(args: argparse.Namespace, out: TextIO) -> int:
    if args.horizon < 1:
        raise InputError(f"--horizon must be at least 1, got {args.horizon}")
    sf = scenario_io.load(args.scenarios)
    state = _solve(sf, args.name)
    path = make_path(state, args.y0, args.horizon)
    if args.format == "json":
        _emit_json({"scenario": args.name, "path": path.to_dict()}, out)
        return EXIT_OK
    out.write("t,Y_t\n")
    for t, y in enumerate(path.levels):
        out.write(f"{t},{y!r}\n")
    return EXIT_OK


def cmd_calibrate_eta(args: argparse.Namespace, out: TextIO) -> int:
    cols = {"date_column": args.date_column, "value_column": args.value_column}
    if args.ratio:
        if args.numerator or args.denominator:
            raise InputError("give either --ratio or --numerator/--denominator, not both")
        if args.method == "ratio-of-means":
            raise InputError("--method ratio-of-means needs --numerator and --denominator")
        ratio = read_spread_csv(args.ratio, **cols)
        stats = period_uplift(ratio, args.split, args.start, args.end)
    elif args.numerator and args.denominator:
        num = read_spread_csv(args.numerator, **cols)
        den = read_spread_csv(args.denominator, **cols)
        ratio = ratio_series(num, den)
        if args.method == "ratio-of-means":
            stats = period_uplift_ratio_of_means(num, den, args.split, args.start, args.end)
        else:
            stats = period_uplift(ratio, args.split, args.start, args.end)
    else:
        raise InputError("give --ratio, or both --numerator and --denominator")

    if args.ratio_out:
        with open(args.ratio_out, "w", encoding="utf-8", newline="") as fh:
            fh.write(to_csv(ratio))

    uplift_used = stats.uplift if args.exact_uplift else round(stats.uplift, 2)
    eta_high = eta_from_uplift(args.eta_base, uplift_used)
    if args.format == "json":
        _emit_json(
            {
                "period_stats": stats.to_dict(),
                "eta_base": args.eta_base,
                "uplift_used": uplift_used,
                "eta_high": eta_high,
                "dropped_zero_denominator": ratio.dropped,
            },
            out,
        )
        return EXIT_OK
    out.write(stats.summary() + "\n")
    out.write(f"eta: {args.eta_base:g} -> {eta_high:.6g} (uplift applied {uplift_used:.6g})\n")
    return EXIT_OK


def cmd_calibrate_lambda(args: argparse.Namespace, out: TextIO) -> int:
    if args.target is not None:
        if args.threshold is not None:
            raise InputError("give either --threshold or --target, not both")
        spec = ParetoSpec.for_target(args.target, shape=args.shape, scale=args.scale)
    else:
        spec = ParetoSpec(shape=args.shape, scale=args.scale, threshold=args.scale if args.threshold is None else args.threshold)
    est = estimate_lambda(spec, args.replications, args.seed)
    if args.format == "table":
        out.write(
            f"lambda_hat {est.lambda_hat:.6f} +/- {est.std_error:.2g} "
            f"(R={est.replications}, seed={est.seed}, analytic {spec.success_probability:.6f})\n"
        )
        return EXIT_OK
    _emit_json({**est.to_dict(), "spec": vars(spec) | {"analytic": spec.success_probability}}, out)
    return EXIT_OK


def _date(text: str) -> dt.date:
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an ISO date: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="uncertainty-cost",
        description="Steady-state growth with uncertainty-dependent savings, and the present-value cost of uncertainty.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def scenario_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--scenarios", default=None, help="scenario file (default: bundled calibration)")
        p.add_argument("--name", required=True)

    p = sub.add_parser("solve", help="solve one scenario's steady state")
    scenario_args(p)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("compare", help="present-value loss between two scenarios")
    scenario_args(p)
    p.add_argument("--horizon", type=int, default=None, help=f"years (default: file value or {DEFAULT_HORIZON})")
    p.add_argument("--discount", type=float, default=None, help="annual discount rate (default: file value or 0)")
    p.add_argument("--y0", type=float, default=None, help="initial output level (default: file value or 1)")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("trajectory", help="output path of one scenario as CSV")
    scenario_args(p)
    p.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    p.add_argument("--y0", type=float, default=1.0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_trajectory)

    p = sub.add_parser("calibrate-eta", help="uncertainty degree from spread-ratio period averages")
    p.add_argument("--ratio", help="CSV of a pre-computed ratio series")
    p.add_argument("--numerator", help="CSV of the numerator spread series")
    p.add_argument("--denominator", help="CSV of the denominator spread series")
    p.add_argument("--start", type=_date, default=DEFAULT_START)
    p.add_argument("--split", type=_date, default=DEFAULT_SPLIT, help="last day of period 1")
    p.add_argument("--end", type=_date, default=DEFAULT_END)
    p.add_argument("--eta-base", type=float, default=0.1)
    p.add_argument("--method", choices=("mean-of-ratios", "ratio-of-means"), default="mean-of-ratios")
    p.add_argument("--exact-uplift", action="store_true", help="apply the unrounded uplift (default rounds to whole percent)")
    p.add_argument("--ratio-out", help="write the aligned ratio series as CSV")
    p.add_argument("--date-column", default="date")
    p.add_argument("--value-column", default="value")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_calibrate_eta)

    p = sub.add_parser("calibrate-lambda", help="innovation-success probability by Pareto Monte Carlo")
    p.add_argument("--shape", type=float, default=2.0)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--threshold", type=float, default=None, help="success cutoff (default: scale)")
    p.add_argument("--target", type=float, default=None, help="choose the threshold that gives this probability")
    p.add_argument("--replications", type=int, default=DEFAULT_REPLICATIONS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_calibrate_lambda)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, out)
    except ConvergenceError as exc:
        print(f"error: {exc} (last k_tilde {exc.last_iterate:.10g}, residual {exc.residual:.3g})", file=sys.stderr)
        return EXIT_NUMERICAL
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (InputError, UncertaintyCostError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
