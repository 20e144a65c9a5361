"""Command-line interface.

Exit codes: 0 success, 1 validation or usage error, 2 numeric failure
(ill-conditioning, overflow). Diagnostics go to stderr; data goes to the
``-o`` file or stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path
from typing import Sequence

from . import io
from .analyze import ExtrapolationWarning, contribution_shares, fitted_table, forecast
from .capital import CapitalConfig, build_series, steady_state_seed
from .errors import NumericError, ValidationError
from .estimate import MAX_CONDITION, EconRecord, Panel, estimate_gdp_params, generate_synthetic
from .model import CobbDouglasParams, FactorPoint, isoquant_points, eval_production
from .progress import DEFAULT_TOL, ExpProgressFamily, check_group_axioms, check_holothetic

EXIT_OK, EXIT_VALIDATION, EXIT_NUMERIC = 0, 1, 2


class UsageError(ValidationError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def _emit_text(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _emit_csv(columns, rows, output: str | None) -> None:
    if output is None:
        io.write_csv(sys.stdout, columns, rows)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            io.write_csv(fh, columns, rows)


def _capital_seed(args, first_investment: float) -> float:
    if args.k0 is not None:
        return args.k0
    if args.steady_state is not None:
        return steady_state_seed(first_investment, args.steady_state, args.sigma)
    raise ValidationError("initial capital is required: pass --k0 or --steady-state G")


def _params_from_args(args) -> CobbDouglasParams:
    if args.params is not None:
        doc = json.loads(Path(args.params).read_text(encoding="utf-8"))
        doc = doc.get("params", doc)
        try:
            return CobbDouglasParams(float(doc["a"]), float(doc["alpha"]), float(doc["beta"]), float(doc.get("gamma", 0.0)))
        except KeyError as exc:
            raise ValidationError(f"{args.params}: missing parameter {exc.args[0]!r}") from None
    missing = [n for n in ("a", "alpha", "beta", "gamma") if getattr(args, n) is None]
    if missing:
        raise ValidationError("missing parameters: " + ", ".join("--" + n for n in missing) + " (or use --params)")
    return CobbDouglasParams(args.a, args.alpha, args.beta, args.gamma)


def _consecutive(years: list[int], what: str) -> None:
    for prev, cur in zip(years, years[1:]):
        if cur != prev + 1:
            raise ValidationError(f"{what}: years must be consecutive ({prev} then {cur})")


def cmd_capital(args) -> int:
    rows = io.read_table(args.input, ("year", "investment"))
    if not rows:
        raise ValidationError(f"{args.input}: no investment rows")
    years = [r["year"] for r in rows]
    _consecutive(years, args.input)
    investments = [r["investment"] for r in rows]
    config = CapitalConfig(_capital_seed(args, investments[0]), args.sigma)
    series = build_series(config, years[0], investments)
    _emit_csv(io.CAPITAL_COLUMNS, zip(series.years, series.values), args.output)
    return EXIT_OK


def _load_fit_panel(args) -> tuple[Panel, io.RunConfig]:
    rows = io.read_table(args.input, ("year", "gdp", "labor"), optional=("investment", "capital"))
    config = io.RunConfig(
        input_path=args.input,
        capital_path=args.capital,
        time_origin=args.origin,
        detrend=args.detrend,
        tolerances={"max_condition": MAX_CONDITION},
        output_path=args.output,
        units=args.units,
    )
    if len(rows) < 5:
        raise ValidationError(f"need ≥ 5 observations, got {len(rows)}")
    years = [r["year"] for r in rows]

    if args.capital is not None:
        cap = {r["year"]: r["capital"] for r in io.read_table(args.capital, io.CAPITAL_COLUMNS)}
        missing = [y for y in years if y not in cap]
        if missing:
            raise ValidationError(f"{args.capital}: no capital for years {missing}")
        capital = [cap[y] for y in years]
    elif all("capital" in r for r in rows):
        capital = [r["capital"] for r in rows]
    elif all("investment" in r for r in rows):
        _consecutive(years, args.input)
        investments = [r["investment"] for r in rows]
        config.sigma = args.sigma
        config.initial_capital = args.k0
        config.steady_state_growth = args.steady_state
        seed = _capital_seed(args, investments[0])
        capital = list(build_series(CapitalConfig(seed, args.sigma), years[0], investments).values)
    else:
        raise ValidationError(f"{args.input}: need an investment or capital column, or --capital FILE")

    records = [EconRecord(r["year"], r["gdp"], k, r["labor"]) for r, k in zip(rows, capital)]
    return Panel(tuple(records), args.origin), config


def cmd_fit(args) -> int:
    panel, config = _load_fit_panel(args)
    config.time_origin = panel.time_origin
    fit = estimate_gdp_params(panel, detrend=args.detrend)
    if not fit.admissible:
        print("warning: an estimated elasticity is negative", file=sys.stderr)
    try:
        shares = contribution_shares(fit.params)
    except ValidationError as exc:
        print(f"warning: shares not reported: {exc}", file=sys.stderr)
        shares = None
    report = io.build_report(fit, shares, fitted_table(panel, fit.params), config)
    if args.output is None:
        sys.stdout.write(io.dumps(report))
    else:
        io.write_report_json(report, args.output)
    return EXIT_OK


def cmd_shares(args) -> int:
    params = CobbDouglasParams(1.0, args.alpha, args.beta, args.gamma)
    shares = contribution_shares(params)
    _emit_text(io.dumps({"gamma": args.gamma, "alpha": args.alpha, "beta": args.beta, "shares": shares.as_dict()}), args.output)
    return EXIT_OK


def cmd_simulate(args) -> int:
    params = _params_from_args(args)
    rows = io.read_table(args.scenarios, io.SCENARIO_COLUMNS, int_columns=(), key=None)
    scenarios = [(r["t"], FactorPoint(r["capital"], r["labor"])) for r in rows]
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ExtrapolationWarning)
        values = forecast(params, scenarios)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    out = [(r["t"], r["capital"], r["labor"], v) for r, v in zip(rows, values)]
    _emit_csv((*io.SCENARIO_COLUMNS, "gdp"), out, args.output)
    return EXIT_OK


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValidationError(f"not a comma-separated list of numbers: {text!r}") from None


def _point_list(text: str) -> list[FactorPoint]:
    points = []
    for item in text.split(","):
        try:
            k, l = item.split(":")
            points.append(FactorPoint(float(k), float(l)))
        except ValueError:
            raise ValidationError(f"points must look like K:L,K:L,... got {item!r}") from None
    return points


def cmd_check_progress(args) -> int:
    family = ExpProgressFamily(args.lam)
    t_grid = _float_list(args.t_grid)
    points = _point_list(args.points)
    axioms = check_group_axioms(family, t_grid, points, tol=args.tol)

    params = CobbDouglasParams(args.a, args.alpha, args.beta)
    labors = [p.labor for p in points]
    level = eval_production(params, points[0])
    isoquant = isoquant_points(params, level, 9, (min(labors) / 2, max(labors) * 2))
    holo = check_holothetic(lambda p: eval_production(params, p), family, t_grid, isoquant, tol=args.tol)

    doc = {
        "family": {"type": "exponential", "lambda": args.lam},
        "production": params.as_dict(),
        "t_grid": t_grid,
        "axioms": axioms.as_dict(),
        "holotheticity": holo.as_dict(),
    }
    _emit_text(io.dumps(doc), args.output)
    return EXIT_OK


def cmd_synth(args) -> int:
    params = _params_from_args(args)
    rows = io.read_table(args.paths, io.PATH_COLUMNS)
    if not rows:
        raise ValidationError(f"{args.paths}: no rows")
    years = [r["year"] for r in rows]
    _consecutive(years, args.paths)
    panel = generate_synthetic(
        params,
        years[0],
        [r["capital"] for r in rows],
        [r["labor"] for r in rows],
        noise_sd=args.noise_sd,
        seed=args.seed,
    )
    out = [(r.year, r.gdp, r.capital, r.labor) for r in panel.records]
    _emit_csv(io.SYNTH_PANEL_COLUMNS, out, args.output)
    return EXIT_OK


def _add_capital_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--sigma", type=float, default=0.05, help="depreciation rate in [0, 1] (default 0.05)")
    seed = p.add_mutually_exclusive_group()
    seed.add_argument("--k0", type=float, help="capital stock before the first year")
    seed.add_argument("--steady-state", type=float, metavar="G", help="seed K0 = I_first / (G + sigma) (heuristic)")


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--params", help="JSON with a, alpha, beta, gamma (a fit report works)")
    for name in ("a", "alpha", "beta", "gamma"):
        p.add_argument(f"--{name}", type=float)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="growthlie", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("capital", help="build a capital series from investment")
    p.add_argument("input", help="CSV with year and investment columns")
    _add_capital_flags(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_capital)

    p = sub.add_parser("fit", help="estimate the GDP function and write a JSON report")
    p.add_argument("input", help="CSV: year,gdp,investment,labor (or with a capital column)")
    p.add_argument("--capital", help="CSV year,capital to use instead of building from investment")
    _add_capital_flags(p)
    p.add_argument("--origin", type=int, help="year at which t = 0 (default: first year)")
    p.add_argument("--detrend", choices=("none", "linear"), default="none")
    p.add_argument("--units", default="", help="free-text description of data units, echoed in the report")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("shares", help="contribution shares of technology, capital and labor")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_shares)

    p = sub.add_parser("simulate", help="evaluate GDP on scenarios")
    p.add_argument("scenarios", help="CSV t,capital,labor")
    _add_param_flags(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("check-progress", help="group axioms and holotheticity for exponential progress")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--t-grid", default="0,0.5,1,2,5", help="comma list, increasing, containing 0")
    p.add_argument("--points", default="1:1,2:3,10:5", help="sample points K:L,K:L,...")
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--alpha", type=float, default=0.3)
    p.add_argument("--beta", type=float, default=0.6)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_check_progress)

    p = sub.add_parser("synth", help="generate a synthetic panel from known parameters")
    p.add_argument("paths", help="CSV year,capital,labor (consecutive years)")
    _add_param_flags(p)
    p.add_argument("--noise-sd", type=float, default=0.0, help="sd of log-normal noise")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_synth)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_VALIDATION
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OverflowError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValidationError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
