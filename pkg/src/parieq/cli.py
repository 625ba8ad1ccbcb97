"""Command-line experiment harness.

Subcommands: solve (one CSV row to stdout), sweep (CSV file over a kappa
grid), optimize-take (revenue-maximizing kappa plus profile CSV), oracle
(finite-population cross-check). Exit codes: 0 success, 1 config error,
2 no equilibrium.
"""

import argparse
import sys
from pathlib import Path

from .equilibrium import FP_TOL, solve
from .errors import ConfigError, NoEquilibriumError, ParieqError
from .measure import BeliefMeasure
from .metrics import (atomic_subjective_profit, diffuse_actual_profit,
                      diffuse_subjective_profit, house_revenue)
from .oracle import discretize, iterate_best_response
from .response import MarketParams
from .scenario import Scenario, build_measure, load_scenario
from .stackelberg import optimize_take

SCHEMA_LINE = "# schema=1"
BASELINE_W = 1e-10

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NO_EQUILIBRIUM = 2

_CORE_COLUMNS = ("name", "kappa", "q", "w", "p_star", "d1", "d2",
                 "a1", "a2", "residual")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _metric_values(sc: Scenario, measure: BeliefMeasure, params: MarketParams,
                   eq) -> list[str]:
    vals = []
    for name in sc.metrics:
        if name == "house_revenue":
            vals.append(_fmt(house_revenue(eq, params)))
        elif name == "diffuse_actual_profit":
            vals.append(_fmt(diffuse_actual_profit(eq, params, sc.p_actual)))
        elif name == "diffuse_subjective_profit":
            vals.append(_fmt(diffuse_subjective_profit(eq, params, measure)))
        elif name == "atomic_subjective_profit":
            vals.append(_fmt(atomic_subjective_profit(eq, params)))
    return vals


def _core_values(sc: Scenario, kappa: float, w: float, eq) -> list[str]:
    return [sc.name, _fmt(kappa), _fmt(sc.q), _fmt(w), _fmt(eq.p_star),
            _fmt(eq.d1_star), _fmt(eq.d2_star), _fmt(eq.atomic.a1),
            _fmt(eq.atomic.a2), _fmt(eq.residual)]


def run_solve(sc: Scenario, fp_tol: float, out=None) -> int:
    out = sys.stdout if out is None else out
    if sc.is_sweep:
        raise ConfigError("'solve' needs a scalar kappa; use 'sweep' for grids")
    measure = build_measure(sc.measure)
    params = MarketParams(kappa=sc.kappa, q=sc.q, w=sc.w)
    try:
        eq = solve(params, measure, fp_tol=fp_tol)
    except NoEquilibriumError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NO_EQUILIBRIUM
    header = ",".join(_CORE_COLUMNS + sc.metrics)
    row = ",".join(_core_values(sc, sc.kappa, sc.w, eq)
                   + _metric_values(sc, measure, params, eq))
    print(SCHEMA_LINE, file=out)
    print(header, file=out)
    print(row, file=out)
    return EXIT_OK


def sweep_csv(sc: Scenario, fp_tol: float, baseline: bool) -> str:
    """Render the sweep CSV; rows ordered by kappa ascending, then budget."""
    if not sc.is_sweep:
        raise ConfigError("'sweep' needs a kappa grid; use 'solve' for scalars")
    measure = build_measure(sc.measure)
    budgets = sorted({BASELINE_W, sc.w}) if baseline else [sc.w]
    header = ",".join(_CORE_COLUMNS[:4] + ("status",) + _CORE_COLUMNS[4:]
                      + sc.metrics)
    lines = [SCHEMA_LINE, header]
    n_tail = 6 + len(sc.metrics)
    for kappa in sc.kappa.kappas():
        for w in budgets:
            prefix = [sc.name, _fmt(kappa), _fmt(sc.q), _fmt(w)]
            try:
                params = MarketParams(kappa=kappa, q=sc.q, w=w)
                eq = solve(params, measure, fp_tol=fp_tol)
                cells = prefix + ["ok", _fmt(eq.p_star), _fmt(eq.d1_star),
                                  _fmt(eq.d2_star), _fmt(eq.atomic.a1),
                                  _fmt(eq.atomic.a2), _fmt(eq.residual)]
                cells += _metric_values(sc, measure, params, eq)
            except NoEquilibriumError:
                cells = prefix + ["no_equilibrium"] + [""] * n_tail
            except ParieqError as exc:
                cells = prefix + [f"error: {exc.__class__.__name__}"] + [""] * n_tail
            lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def run_sweep(sc: Scenario, fp_tol: float, baseline: bool, out_path) -> int:
    text = sweep_csv(sc, fp_tol, baseline)
    Path(out_path).write_text(text)
    return EXIT_OK


def run_optimize_take(sc: Scenario, fp_tol: float, grid: int,
                      out_path=None, out=None) -> int:
    out = sys.stdout if out is None else out
    measure = build_measure(sc.measure)
    opt = optimize_take(measure, sc.q, sc.w, grid_points=grid, fp_tol=fp_tol)
    print(SCHEMA_LINE, file=out)
    print("name,kappa_star,revenue_star", file=out)
    print(f"{sc.name},{_fmt(opt.kappa_star)},{_fmt(opt.revenue_star)}", file=out)
    if out_path is not None:
        lines = [SCHEMA_LINE, "name,kappa,revenue"]
        lines += [f"{sc.name},{_fmt(k)},{_fmt(r)}" for k, r in opt.profile]
        Path(out_path).write_text("\n".join(lines) + "\n")
    return EXIT_OK


def run_oracle(sc: Scenario, fp_tol: float, n: int, out=None) -> int:
    out = sys.stdout if out is None else out
    if sc.is_sweep:
        raise ConfigError("'oracle' needs a scalar kappa")
    measure = build_measure(sc.measure)
    params = MarketParams(kappa=sc.kappa, q=sc.q, w=sc.w)
    try:
        eq = solve(params, measure, fp_tol=fp_tol)
    except NoEquilibriumError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NO_EQUILIBRIUM
    pop = discretize(measure, n)
    res = iterate_best_response(pop, params)
    print(f"p_approx={_fmt(res.p_approx)}", file=out)
    print(f"p_star={_fmt(eq.p_star)}", file=out)
    print(f"gap={_fmt(abs(res.p_approx - eq.p_star))}", file=out)
    print(f"converged={res.converged}", file=out)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parieq",
        description="Equilibrium solver and experiment harness for "
                    "parimutuel wagering with one large bettor.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--scenario", required=True, help="scenario .cfg path")
        p.add_argument("--fp-tol", type=float, default=FP_TOL,
                       help="fixed-point tolerance (default %(default)g)")

    p = sub.add_parser("solve", help="solve one scalar-kappa scenario")
    common(p)

    p = sub.add_parser("sweep", help="solve across the scenario's kappa grid")
    common(p)
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--baseline", action="store_true",
                   help=f"also solve with the tiny budget w={BASELINE_W:g}")

    p = sub.add_parser("optimize-take", help="find the revenue-maximizing kappa")
    common(p)
    p.add_argument("--out", default=None, help="profile CSV path")
    p.add_argument("--grid", type=int, default=256,
                   help="kappa grid points (default %(default)s)")

    p = sub.add_parser("oracle", help="finite-population cross-check")
    common(p)
    p.add_argument("--n", type=int, default=2000,
                   help="population size (default %(default)s)")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        sc = load_scenario(args.scenario)
        if args.command == "solve":
            return run_solve(sc, args.fp_tol)
        if args.command == "sweep":
            return run_sweep(sc, args.fp_tol, args.baseline, args.out)
        if args.command == "optimize-take":
            return run_optimize_take(sc, args.fp_tol, args.grid, args.out)
        if args.command == "oracle":
            return run_oracle(sc, args.fp_tol, args.n)
        raise AssertionError(args.command)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NoEquilibriumError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NO_EQUILIBRIUM
    except ParieqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def console_entry() -> None:
    sys.exit(main())
