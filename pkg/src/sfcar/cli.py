"""Command-line front end.

Subcommands: rates, map, sweep, optimize, validate.  Every command takes
--format {csv|json}, --output PATH and --config PATH (a JSON file whose
keys match the command's option names; explicit flags override file
values).  Output tables are plot-ready: CSV with a fixed header row, or
a JSON array of flat records with identical field names.  Floats are
emitted in shortest round-trip form, so outputs keep full double
precision and can serve as regression fixtures.

Exit codes: 0 success, 2 invalid input, 3 no feasible density.
"""

import argparse
import json
import math
import sys

from sfcar.correlation import PhysicalEnvironment, edge_correlation, zeta_of_rho
from sfcar.density import (
    Objective,
    ScenarioConfig,
    SweepRow,
    optimize,
    sweep,
)
from sfcar.errors import (
    DivergenceError,
    DomainError,
    NoFeasibleDensityError,
    QuadratureError,
)
from sfcar.lattice import TorusSpec, torus_rates
from sfcar.network import EnergyModel
from sfcar.rates import info_rates

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NO_FEASIBLE = 3

SWEEP_FIELDS = [
    "n",
    "mu_n",
    "d_n",
    "rho",
    "zeta",
    "e_s",
    "snr",
    "kli_rate",
    "mi_rate",
    "total_kli",
    "total_mi",
    "feasible",
]


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _merge_config_file(args)
    try:
        return args.handler(args)
    except (DomainError, DivergenceError, QuadratureError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NoFeasibleDensityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_FEASIBLE


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", default=None, help="output path (default stdout)")
    common.add_argument("--config", default=None, help="JSON file with option values")

    parser = argparse.ArgumentParser(
        prog="sfcar",
        description="Information rates and density planning for 2-D "
        "conditionally autoregressive Gauss-Markov fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rates", parents=[common], help="per-node rates at one point")
    p.add_argument("--zeta", type=float, default=None)
    p.add_argument("--snr-db", type=float, default=None)
    p.set_defaults(handler=_cmd_rates)

    p = sub.add_parser("map", parents=[common], help="spacing -> rho -> zeta chain")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--spacing", type=float, default=None)
    p.set_defaults(handler=_cmd_map)

    for name, handler in (("sweep", _cmd_sweep), ("optimize", _cmd_optimize)):
        p = sub.add_parser(name, parents=[common], help=f"density {name}")
        p.add_argument("--L", type=float, default=None, help="coverage half-width")
        p.add_argument("--E", type=float, default=None, help="total energy budget (J)")
        p.add_argument("--alpha", type=float, default=None, help="diffusion rate")
        p.add_argument("--beta", type=float, default=None, help="SNR per joule")
        p.add_argument("--E0", type=float, default=None, help="per-edge energy coefficient")
        p.add_argument("--nu", type=float, default=None, help="path-loss exponent")
        p.add_argument("--n-min", type=int, default=None)
        p.add_argument("--n-max", type=int, default=None)
        p.add_argument("--mu-min", type=float, default=None, help="density lower bound")
        p.add_argument("--mu-max", type=float, default=None, help="density upper bound")
        p.add_argument("--objective", choices=("kli", "mi"), default=None)
        p.set_defaults(handler=handler)

    p = sub.add_parser("validate", parents=[common], help="torus vs quadrature gaps")
    p.add_argument("--zeta", type=float, default=None)
    p.add_argument("--snr-db", type=float, default=None)
    p.add_argument("--N", type=int, nargs="+", default=None, help="torus sizes")
    p.set_defaults(handler=_cmd_validate)
    return parser


def _merge_config_file(args: argparse.Namespace) -> None:
    if getattr(args, "config", None) is None:
        return
    with open(args.config, encoding="utf-8") as fh:
        values = json.load(fh)
    for key, value in values.items():
        dest = key.replace("-", "_")
        if hasattr(args, dest) and getattr(args, dest) is None:
            setattr(args, dest, value)


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise DomainError(
            "missing required option(s): "
            + ", ".join("--" + n.replace("_", "-") for n in missing)
        )


def _snr_linear(snr_db: float) -> float:
    return 10.0 ** (snr_db / 10.0)


def _cmd_rates(args: argparse.Namespace) -> int:
    _require(args, "zeta", "snr_db")
    snr = _snr_linear(args.snr_db)
    rates = info_rates(args.zeta, snr)
    record = {
        "zeta": args.zeta,
        "snr_db": args.snr_db,
        "snr_linear": snr,
        "kli_rate": rates.kli,
        "mi_rate": rates.mi,
    }
    _emit([record], list(record), args)
    return EXIT_OK


def _cmd_map(args: argparse.Namespace) -> int:
    _require(args, "alpha", "spacing")
    env = PhysicalEnvironment(args.alpha)
    rho = edge_correlation(env, args.spacing)
    record = {
        "alpha": args.alpha,
        "spacing": args.spacing,
        "rho": rho,
        "zeta": zeta_of_rho(rho),
    }
    _emit([record], list(record), args)
    return EXIT_OK


def _scenario_from_args(args: argparse.Namespace) -> ScenarioConfig:
    _require(args, "L", "E", "alpha", "beta", "E0", "nu")
    n_min = args.n_min
    n_max = args.n_max
    if args.mu_min is not None and n_min is None:
        n_min = max(1, math.ceil((2.0 * args.L * math.sqrt(args.mu_min) - 1.0) / 2.0))
    if args.mu_max is not None and n_max is None:
        n_max = math.floor((2.0 * args.L * math.sqrt(args.mu_max) - 1.0) / 2.0)
    return ScenarioConfig(
        half_width=args.L,
        energy=EnergyModel(
            total_energy=args.E, e0=args.E0, nu=args.nu, beta=args.beta
        ),
        environment=PhysicalEnvironment(args.alpha),
        n_min=1 if n_min is None else n_min,
        n_max=n_max,
        objective=Objective(args.objective or "kli"),
    )


def _row_record(row: SweepRow) -> dict:
    return {name: getattr(row, name) for name in SWEEP_FIELDS}


def _cmd_sweep(args: argparse.Namespace) -> int:
    rows = sweep(_scenario_from_args(args))
    _emit([_row_record(r) for r in rows], SWEEP_FIELDS, args)
    return EXIT_OK


def _cmd_optimize(args: argparse.Namespace) -> int:
    config = _scenario_from_args(args)
    best = optimize(config)
    record = _row_record(best)
    record["objective"] = config.objective.value
    _emit([record], SWEEP_FIELDS + ["objective"], args)
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    _require(args, "zeta", "snr_db", "N")
    snr = _snr_linear(args.snr_db)
    quad = info_rates(args.zeta, snr)
    records = []
    for n in args.N:
        torus = torus_rates(args.zeta, snr, TorusSpec(n))
        records.append(
            {
                "N": n,
                "kli_torus": torus.kli,
                "mi_torus": torus.mi,
                "kli_quad": quad.kli,
                "mi_quad": quad.mi,
                "abs_gap_kli": abs(torus.kli - quad.kli),
                "abs_gap_mi": abs(torus.mi - quad.mi),
            }
        )
    _emit(records, list(records[0]), args)
    return EXIT_OK


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value) if isinstance(value, float) else str(value)


def _emit(records: list[dict], fields: list[str], args: argparse.Namespace) -> None:
    if args.format == "json":
        text = json.dumps(records, indent=2) + "\n"
    else:
        lines = [",".join(fields)]
        for record in records:
            lines.append(",".join(_format_cell(record[f]) for f in fields))
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    raise SystemExit(main())
