"""Command-line interface: coef | field | retard | classical | sweep | serve.

Exit codes: 0 success, 2 validation error, 1 internal error. Validation
failures print one machine-parsable line to stderr.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .classical import ClassicalBarrier, ClassicalParticle, retardation_distance, traversal_time
from .errors import DeltaLabError
from .retardation import evaluate_scenario, sweep_retardation, SWEEP_AXES
from .scattering import solve_cached
from .scenario import ExportTable, default_scenario, load_scenario, scenario_to_dict
from .wavefield import build_spectrum

DEFAULT_BIND = "127.0.0.1:8777"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltalab",
        description="Virtual lab for 1D scattering off finite sums of delta potentials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_scenario_arg(p):
        p.add_argument("--scenario", required=True, help="path to a scenario JSON file")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="output path (default: stdout)")

    p_coef = sub.add_parser("coef", help="per-k coefficients, R, T and residuals")
    add_scenario_arg(p_coef)
    p_coef.add_argument("--k", type=float, help="solve one wavenumber instead of the spectrum")

    p_field = sub.add_parser("field", help="free and non-free density fields")
    add_scenario_arg(p_field)
    p_field.add_argument("--t", type=float, help="observation time (default: scenario t)")

    p_ret = sub.add_parser("retard", help="retardation report for a scenario")
    p_ret.add_argument("--scenario", required=True)

    p_cl = sub.add_parser("classical", help="classical barrier traversal and retardation")
    p_cl.add_argument("--m", type=float, required=True, help="particle mass")
    p_cl.add_argument("--v0", type=float, required=True, help="incident speed")
    p_cl.add_argument("--F0", type=float, required=True, help="force magnitude (negative = well)")
    p_cl.add_argument("--w", type=float, required=True, help="barrier full width")
    p_cl.add_argument("--x0", type=float, default=0.0, help="barrier center")

    p_sweep = sub.add_parser("sweep", help="retardation reports along one parameter axis")
    add_scenario_arg(p_sweep)
    p_sweep.add_argument("--axis", required=True, choices=SWEEP_AXES)
    p_sweep.add_argument("--values", required=True, help="comma-separated axis values")

    p_serve = sub.add_parser("serve", help="start the HTTP JSON service")
    p_serve.add_argument("--bind", help="host:port (overrides DELTA_LAB_BIND)")
    p_serve.add_argument("--scenario", help="scenario file used for /api/defaults")
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_table(table: ExportTable, fmt: str, out: Optional[str]) -> None:
    _emit(table.to_csv() if fmt == "csv" else table.to_json(), out)


def _cmd_coef(args) -> int:
    scenario = load_scenario(args.scenario)
    ks = [args.k] if args.k is not None else [c.k for c in build_spectrum(scenario.spectrum)]
    n = len(scenario.set)
    columns = ["k", "residual", "R", "T", "abs_R2", "abs_T2"] + [
        "coef%d" % a for a in range(n)
    ]
    rows = []
    for k in ks:
        sol = solve_cached(scenario.set, float(k))
        rows.append(
            [
                sol.k,
                sol.residual,
                sol.reflection,
                sol.transmission,
                abs(sol.reflection) ** 2,
                abs(sol.transmission) ** 2,
            ]
            + [complex(c) for c in sol.coefs]
        )
    _emit_table(ExportTable(columns=tuple(columns), rows=tuple(map(tuple, rows))), args.format, args.out)
    return 0


def _cmd_field(args) -> int:
    scenario = load_scenario(args.scenario)
    if args.t is not None:
        import dataclasses

        scenario = dataclasses.replace(scenario, t=args.t)
    result = evaluate_scenario(scenario)
    xs = result.rho_free.grid.points()
    rows = tuple(
        (float(x), float(f), float(nf))
        for x, f, nf in zip(xs, result.rho_free.values, result.rho_nonfree.values)
    )
    _emit_table(ExportTable(columns=("x", "free", "nonfree"), rows=rows), args.format, args.out)
    return 0


def _cmd_retard(args) -> int:
    result = evaluate_scenario(load_scenario(args.scenario))
    _emit(json.dumps(result.report.to_dict()), None)
    return 0


def _cmd_classical(args) -> int:
    barrier = ClassicalBarrier(x0=args.x0, w=args.w, f0=args.F0, mass=args.m)
    particle = ClassicalParticle(v0=args.v0)
    t = traversal_time(barrier, particle)
    _emit(
        json.dumps(
            {
                "traversal_time": t,
                "free_time": barrier.w / particle.v0,
                "retardation_distance": retardation_distance(barrier, particle),
            }
        ),
        None,
    )
    return 0


def _cmd_sweep(args) -> int:
    scenario = load_scenario(args.scenario)
    values = [float(v) for v in args.values.split(",") if v.strip() != ""]
    points = sweep_retardation(scenario, args.axis, values)
    rows = []
    for p in points:
        r = p.report
        nan = float("nan")
        rows.append(
            (
                p.value,
                r.corr_lag if r else nan,
                r.phase_delay if r else nan,
                r.fwhm if r else nan,
                r.scatterer_span if r else nan,
                r.mean_spacing if r else nan,
                r.peak_prominence if r else nan,
            )
        )
    table = ExportTable(
        columns=(
            args.axis,
            "corr_lag",
            "phase_delay",
            "fwhm",
            "scatterer_span",
            "mean_spacing",
            "peak_prominence",
        ),
        rows=tuple(rows),
    )
    _emit_table(table, args.format, args.out)
    for p in points:
        if p.reason:
            sys.stderr.write("%s=%g skipped: %s\n" % (args.axis, p.value, p.reason))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    bind = args.bind or os.environ.get("DELTA_LAB_BIND") or DEFAULT_BIND
    host, _, port = bind.rpartition(":")
    defaults = load_scenario(args.scenario) if args.scenario else default_scenario()
    app = create_app(defaults)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))
    return 0


_COMMANDS = {
    "coef": _cmd_coef,
    "field": _cmd_field,
    "retard": _cmd_retard,
    "classical": _cmd_classical,
    "sweep": _cmd_sweep,
    "serve": _cmd_serve,
}


def run_cli(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DeltaLabError as e:
        sys.stderr.write(e.oneline() + "\n")
        return 2
    except FileNotFoundError as e:
        sys.stderr.write("FileNotFound: %s\n" % e)
        return 2
    except Exception as e:  # pragma: no cover - internal faults
        sys.stderr.write("InternalError: %s\n" % e)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
