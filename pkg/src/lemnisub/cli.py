"""Command-line reporting: threshold table, containment runs, curve data.

Subcommands
    table        closed-form and numeric thresholds against reference decimals
    verify       containment run for one case at a given (or the sharp) beta
    sharpness    falsification run just below the sharp threshold
    curve        boundary-curve samples (theta, Re, Im) for plotting
    lemma-check  starlikeness hypothesis scan

Machine formats (json = JSON lines, csv) render floats with 17 significant
digits in a fixed field order, so identical invocations are byte-identical.
Every flag has an environment-variable mirror LEMNISUB_<NAME> (explicit
flags win over the environment).

Exit codes: 0 success; 1 a verification or tolerance check failed; 2 usage
error.
"""

from __future__ import annotations

import argparse
import csv as _csv
import json
import math
import os
import sys
from dataclasses import dataclass

from . import verifier
from .dominant import DominantSolution
from .targets import TargetKind, boundary_thetas, eval_target, target_from_name, unit_circle
from .thresholds import (
    JANOWSKI_LABELS,
    PARAMETER_FREE_LABELS,
    REFERENCE_CROSSOVER,
    REFERENCE_SHARP,
    SolverError,
    closed_form_threshold,
    janowski_crossover,
    make_case,
    numeric_threshold,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

TABLE_TOLERANCE = 1e-5
ENV_PREFIX = "LEMNISUB_"
FORMATS = ("table", "json", "csv")


@dataclass
class RunConfig:
    n_samples: int = 4096
    delta: float = 1e-9
    tol: float = 1e-12
    output_format: str = "table"


def _env(name: str, cast, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    return cast(raw)


def _resolve(flag_value, name: str, cast, fallback):
    if flag_value is not None:
        return flag_value
    return _env(name, cast, fallback)


# --------------------------------------------------------------------------
# deterministic emitters
# --------------------------------------------------------------------------

def _f17(x: float) -> str:
    return format(float(x), ".17g")


def _render(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _f17(value)
    return str(value)


def _json_line(fields) -> str:
    parts = []
    for key, value in fields:
        if value is None:
            rendered = "null"
        elif isinstance(value, bool):
            rendered = "true" if value else "false"
        elif isinstance(value, float):
            # JSON has no inf/nan literals; quote them instead
            rendered = _f17(value) if math.isfinite(value) else json.dumps(_f17(value))
        elif isinstance(value, int):
            rendered = str(value)
        else:
            rendered = json.dumps(value)
        parts.append(f"{json.dumps(key)}: {rendered}")
    return "{" + ", ".join(parts) + "}"


def _emit(rows, fmt: str, out) -> None:
    if not rows:
        return
    if fmt == "json":
        for fields in rows:
            out.write(_json_line(fields) + "\n")
    elif fmt == "csv":
        writer = _csv.writer(out, lineterminator="\n")
        writer.writerow([key for key, _ in rows[0]])
        for fields in rows:
            writer.writerow([_render(value) for _, value in fields])
    else:
        header = [key for key, _ in rows[0]]
        table = [[_render(value) for _, value in fields] for fields in rows]
        widths = [max(len(h), *(len(r[i]) for r in table)) for i, h in enumerate(header)]
        out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for row in table:
            out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def _threshold_row(label, closed, numeric, reference):
    deviation = abs(closed.beta_sharp - reference) if reference is not None else abs(
        closed.beta_sharp - numeric.beta_sharp
    )
    return [
        ("label", label),
        ("beta1", closed.beta1),
        ("beta2", closed.beta2),
        ("beta_sharp", closed.beta_sharp),
        ("numeric", numeric.beta_sharp),
        ("reference", reference),
        ("deviation", deviation),
    ], deviation


def _crossover_row(label, family):
    value = janowski_crossover(family)
    deviation = abs(value - REFERENCE_CROSSOVER)
    return [
        ("label", label),
        ("beta1", None),
        ("beta2", None),
        ("beta_sharp", value),
        ("numeric", None),
        ("reference", REFERENCE_CROSSOVER),
        ("deviation", deviation),
    ], deviation


def cmd_table(args, config) -> int:
    rows, worst = [], 0.0
    for label in PARAMETER_FREE_LABELS:
        case = make_case(label)
        row, deviation = _threshold_row(
            label,
            closed_form_threshold(case),
            numeric_threshold(case, tol=config.tol),
            REFERENCE_SHARP[label],
        )
        rows.append(row)
        worst = max(worst, deviation)
        if label == "T1e":
            row, deviation = _crossover_row("B0", family=0)
            rows.append(row)
            worst = max(worst, deviation)
    row, deviation = _crossover_row("A0", family=2)
    rows.append(row)
    worst = max(worst, deviation)
    if args.A is not None or args.B is not None:
        if args.A is None or args.B is None:
            raise ValueError("provide both --A and --B for the Janowski rows")
        for label in JANOWSKI_LABELS:
            case = make_case(label, A=args.A, B=args.B)
            row, deviation = _threshold_row(
                label, closed_form_threshold(case), numeric_threshold(case, tol=config.tol), None
            )
            rows.append(row)
            worst = max(worst, deviation)
    _emit(rows, config.output_format, sys.stdout)
    return EXIT_OK if worst <= TABLE_TOLERANCE else EXIT_FAILURE


def _case_from_args(args):
    label = args.case
    if label in JANOWSKI_LABELS and (args.A is None or args.B is None):
        raise ValueError(f"case {label} needs --A and --B")
    return make_case(label, A=args.A, B=args.B)


def _report_rows(report, extra=()):
    ce = report.counterexample
    fields = list(extra) + [
        ("label", report.case.label),
        ("beta", report.beta),
        ("n_samples", report.n_samples),
        ("delta", report.delta),
        ("passed", report.passed),
        ("worst_margin", report.worst_margin),
        ("boundary_touches", report.boundary_touches),
        ("center_ok", report.center_ok),
        ("counterexample_re", None if ce is None else ce.real),
        ("counterexample_im", None if ce is None else ce.imag),
    ]
    return [fields]


def cmd_verify(args, config) -> int:
    case = _case_from_args(args)
    beta = args.beta if args.beta is not None else closed_form_threshold(case).beta_sharp
    report = verifier.verify_subordination(case, beta, n=config.n_samples, delta=config.delta)
    _emit(_report_rows(report), config.output_format, sys.stdout)
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_sharpness(args, config) -> int:
    case = _case_from_args(args)
    report = verifier.sharpness_falsify(case, args.eps, n=config.n_samples, delta=config.delta)
    _emit(_report_rows(report, extra=[("eps", args.eps)]), config.output_format, sys.stdout)
    # success means the sub-threshold run was falsified
    return EXIT_OK if not report.passed else EXIT_FAILURE


def _curve_rows(name, thetas, values):
    rows = []
    for theta, value in zip(thetas, values):
        rows.append(
            [("curve", name), ("theta", float(theta)), ("re", float(value.real)), ("im", float(value.imag))]
        )
    return rows


def cmd_curve(args, config) -> int:
    n = config.n_samples
    # closing sample at theta = +pi repeats the theta = -pi one exactly
    thetas = list(boundary_thetas(n)) + [math.pi]
    grid = unit_circle(n)
    circle = list(grid) + [complex(grid[0])]
    identifier = args.case
    rows = []
    if identifier in {kind.value for kind in TargetKind}:
        target = target_from_name(identifier, A=args.A, B=args.B)
        rows += _curve_rows(identifier, thetas, [eval_target(target, z) for z in circle])
    else:
        case = make_case(identifier, A=args.A, B=args.B) if identifier in JANOWSKI_LABELS else make_case(identifier)
        beta = args.beta if args.beta is not None else closed_form_threshold(case).beta_sharp
        sol = DominantSolution(case.family, beta)
        rows += _curve_rows("target", thetas, [eval_target(case.target, z) for z in circle])
        rows += _curve_rows("dominant", thetas, [sol.value(z) for z in circle])
    _emit(rows, config.output_format, sys.stdout)
    return EXIT_OK


def cmd_lemma_check(args, config) -> int:
    r_max = args.rmax
    n = config.n_samples
    minimum = float(verifier.starlike_condition_values(r_max, n).min())
    passed = minimum > 0.0
    _emit(
        [[("r_max", r_max), ("n", n), ("min_margin", minimum), ("passed", passed)]],
        config.output_format,
        sys.stdout,
    )
    return EXIT_OK if passed else EXIT_FAILURE


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="boundary samples (default 4096)")
    common.add_argument("--delta", type=float, default=None, help="boundary band half-width (default 1e-9)")
    common.add_argument("--tol", type=float, default=None, help="numeric solver tolerance (default 1e-12)")
    common.add_argument("--format", choices=FORMATS, default=None, help="output format (default table)")
    common.add_argument("--A", type=float, default=None, help="Janowski parameter A")
    common.add_argument("--B", type=float, default=None, help="Janowski parameter B")

    parser = argparse.ArgumentParser(
        prog="lemnisub",
        description="Sharp subordination thresholds under the square-root kernel: "
        "constants, containment certificates and curve data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="threshold constants vs references")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="containment run for one case")
    p.add_argument("case", help="case label (T1a..T3d)")
    p.add_argument("--beta", type=float, default=None, help="beta to verify (default: sharp value)")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser(
        "sharpness",
        parents=[common],
        help="falsification just below the threshold (exit 0 when the run fails as expected)",
    )
    p.add_argument("case", help="case label (T1a..T3d)")
    p.add_argument("--eps", type=float, default=None, help="relative shrink below sharp beta (default 0.01)")
    p.set_defaults(handler=cmd_sharpness)

    p = sub.add_parser("curve", parents=[common], help="boundary-curve samples for plotting")
    p.add_argument("case", help="case label (emits target and dominant curves) or target name")
    p.add_argument("--beta", type=float, default=None, help="beta for the dominant curve (default: sharp value)")
    p.set_defaults(handler=cmd_curve)

    p = sub.add_parser("lemma-check", parents=[common], help="starlikeness hypothesis scan")
    p.add_argument("--rmax", type=float, default=None, help="largest sampled radius (default 0.99)")
    p.set_defaults(handler=cmd_lemma_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        n_samples=_resolve(args.n, "N", int, 4096),
        delta=_resolve(args.delta, "DELTA", float, 1e-9),
        tol=_resolve(args.tol, "TOL", float, 1e-12),
        output_format=_resolve(args.format, "FORMAT", str, "table"),
    )
    if config.output_format not in FORMATS:
        parser.error(f"unknown format {config.output_format!r}")
    if config.n_samples < 1 or config.delta <= 0.0 or config.tol <= 0.0:
        parser.error("--n must be positive, --delta and --tol strictly positive")
    args.A = _resolve(args.A, "A", float, None)
    args.B = _resolve(args.B, "B", float, None)
    if hasattr(args, "beta"):
        args.beta = _resolve(args.beta, "BETA", float, None)
    if hasattr(args, "eps"):
        args.eps = _resolve(args.eps, "EPS", float, 1e-2)
    if hasattr(args, "rmax"):
        args.rmax = _resolve(args.rmax, "RMAX", float, 0.99)
    try:
        return args.handler(args, config)
    except SolverError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # downstream consumer (e.g. head) closed the stream; not an error
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
