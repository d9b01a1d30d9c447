"""Command-line interface: ``arcsl-bounds {eval,constants,verify,table}``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 work budget exhausted. Floats are printed in shortest round-trip form.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import bounds_engine as be
from . import lemniscate, oracle, special_core, zeta_lerch
from .errors import DomainError, GammaOverflowError, ToleranceError, WorkLimitError

DEFAULT_TOL = 1e-10
TOL_FLOOR = 1e-13
FORMATS = ("text", "csv", "json")
TABLE_COLUMNS = ("x", "arcsl", "lower", "upper_sharp", "upper_legacy", "F")
RECORD_COLUMNS = ("x", "lower", "arcsl", "upper", "F", "lower_margin", "upper_margin")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _num(x):
    """Shortest round-trip text for a float; non-finite values pass through."""
    return repr(float(x))


def _json_num(x):
    x = float(x)
    return x if math.isfinite(x) else None


def _dump_json(obj):
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _dump_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


# eval ---------------------------------------------------------------------

def _eval_arcsl(tol, x):
    return lemniscate.arcsl(x, tol)


def _eval_lerch(tol, z, s, a):
    return zeta_lerch.lerch_phi(zeta_lerch.LerchParams(z, s, a), tol)


def _eval_hurwitz(tol, s, a):
    return zeta_lerch.hurwitz_zeta(s, a, tol)


def _eval_gamma(tol, x):
    return special_core.gamma(x)


def _eval_beta(tol, x, y):
    return special_core.beta(x, y)


def _eval_h(tol, s):
    return be.h_func(s, tol)


def _eval_F(tol, x):
    return be.ratio_F(x, tol)


EVALUATORS = {
    "arcsl": (_eval_arcsl, ("x",)),
    "lerch": (_eval_lerch, ("z", "s", "a")),
    "hurwitz": (_eval_hurwitz, ("s", "a")),
    "gamma": (_eval_gamma, ("x",)),
    "beta": (_eval_beta, ("x", "y")),
    "h": (_eval_h, ("s",)),
    "F": (_eval_F, ("x",)),
}


def _oracle_value(function, args, tol):
    """(value, error estimate) from the oracle module, or None."""
    tol = max(tol, 1e-12)
    if function == "arcsl":
        r = oracle.arcsl_reference(args[0], tol)
        return r.value, r.error_estimate
    if function == "lerch" and args[0] < 1.0:
        partial, tail, _ = oracle.lerch_reference(*args, tol)
        return partial + tail / 2, tail / 2
    if function == "F" and 0.0 < args[0] < 1.0:
        x = args[0]
        u = oracle.arcsl_reference(x, tol)
        partial, tail, _ = oracle.lerch_reference(x**4, 1.5, 0.25, tol)
        phi = partial + tail / 2
        value = u.value / (x * phi)
        return value, value * (u.error_estimate / u.value + tail / 2 / phi)
    return None


def cmd_eval(args):
    evaluate, names = EVALUATORS[args.function]
    if len(args.args) != len(names):
        raise UsageError(
            f"{args.function} takes {len(names)} argument(s) ({', '.join(names)}), got {len(args.args)}"
        )
    result = evaluate(args.tol, *args.args)
    ref = _oracle_value(args.function, args.args, args.tol) if args.oracle else None

    if args.format == "json":
        obj = {
            "function": args.function,
            "args": [_json_num(a) for a in args.args],
            "tol": args.tol,
            "value": _json_num(result.value),
            "error_bound": _json_num(result.error_bound),
            "work": result.work,
        }
        if args.oracle:
            obj["oracle"] = None if ref is None else {"value": ref[0], "error_estimate": ref[1]}
        return _dump_json(obj), EXIT_OK
    if args.format == "csv":
        header = ["function", "value", "error_bound", "work"]
        row = [args.function, _num(result.value), _num(result.error_bound), result.work]
        if args.oracle:
            header += ["oracle_value", "oracle_error"]
            row += ["", ""] if ref is None else [_num(ref[0]), _num(ref[1])]
        return _dump_csv(header, [row]), EXIT_OK
    call = f"{args.function}({', '.join(_num(a) for a in args.args)})"
    lines = [
        call,
        f"  value       = {_num(result.value)}",
        f"  error_bound = {_num(result.error_bound)}",
        f"  work        = {result.work}",
    ]
    if args.oracle:
        if ref is None:
            lines.append("  oracle      = unavailable for this function/argument")
        else:
            lines.append(f"  oracle      = {_num(ref[0])} (error estimate {_num(ref[1])})")
            lines.append(f"  difference  = {_num(result.value - ref[0])}")
    return "\n".join(lines) + "\n", EXIT_OK


# constants ----------------------------------------------------------------

def cmd_constants(args):
    bundle = be.constants_bundle(max(args.tol, 1e-12)).as_dict()
    check = oracle.constants_crosscheck(max(args.tol, 1e-11)) if args.oracle else None

    if args.format == "json":
        obj = {k: {"value": r.value, "error_bound": r.error_bound} for k, r in bundle.items()}
        return _dump_json(obj), EXIT_OK
    if args.format == "csv":
        rows = [[k, _num(r.value), _num(r.error_bound)] for k, r in bundle.items()]
        return _dump_csv(["name", "value", "error_bound"], rows), EXIT_OK
    width = max(map(len, bundle))
    lines = [f"{k:<{width}} = {_num(r.value)}  (error bound {_num(r.error_bound)})" for k, r in bundle.items()]
    b = bundle["beta"].value
    lines.append(f"sharp upper factor relative to the legacy 1/4: 4*beta = {_num(4 * b)}")
    if check is not None:
        for route, value in check.values.items():
            lines.append(f"beta via {route:<13} = {_num(value)}")
        lines.append(f"route spread = {_num(check.spread)} (tolerance {_num(check.tol)})")
    return "\n".join(lines) + "\n", EXIT_OK


# verify / table -----------------------------------------------------------

def _grid(args):
    return be.GridSpec(args.min, args.max, args.count, args.spacing)


def _record_row(r):
    return (r.x, r.lower, r.value, r.upper, r.ratio, r.lower_margin, r.upper_margin)


def cmd_verify(args):
    grid = _grid(args)
    bounds = be.verify_bounds(grid, args.mode, args.tol, args.upper_factor)
    if grid.count >= 3:
        mono = be.verify_monotonicity(grid, args.tol, args.mode)
        monotone, drop = mono.monotone, mono.max_adjacent_decrease
    else:
        monotone, drop = bounds.monotone, bounds.max_adjacent_decrease

    oracle_failures = None
    if args.oracle:
        checks = [oracle.check_point(x, args.tol) for x in grid.points()]
        oracle_failures = [c["x"] for c in checks if not (c["arcsl_ok"] and c.get("phi_ok", True))]

    ok = bounds.passed and monotone and not oracle_failures
    code = EXIT_OK if ok else EXIT_FAIL

    if args.format == "csv":
        rows = [[_num(v) for v in _record_row(r)] for r in bounds.records]
        return _dump_csv(RECORD_COLUMNS, rows), code
    if args.format == "json":
        obj = bounds.summary()
        obj["bounds_passed"] = bounds.passed
        obj["monotone"] = monotone
        obj["max_adjacent_decrease"] = drop
        obj["passed"] = ok
        obj["violations"] = [
            {**{k: _json_num(v) for k, v in zip(RECORD_COLUMNS, _record_row(r))}, "message": r.message}
            for r in bounds.violations
        ]
        obj["min_ratio"] = _json_num(bounds.min_ratio)
        obj["max_ratio"] = _json_num(bounds.max_ratio)
        if oracle_failures is not None:
            obj["oracle_failures"] = oracle_failures
        return _dump_json(obj), code

    lines = [
        f"mode: {args.mode} (upper factor {_num(bounds.upper_factor)})",
        f"grid: {grid.count} {grid.spacing} points on [{_num(grid.x_min)}, {_num(grid.x_max)}]",
        f"bounds: {'PASS' if bounds.passed else 'FAIL'} ({len(bounds.violations)} violations)",
        f"monotonicity of F: {'PASS' if monotone else 'FAIL'} (max adjacent decrease {_num(drop)})",
        f"F range: [{_num(bounds.min_ratio)}, {_num(bounds.max_ratio)}]",
    ]
    if oracle_failures is not None:
        lines.append(f"oracle agreement: {'PASS' if not oracle_failures else 'FAIL'} "
                     f"({len(oracle_failures)} disagreeing points)")
    for r in bounds.violations:
        if r.message is not None:
            lines.append(f"  x={_num(r.x)}: {r.message}")
        else:
            lines.append(
                f"  x={_num(r.x)}: lower_margin={_num(r.lower_margin)} upper_margin={_num(r.upper_margin)}"
            )
    lines.append("overall: " + ("PASS" if ok else "FAIL"))
    return "\n".join(lines) + "\n", code


def cmd_table(args):
    columns = [c.strip() for c in args.columns.split(",") if c.strip()]
    if not columns:
        raise UsageError("--columns needs at least one column")
    unknown = [c for c in columns if c not in TABLE_COLUMNS]
    if unknown:
        raise UsageError(f"unknown column(s) {', '.join(unknown)}; choose from {', '.join(TABLE_COLUMNS)}")
    rows = [be.envelope(x, args.tol) for x in _grid(args).points()]

    if args.format == "json":
        return _dump_json([{c: row[c] for c in columns} for row in rows]), EXIT_OK
    if args.format == "csv":
        return _dump_csv(columns, [[_num(row[c]) for c in columns] for row in rows]), EXIT_OK
    cells = [columns] + [[_num(row[c]) for c in columns] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    return "".join("  ".join(v.rjust(w) for v, w in zip(r, widths)) + "\n" for r in cells), EXIT_OK


# parser -------------------------------------------------------------------

def _positive_int(text):
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


def _add_common(p, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--tol", type=float, default=default(DEFAULT_TOL),
                   help=f"absolute tolerance (default {DEFAULT_TOL:g}, floor {TOL_FLOOR:g})")
    p.add_argument("--format", choices=FORMATS, default=default("text"), help="output format")
    p.add_argument("--oracle", action="store_true", default=default(False),
                   help="cross-check against the slow reference implementations")


def _add_grid(p, count=1000):
    p.add_argument("--min", type=float, default=0.001, help="smallest grid point (default 0.001)")
    p.add_argument("--max", type=float, default=0.999, help="largest grid point (default 0.999)")
    p.add_argument("--count", type=_positive_int, default=count, help=f"number of points (default {count})")
    p.add_argument("--spacing", choices=be.SPACINGS, default="uniform")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcsl-bounds",
        description="Evaluate arcsl, Lerch Phi, Hurwitz zeta, Gamma/Beta and verify "
                    "the sharp bounds for arcsl(x).",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate one function")
    p.add_argument("function", choices=sorted(EVALUATORS))
    p.add_argument("args", nargs="*", type=float)

    sub.add_parser("constants", parents=[common], help="print alpha, beta and related constants")

    p = sub.add_parser("verify", parents=[common], help="verify the bounds on a grid")
    _add_grid(p)
    p.add_argument("--mode", choices=be.MODES, default="sharp")
    p.add_argument("--upper-factor", type=float, default=None, help=argparse.SUPPRESS)

    p = sub.add_parser("table", parents=[common], help="emit arcsl and its bounds on a grid")
    _add_grid(p, count=101)
    p.add_argument("--columns", default=",".join(TABLE_COLUMNS),
                   help=f"comma-separated subset of {','.join(TABLE_COLUMNS)}")
    return parser


COMMANDS = {"eval": cmd_eval, "constants": cmd_constants, "verify": cmd_verify, "table": cmd_table}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not (args.tol >= TOL_FLOOR):
        parser.error(f"--tol must be >= {TOL_FLOOR:g}")
    try:
        text, code = COMMANDS[args.command](args)
    except (UsageError, DomainError, ToleranceError, GammaOverflowError) as exc:
        print(f"arcsl-bounds: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WorkLimitError as exc:
        print(f"arcsl-bounds: work budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
