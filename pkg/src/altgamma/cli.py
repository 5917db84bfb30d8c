"""Command-line front end.

    altgamma eval tilde-gamma 1
    altgamma table tilde-digamma linear 1 2 2 --format csv
    altgamma verify lerch
    altgamma constants

Exit status: 0 success, 1 verification failure, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from typing import Callable

from .alt_zeta import (
    alt_hurwitz_zeta,
    alt_zeta_deriv0,
    alt_zeta_deriv0_const,
    eta,
    euler_constant_tilde,
)
from .classical import beta_function, digamma, gauss_2f1_unit, hurwitz_zeta, log_gamma, polygamma
from .errors import DomainError, ParameterError
from .results import DEFAULT_CONFIG, EvalConfig, ExtendedPoint, PointKind
from .tilde_digamma import tilde_digamma, tilde_polygamma
from .tilde_gamma import log_tilde_gamma, tilde_gamma, tilde_gamma_extended, tilde_gamma_integer
from .verification import IDENTITIES, GridSpec, default_grids, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
FORMATS = ("json", "csv", "plain")
FORMAT_ENV = "ALTGAMMA_FORMAT"

# name -> (arity, evaluator(args, config))
FUNCTIONS: dict[str, tuple[int, Callable]] = {
    "tilde-gamma": (1, lambda a, c: tilde_gamma(a[0], c)),
    "log-tilde-gamma": (1, lambda a, c: log_tilde_gamma(a[0], c)),
    "tilde-gamma-extended": (1, lambda a, c: tilde_gamma_extended(a[0], c)),
    "tilde-digamma": (1, lambda a, c: tilde_digamma(a[0], c)),
    "tilde-polygamma": (2, lambda a, c: tilde_polygamma(a[0], a[1], c)),
    "alt-zeta": (2, lambda a, c: alt_hurwitz_zeta(a[0], a[1], c)),
    "alt-zeta-deriv0": (1, lambda a, c: alt_zeta_deriv0(a[0], c)),
    "eta": (1, lambda a, c: eta(a[0], c)),
    "hurwitz-zeta": (2, lambda a, c: hurwitz_zeta(a[0], a[1], c)),
    "log-gamma": (1, lambda a, c: log_gamma(a[0], c)),
    "digamma": (1, lambda a, c: digamma(a[0], c)),
    "polygamma": (2, lambda a, c: polygamma(a[0], a[1], c)),
    "beta": (2, lambda a, c: beta_function(a[0], a[1], c)),
    "2f1-unit": (3, lambda a, c: gauss_2f1_unit(a[0], a[1], a[2], c)),
}


class UsageError(Exception):
    pass


def _num(v):
    """JSON-safe float: non-finite values become null."""
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def _sanitize(obj):
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    return _num(obj)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _payload(result) -> dict:
    if isinstance(result, ExtendedPoint):
        return {
            "kind": result.kind.value,
            "value": result.value,
            "abs_error_estimate": result.abs_error_estimate,
        }
    out = {"kind": PointKind.FINITE.value}
    out.update(result.as_dict())
    return out


def _cell(result) -> tuple:
    """(value cell, error) for a table row."""
    if isinstance(result, ExtendedPoint):
        if result.kind is PointKind.POLE:
            return "pole", 0.0
        if result.kind is PointKind.ZERO:
            return "0", 0.0
        return result.value, result.abs_error_estimate
    return result.value, result.abs_error_estimate


def _lookup(name: str) -> tuple[int, Callable]:
    try:
        return FUNCTIONS[name]
    except KeyError:
        raise UsageError(f"unknown function {name!r}; choose from {', '.join(FUNCTIONS)}")


def cmd_eval(name: str, args: list[float], config: EvalConfig, fmt: str) -> tuple[str, int]:
    arity, fn = _lookup(name)
    if len(args) != arity:
        raise UsageError(f"{name} takes {arity} argument(s), got {len(args)}")
    payload = _payload(fn(args, config))
    if fmt == "json":
        doc = {"function": name, "args": args, **payload}
        return json.dumps(_sanitize(doc)), EXIT_OK
    if fmt == "csv":
        return _csv(list(payload), [list(payload.values())]), EXIT_OK
    return "\n".join(f"{k}: {_fmt(v)}" for k, v in payload.items()), EXIT_OK


def cmd_table(name: str, grid: GridSpec, config: EvalConfig, fmt: str) -> tuple[str, int]:
    arity, fn = _lookup(name)
    if arity != 1:
        raise UsageError(f"table needs a single-variable function; {name} takes {arity}")
    rows = []
    for x in grid.points():
        value, err = _cell(fn([x], config))
        rows.append([x, value, err])
    header = ["x", "value", "abs_error_estimate"]
    if fmt == "json":
        doc = {"function": name, "rows": [dict(zip(header, r)) for r in rows]}
        return json.dumps(_sanitize(doc)), EXIT_OK
    if fmt == "csv":
        return _csv(header, rows), EXIT_OK
    lines = ["  ".join(f"{h:>24}" for h in header)]
    lines += ["  ".join(f"{_fmt(v):>24}" for v in r) for r in rows]
    return "\n".join(lines), EXIT_OK


def cmd_verify(ids: list[str], config: EvalConfig, fmt: str) -> tuple[str, int]:
    unknown = [i for i in ids if i not in IDENTITIES]
    if unknown:
        raise UsageError(f"unknown identity id(s): {', '.join(unknown)}")
    grids = {i: None for i in ids} if ids else default_grids()
    report = run_suite(grids, config)
    code = EXIT_OK if report.passed else EXIT_FAIL
    if fmt == "json":
        return json.dumps(_sanitize(report.as_dict())), code
    if fmt == "csv":
        header = ["id", "inputs", "lhs", "rhs", "abs_residual", "rel_residual", "pass"]
        rows = [[r.identity_id, ";".join(f"{k}={_fmt(v)}" for k, v in r.inputs), r.lhs, r.rhs,
                 r.abs_residual, r.rel_residual, r.passed] for r in report.records]
        return _csv(header, rows), code
    lines = [f"{'PASS' if s.fail_count == 0 else 'FAIL'}  {s.identity_id:<30} "
             f"records={s.count:<5} max_residual={s.max_residual:.3e}"
             for s in report.summaries]
    lines.append(f"overall: {'pass' if report.passed else 'FAIL'}")
    return "\n".join(lines), code


def constants() -> list[dict]:
    entries = [
        ("gamma_tilde_0", euler_constant_tilde()),
        ("alt_zeta_deriv0", alt_zeta_deriv0_const()),
        ("tilde_gamma_1", tilde_gamma_integer(1)),
        ("tilde_gamma_2", tilde_gamma_integer(2)),
    ]
    return [{"name": name, "exact": str(sv), "numeric": sv.numeric} for name, sv in entries]


def cmd_constants(fmt: str) -> tuple[str, int]:
    items = constants()
    if fmt == "json":
        return json.dumps({"constants": items}), EXIT_OK
    if fmt == "csv":
        return _csv(["name", "exact", "numeric"],
                    [[c["name"], c["exact"], c["numeric"]] for c in items]), EXIT_OK
    return "\n".join(f"{c['name']:<16} = {c['exact']:<32} ~ {_fmt(c['numeric'])}"
                     for c in items), EXIT_OK


def _number(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                        help=f"output format (default: ${FORMAT_ENV} or json)")
    common.add_argument("--tol", type=_number, default=argparse.SUPPRESS,
                        help="target absolute error")
    common.add_argument("--max-terms", type=int, default=argparse.SUPPRESS)
    common.add_argument("--quad-levels", type=int, default=argparse.SUPPRESS,
                        help="maximum step halvings in quadrature")

    parser = argparse.ArgumentParser(prog="altgamma", parents=[common],
                                     description="Alternating Hurwitz zeta and Gamma~ toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a function at a point")
    p.add_argument("function")
    p.add_argument("args", nargs="*", type=_number)

    p = sub.add_parser("table", parents=[common], help="tabulate a function over a grid")
    p.add_argument("function")
    p.add_argument("spacing", choices=("linear", "logarithmic"))
    p.add_argument("start", type=_number)
    p.add_argument("stop", type=_number)
    p.add_argument("count", type=int)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("ids", nargs="*", metavar="identity")

    sub.add_parser("constants", parents=[common], help="print exact constants")
    return parser


def _config(ns) -> EvalConfig:
    return DEFAULT_CONFIG.with_overrides(
        target_abs_error=getattr(ns, "tol", None),
        max_terms=getattr(ns, "max_terms", None),
        quadrature_levels=getattr(ns, "quad_levels", None),
    )


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    fmt = getattr(ns, "format", None) or os.environ.get(FORMAT_ENV) or "json"
    try:
        if fmt not in FORMATS:
            raise UsageError(f"{FORMAT_ENV}={fmt!r} is not one of {', '.join(FORMATS)}")
        config = _config(ns)
        if ns.command == "eval":
            out, code = cmd_eval(ns.function, ns.args, config, fmt)
        elif ns.command == "table":
            grid = GridSpec(ns.start, ns.stop, ns.count, ns.spacing)
            out, code = cmd_table(ns.function, grid, config, fmt)
        elif ns.command == "verify":
            out, code = cmd_verify(ns.ids, config, fmt)
        else:
            out, code = cmd_constants(fmt)
    except (UsageError, ParameterError) as exc:
        print(f"altgamma: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"altgamma: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
