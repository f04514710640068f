"""Command-line surface: JSON reports over every module.

Output contract: a single JSON document on stdout with fields
{schema_version, inputs, results, diagnostics}.  The inputs block echoes
every flag including defaults, so replaying it reproduces the results
bit-for-bit.  Floats are serialized with 17 significant digits; +-inf
and nan become the strings "inf", "-inf", "nan".  Exit codes: 0 success,
1 usage error (including unknown names), 2 domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from enum import Enum
from fractions import Fraction

from . import __version__
from . import acceptance
from . import hypcore as hc
from . import means as mn
from . import regions as rg
from . import seriesoracle as so
from . import sharpness as sp
from .errors import DomainError, InputError

SCHEMA_VERSION = "1.0.0"

EVAL_SIGNATURES = {
    "u": ("t", "p"),
    "sinhc": ("x",),
    "sh": ("x", "p"),
    "ch": ("x", "q"),
    "h": ("x", "p", "q"),
    "d": ("x", "p", "q"),
    "f3": ("x", "p", "q"),
    "m": ("t", "p", "q"),
    "mboundary": ("t", "q"),
}

MEAN_NAMES = ("g", "a", "q", "l", "sb", "ns", "v", "sh")


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage failures exit 1, not argparse's 2."""

    def error(self, message):  # noqa: A003 - argparse API
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _walk(obj, floats: list[float]):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        if math.isnan(obj):
            return "nan"
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        floats.append(obj)
        return f"\x00{len(floats) - 1}\x00"
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {k: _walk(v, floats) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_walk(v, floats) for v in obj]
    return obj


def dumps_report(doc: dict, pretty: bool = False) -> str:
    """Serialize with floats as JSON numbers carrying 17 significant digits.

    Floats become NUL-delimited placeholder strings during the walk
    (json escapes NUL to \\u0000, which cannot occur in real payload
    text) and are patched back in as bare JSON numbers afterwards.
    """
    floats: list[float] = []
    skeleton = json.dumps(_walk(doc, floats), indent=2 if pretty else None)
    return re.sub(
        r'"\\u0000(\d+)\\u0000"',
        lambda m: format(floats[int(m.group(1))], ".17g"),
        skeleton,
    )


def _report(inputs: dict, results: dict, diagnostics: dict | None = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "inputs": inputs,
        "results": results,
        "diagnostics": diagnostics or {},
    }


def _emit(doc: dict, pretty: bool) -> None:
    print(dumps_report(doc, pretty))


# ---------------------------------------------------------------------------
# subcommand handlers (each returns the process exit code)


def _cmd_eval(args) -> int:
    wanted = EVAL_SIGNATURES[args.fn]
    given = {n: getattr(args, n) for n in ("x", "t", "p", "q")}
    missing = [n for n in wanted if given[n] is None]
    extra = [n for n, v in given.items() if v is not None and n not in wanted]
    if missing or extra:
        msgs = []
        if missing:
            msgs.append(f"missing --{' --'.join(missing)}")
        if extra:
            msgs.append(f"unexpected --{' --'.join(extra)}")
        print(f"hypineq eval: error: fn {args.fn!r} takes "
              f"({', '.join('--' + n for n in wanted)}): {'; '.join(msgs)}",
              file=sys.stderr)
        return 1
    fv = hc.evaluate(args.fn, **{n: given[n] for n in wanted})
    inputs = {"subcommand": "eval", "fn": args.fn, **{n: given[n] for n in wanted}}
    _emit(_report(inputs,
                  {"value": fv.value, "branch": fv.branch, "method": fv.method}),
          args.pretty)
    return 0


def _cmd_classify(args) -> int:
    if args.boundary and args.kq is not None:
        print("hypineq classify: error: --kq and --boundary are exclusive",
              file=sys.stderr)
        return 1
    if args.boundary:
        if args.q is None:
            print("hypineq classify: error: --boundary requires --q",
                  file=sys.stderr)
            return 1
        verdict = rg.classify_boundary(args.q)
        inputs = {"subcommand": "classify", "mode": "boundary", "q": args.q}
        results = {
            "direction": verdict.direction,
            "clause": verdict.clause,
            "boundary_note": verdict.boundary_note,
        }
        _emit(_report(inputs, results), args.pretty)
        return 0
    if args.kq is not None:
        if args.q is None:
            print("hypineq classify: error: --kq requires --q", file=sys.stderr)
            return 1
        verdict = rg.classify_kq(args.kq, args.q)
        inputs = {"subcommand": "classify", "mode": "ray", "k": args.kq,
                  "q": args.q}
        results = {
            "direction": verdict.direction,
            "clause": verdict.clause,
            "boundary_note": verdict.boundary_note,
        }
        _emit(_report(inputs, results), args.pretty)
        return 0
    if args.p is None or args.q is None:
        print("hypineq classify: error: plane mode requires --p and --q",
              file=sys.stderr)
        return 1
    verdict = rg.classify(args.p, args.q)
    pband = rg.classify_pbands(args.p, args.q)
    member = rg.membership(args.p, args.q)
    inputs = {"subcommand": "classify", "mode": "plane", "p": args.p,
              "q": args.q}
    results = {
        "direction": verdict.direction,
        "clause": verdict.clause,
        "boundary_note": verdict.boundary_note,
        "pband_clause": pband.clause,
        "membership": {
            "in_i1": member.in_i1,
            "in_i2": member.in_i2,
            "in_omega": member.in_omega,
            "slack": float(member.slack),
        },
    }
    diagnostics = {"pband_direction_agrees": pband.direction is verdict.direction}
    _emit(_report(inputs, results, diagnostics), args.pretty)
    return 0


def _cmd_verify(args) -> int:
    side = sp.Side.SH_GREATER if args.dir == "gt" else sp.Side.SH_LESS
    grid = sp.parse_grid_spec(args.grid)
    verdict = sp.verify(args.p, args.q, side, grid, args.grid)
    inputs = {"subcommand": "verify", "p": args.p, "q": args.q,
              "dir": args.dir, "grid": args.grid}
    results = {
        "holds": verdict.holds,
        "witness_x": verdict.witness_x,
        "margin": verdict.margin,
        "grid_spec": verdict.grid_spec,
        "inconclusive_count": len(verdict.inconclusive_at),
        "notes": verdict.notes,
    }
    diagnostics = {
        "tail_sign": sp.tail_sign(args.p, args.q),
        "asymptote_violates": sp.asymptote_violates(args.p, args.q, side),
    }
    _emit(_report(inputs, results, diagnostics), args.pretty)
    return 0


def _cmd_sharp(args) -> int:
    interval = None
    if (args.lo is None) != (args.hi is None):
        print("hypineq sharp: error: give both --lo and --hi or neither",
              file=sys.stderr)
        return 1
    if args.lo is not None:
        interval = (args.lo, args.hi)
    res = sp.find_threshold(args.family, interval, tol=args.tol)
    fam = sp.get_family(args.family)
    inputs = {"subcommand": "sharp", "family": args.family,
              "lo": interval[0] if interval else fam.default_interval[0],
              "hi": interval[1] if interval else fam.default_interval[1],
              "tol": args.tol}
    results = {
        "threshold": res.threshold,
        "paper_value": res.paper_value,
        "abs_error": res.abs_error,
        "iterations": res.iterations,
        "label": res.label,
    }
    _emit(_report(inputs, results, {"description": fam.description}),
          args.pretty)
    return 0


def _cmd_series(args) -> int:
    if args.frm < 3:
        print("hypineq series: error: --from must be >= 3", file=sys.stderr)
        return 1
    if args.to < args.frm:
        print("hypineq series: error: --to must be >= --from", file=sys.stderr)
        return 1
    records = []
    for n in range(args.frm, args.to + 1):
        rec = so.coeffs(n)
        ok, _, _ = so.identity_check_w(n)
        records.append({
            "n": n, "a": rec.a, "b": rec.b, "c": rec.c,
            "u": rec.u, "v": rec.v, "w": rec.w,
            "ratio": rec.ratio, "w_identity_ok": ok,
        })
    inputs = {"subcommand": "series", "from": args.frm, "to": args.to,
              "emit": args.emit}
    results = {"records": records}
    diagnostics = {}
    if args.emit is not None:
        text = so.emit_constants()
        with open(args.emit, "w", encoding="ascii") as fh:
            fh.write(text)
        diagnostics["emitted"] = args.emit
        diagnostics["emitted_lines"] = len(text.splitlines())
    _emit(_report(inputs, results, diagnostics), args.pretty)
    return 0


def _cmd_means(args) -> int:
    if args.mean == "sh" or (args.shp is not None or args.shq is not None):
        if args.shp is None or args.shq is None:
            print("hypineq means: error: the sh mean requires both --shp "
                  "and --shq", file=sys.stderr)
            return 1
    values: dict[str, float] = {}
    wanted = [args.mean] if args.mean else ["g", "a", "q", "l", "sb", "ns", "v"]
    if args.mean is None and args.shp is not None:
        wanted.append("sh")
    classic = None
    for name in wanted:
        if name in ("g", "a", "q", "l"):
            if classic is None:
                classic = mn.classic_means(args.a, args.b)
            values[name] = classic[name.upper()]
        elif name == "sb":
            values[name] = mn.sb(args.a, args.b)
        elif name == "ns":
            values[name] = mn.ns_mean(args.a, args.b)
        elif name == "v":
            values[name] = mn.v_mean(args.a, args.b)
        else:
            hi, lo = max(args.a, args.b), min(args.a, args.b)
            values[name] = mn.sh_mean(args.shp, args.shq, hi, lo)
    inputs = {"subcommand": "means", "a": args.a, "b": args.b,
              "mean": args.mean, "shp": args.shp, "shq": args.shq}
    _emit(_report(inputs, {"means": values}), args.pretty)
    return 0


def _cmd_report(args) -> int:
    results = acceptance.run_all()
    inputs = {"subcommand": "report", "suite": args.suite}
    all_passed = all(r.passed for r in results)
    doc = _report(inputs, {
        "criteria": [
            {"number": r.number, "title": r.title, "passed": r.passed,
             "detail": r.detail}
            for r in results
        ],
        "all_passed": all_passed,
    })
    _emit(doc, args.pretty)
    return 0 if all_passed else 1


# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="hypineq",
                     description="workbench for a two-parameter family of "
                                 "hyperbolic-function inequalities")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--pretty", action="store_true",
                       help="indent the JSON output")

    p_eval = sub.add_parser("eval", help="evaluate a core function")
    p_eval.add_argument("--fn", required=True, choices=sorted(EVAL_SIGNATURES))
    p_eval.add_argument("--x", type=float)
    p_eval.add_argument("--t", type=float)
    p_eval.add_argument("--p", type=float)
    p_eval.add_argument("--q", type=float)
    add_common(p_eval)
    p_eval.set_defaults(handler=_cmd_eval)

    p_cls = sub.add_parser("classify", help="monotonicity classification")
    p_cls.add_argument("--p", type=float)
    p_cls.add_argument("--q", type=float)
    p_cls.add_argument("--kq", type=float, metavar="K",
                       help="classify along the ray p = K q")
    p_cls.add_argument("--boundary", action="store_true",
                       help="classify along the line p = 3q - 8/5")
    add_common(p_cls)
    p_cls.set_defaults(handler=_cmd_classify)

    p_ver = sub.add_parser("verify", help="sign check of d over a grid")
    p_ver.add_argument("--p", type=float, required=True)
    p_ver.add_argument("--q", type=float, required=True)
    p_ver.add_argument("--dir", required=True, choices=("gt", "lt"),
                       help="gt: claim d >= 0; lt: claim d <= 0")
    p_ver.add_argument("--grid", default=sp.DEFAULT_GRID_SPEC,
                       metavar="log:LO:HI:N")
    add_common(p_ver)
    p_ver.set_defaults(handler=_cmd_verify)

    p_shp = sub.add_parser("sharp", help="bisect a sharpness family")
    p_shp.add_argument("--family", required=True, choices=sp.family_ids())
    p_shp.add_argument("--lo", type=float)
    p_shp.add_argument("--hi", type=float)
    p_shp.add_argument("--tol", type=float, default=1e-9)
    add_common(p_shp)
    p_shp.set_defaults(handler=_cmd_sharp)

    p_ser = sub.add_parser("series", help="exact integer sequences")
    p_ser.add_argument("--from", dest="frm", type=int, required=True,
                       metavar="N")
    p_ser.add_argument("--to", type=int, required=True, metavar="M")
    p_ser.add_argument("--emit", metavar="FILE",
                       help="also write the packaged constants file here")
    add_common(p_ser)
    p_ser.set_defaults(handler=_cmd_series)

    p_mns = sub.add_parser("means", help="bivariate means")
    p_mns.add_argument("--a", type=float, required=True)
    p_mns.add_argument("--b", type=float, required=True)
    p_mns.add_argument("--mean", choices=MEAN_NAMES)
    p_mns.add_argument("--shp", type=float, help="first parameter of sh")
    p_mns.add_argument("--shq", type=float, help="second parameter of sh")
    add_common(p_mns)
    p_mns.set_defaults(handler=_cmd_means)

    p_rep = sub.add_parser("report", help="run a named battery")
    p_rep.add_argument("--suite", required=True, choices=("acceptance",))
    add_common(p_rep)
    p_rep.set_defaults(handler=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        _emit({"schema_version": SCHEMA_VERSION,
               "error": {"type": "DomainError", "message": str(exc)}},
              getattr(args, "pretty", False))
        return 2
    except InputError as exc:
        _emit({"schema_version": SCHEMA_VERSION,
               "error": {"type": "InputError", "message": str(exc)}},
              getattr(args, "pretty", False))
        return 2
