"""Command-line front end: ``ucat``, ``decompose``, ``verify``, ``scan`` and
``plot``.

Exit codes: 0 success, 1 a check failed, 2 the input could not be parsed or
is not supported by the command, 3 the exponent is not supported.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import datasets, exact
from .circle import CirclePL, decompose_circle, ucat_circle_detail
from .circle import power as circle_power
from .errors import UnimodalError, UnsupportedExponent
from .line import CLOSED_INTERVAL, PLFunction, extend_hat, power
from .scans import run_scan
from .serialize import dumps, function_json, parse_function
from .svg import write_svg
from .sweep import (decompose_interval, decompose_line, forced_max_certificate,
                    sweep, ucat_interval)

EXIT_FAIL, EXIT_PARSE, EXIT_EXPONENT = 1, 2, 3


class InputError(Exception):
    pass


def _read_input(args):
    if args.literal is not None:
        text = args.literal
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(str(e)) from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON: {e}") from None
    return _function_from(doc)


def _function_from(doc):
    """A function literal, or the target of a dataset document."""
    if not isinstance(doc, dict):
        raise InputError("expected a JSON object")
    try:
        if "domain" in doc:
            return parse_function(doc)
        if "functions" in doc and "target" in doc:
            return datasets._build_functions(doc)[doc["target"]]
    except UnsupportedExponent:
        raise
    except (UnimodalError, ValueError, KeyError, TypeError) as e:
        raise InputError(f"{type(e).__name__}: {e}") from None
    raise InputError("expected a function literal or a dataset document")


def _parse_p(text):
    if text.strip().lower() in ("inf", "infinity", "oo"):
        raise UnsupportedExponent("p = infinity is only meaningful for "
                                  "graph and plane datasets; see 'verify'")
    try:
        return exact.to_exponent(text)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad exponent {text!r}: {e}") from None


def _position(x):
    if isinstance(x, float):
        return {"approx": repr(x)}
    return str(x)


def _require_exact_carrier(f):
    if not isinstance(f, (PLFunction, CirclePL)):
        raise InputError("exact ucat is computed on the line, an interval or "
                         "the circle; for graphs and planes use 'verify' on a "
                         "dataset with stated decompositions and bounds")


def cmd_ucat(args):
    f = _read_input(args)
    _require_exact_carrier(f)
    p = _parse_p(args.p)
    if isinstance(f, CirclePL):
        d = ucat_circle_detail(f, p)
        out = {"ucat": d.n, "p": str(p)}
        if d.zero_cut is not None:
            out["cut_at_zero"] = str(d.zero_cut)
        else:
            out["slice_point"] = str(d.slice_point)
            out["m_a_plus"] = d.m_a_plus
        return out, 0
    g = power(f, p)
    if g.domain == CLOSED_INTERVAL:
        res = ucat_interval(g)
        hat = extend_hat(g)
        pts = sweep(hat)
        return {"ucat": res.n, "p": str(p),
                "hat_sweep_points": [_position(q.position) for q in pts],
                "certificate": forced_max_certificate(hat, pts).to_json()}, 0
    pts = sweep(g)
    return {"ucat": len(pts), "p": str(p),
            "sweep_points": [_position(q.position) for q in pts],
            "certificate": forced_max_certificate(g, pts).to_json()}, 0


def _exact_levels(f, p):
    g = power(f, p)
    if g.exponent != 1:
        levels = [exact.power(v, g.exponent) for v in g.values]
        if not all(exact.is_exact_rational(v) for v in levels):
            raise UnsupportedExponent("the powered levels are irrational; "
                                      "explicit summands need rational levels")
        g = PLFunction(g.breakpoints, tuple(levels), g.domain, Fraction(1))
    return g


def cmd_decompose(args):
    f = _read_input(args)
    _require_exact_carrier(f)
    p = _parse_p(args.p)
    if isinstance(f, CirclePL):
        levels = circle_power(f, p).levels
        if not all(exact.is_exact_rational(v) for v in levels):
            raise UnsupportedExponent("the powered levels are irrational; "
                                      "explicit summands need rational levels")
        d = decompose_circle(CirclePL(f.angles, tuple(levels)))
        if d is None:
            return {"error": "no explicit circle decomposition found"}, EXIT_FAIL
        return {"count": len(d.summands), "slice_point": str(d.slice_point),
                "summands": [function_json(u) for u in d.summands]}, 0
    g = _exact_levels(f, p)
    if g.domain == CLOSED_INTERVAL:
        d = decompose_interval(g)
        pic = extend_hat(g)
    else:
        d = decompose_line(g)
        pic = g
    out = {"count": len(d.summands), "rule": "sum",
           "mode_points": [str(m) for m in d.mode_points or ()],
           "summands": [function_json(u) for u in d.summands]}
    if args.svg:
        write_svg(args.svg, pic, True, "f, g, h, broken line and summands")
        out["svg"] = args.svg
    return out, 0


def cmd_plot(args):
    f = _read_input(args)
    if not isinstance(f, PLFunction):
        raise InputError("plots are drawn for line and interval functions")
    g = _exact_levels(f, _parse_p(args.p))
    if g.domain == CLOSED_INTERVAL:
        g = extend_hat(g)
    write_svg(args.svg, g, args.summands, "f with its variations g and h")
    return {"svg": args.svg}, 0


def cmd_verify(args):
    names = None if args.all else [args.dataset]
    if not args.all:
        try:
            datasets._resolve(args.dataset, None)
        except UnimodalError as e:
            raise InputError(str(e)) from None
    report = datasets.verify_all(names)
    text = dumps(report) if args.json else datasets.report_text(report)
    return text, 0 if report["ok"] else EXIT_FAIL


def cmd_scan(args):
    ps = [s for s in args.p_list.split(",") if s.strip()] if args.p_list else None
    if args.trials < 1:
        raise InputError("--trials must be at least 1")
    if ps:
        for s in ps:
            _parse_p(s)
    report = run_scan(args.kind, args.trials, ps, args.seed)
    return report, 0 if report["violations"] == 0 else EXIT_FAIL


def _add_input(p, required=True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--input", metavar="FILE",
                   help="JSON function literal or dataset file")
    g.add_argument("--literal", metavar="JSON", help="inline function literal")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="ucat", description="Unimodal category of piecewise linear functions.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ucat", help="exact unimodal category on line or circle")
    _add_input(p)
    p.add_argument("--p", default="1", help="exponent, rational or decimal")
    p.set_defaults(run=cmd_ucat)

    p = sub.add_parser("decompose", help="explicit minimal unimodal sum")
    _add_input(p)
    p.add_argument("--p", default="1")
    p.add_argument("--svg", metavar="PATH", help="also draw the decomposition")
    p.set_defaults(run=cmd_decompose)

    p = sub.add_parser("verify", help="check the claims of shipped datasets")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--dataset", metavar="NAME")
    g.add_argument("--all", action="store_true")
    p.add_argument("--json", action="store_true", help="JSON report")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("scan", help="randomized property scans")
    p.add_argument("--kind", required=True,
                   choices=["line", "circle", "tree", "updown", "oracle"])
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--p-list", help="comma-separated exponents")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_scan)

    p = sub.add_parser("plot", help="SVG of f and its cumulative variations")
    _add_input(p)
    p.add_argument("--p", default="1")
    p.add_argument("--svg", metavar="PATH", required=True)
    p.add_argument("--summands", action="store_true", help="draw the summands too")
    p.set_defaults(run=cmd_plot)
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        result, code = args.run(args)
    except UnsupportedExponent as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_EXPONENT
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except UnimodalError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_PARSE
    out.write(result if isinstance(result, str) else dumps(result))
    out.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
