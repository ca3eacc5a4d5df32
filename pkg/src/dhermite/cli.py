"""Command-line front end.

Usage::

    dhermite eval --n 2 --x 1 --y 1 --lambda 1
    dhermite coeffs --n 4 --format csv
    dhermite verify --variant both --json report.json
    dhermite ortho --n 0 --m 0 --lambda 1
    dhermite gf-even --t 0.05 --x 1 --y 1 --lambda 1
    dhermite nodhf --mu 1 --x 2 --y 0 --lambda 1
    dhermite heat --n 4 --lambda 1

Exit codes: 0 success, 1 a check failed, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import numeric as nm
from . import verify as vf
from .core import DivergenceError, DomainError, make_param
from .hermite import MAX_ORDER, bvdhp


class UsageError(Exception):
    pass


def _fmt(v) -> str:
    if isinstance(v, complex):
        return f"{v.real:.15g}{v.imag:+.15g}j"
    return f"{v:.15g}"


def _order(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"order must be nonnegative, got {n}")
    if n > MAX_ORDER:
        raise argparse.ArgumentTypeError(f"order must be <= {MAX_ORDER}")
    return n


def _emit(args, record: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps({k: (_fmt_json(v)) for k, v in record.items()}))
    else:
        print(text)


def _fmt_json(v):
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    return v


def cmd_eval(args) -> int:
    p = make_param(args.lam)
    val = nm.eval_bvdhp(args.n, args.x, args.y, p)
    _emit(args, {"n": args.n, "x": args.x, "y": args.y, "lambda": args.lam,
                 "value": val}, _fmt(val))
    return 0


def cmd_coeffs(args) -> int:
    records = bvdhp(args.n).to_records()
    if args.format == "json":
        print(json.dumps(records))
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["ex", "ey", "eL", "num", "den"],
                           lineterminator="\n")
        w.writeheader()
        w.writerows(records)
        sys.stdout.write(buf.getvalue())
    return 0


def cmd_verify(args) -> int:
    if args.check:
        if args.check not in vf.REGISTRY:
            raise UsageError(f"unknown check {args.check!r}; "
                             f"known: {', '.join(vf.check_names())}")
        check = vf.REGISTRY[args.check]
        reports = [check.fn(variant=v) for v in vf.variants_for(check, args.variant)]
    else:
        reports = vf.run_all(args.variant)
    if args.json:
        vf.write_report(reports, args.json)
    if args.format == "json":
        sys.stdout.write(vf.reports_to_json(reports))
    else:
        print(f"{'check':24s} {'variant':10s} {'status':11s} {'residual':>12s} {'tolerance':>10s}")
        for r in reports:
            print(f"{r.check_name:24s} {r.variant:10s} {r.status:11s} "
                  f"{r.residual:12.3e} {r.tolerance:10.1e}")
    return 0 if vf.aggregate_pass(reports) else 1


def cmd_ortho(args) -> int:
    p = make_param(args.lam)
    if args.y is None:
        val, err = nm.ortho_dhp(args.n, args.m, p, full_output=True)
        norm = nm.dhp_norm(args.n, p) if args.n == args.m else 0.0
    else:
        val, err = nm.partial_ortho(args.n, args.m, args.y, p, args.variant,
                                    full_output=True)
        norm = nm.partial_norm(args.n, args.y, p) if args.n == args.m else 0.0
    _emit(args, {"n": args.n, "m": args.m, "y": args.y, "lambda": args.lam,
                 "variant": args.variant, "value": val, "error": err,
                 "closed_form": norm}, _fmt(val))
    return 0


def cmd_gf_even(args) -> int:
    p = make_param(args.lam)
    closed, series = nm.even_gf(nm.GFPoint(args.t, args.x, args.y, p), args.variant,
                                args.N)
    _emit(args, {"t": args.t, "x": args.x, "y": args.y, "lambda": args.lam,
                 "variant": args.variant, "N": args.N, "closed": closed,
                 "series": series}, _fmt(closed))
    return 0


def cmd_nodhf(args) -> int:
    p = make_param(args.lam)
    val = nm.nodhf(args.mu, args.x, args.y, p, args.variant)
    _emit(args, {"mu": args.mu, "x": args.x, "y": args.y, "lambda": args.lam,
                 "variant": args.variant, "value": val}, _fmt(val))
    return 0


def cmd_heat(args) -> int:
    p = make_param(args.lam)
    grid = vf.HeatGrid(args.x_min, args.x_max, args.dx, args.y_max, args.dy)
    rep = vf.heat_fd_check(args.n, p, grid, args.tolerance)
    if args.format == "json":
        print(json.dumps(rep.to_dict()))
    else:
        print(f"{rep.status} residual={_fmt(rep.residual)} tolerance={rep.tolerance:g}")
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dhermite",
                                 description="Bivariate degenerate Hermite polynomials")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("text", "json"), default="text"):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("eval", help="evaluate H_n(x, y|lambda)")
    p.add_argument("--n", type=_order, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    fmt(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("coeffs", help="dump exact coefficients of H_n")
    p.add_argument("--n", type=_order, required=True)
    fmt(p, ("json", "csv"), "csv")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("--check")
    p.add_argument("--variant", choices=("paper", "corrected", "both"), default="corrected")
    p.add_argument("--json", metavar="PATH")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ortho", help="orthogonality integrals (partial when --y is given)")
    p.add_argument("--n", type=_order, required=True)
    p.add_argument("--m", type=_order, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--y", type=float)
    p.add_argument("--variant", choices=("paper", "corrected"), default="corrected")
    fmt(p)
    p.set_defaults(func=cmd_ortho)

    p = sub.add_parser("gf-even", help="even-index generating function")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--variant", choices=("paper", "corrected"), default="corrected")
    p.add_argument("--N", type=int, default=30)
    fmt(p)
    p.set_defaults(func=cmd_gf_even)

    p = sub.add_parser("nodhf", help="negative-order degenerate Hermite function")
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--variant", choices=("L-consistent", "paper"), default="L-consistent")
    fmt(p)
    p.set_defaults(func=cmd_nodhf)

    p = sub.add_parser("heat", help="finite-difference heat-equation check")
    p.add_argument("--n", type=_order, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--x-min", type=float, default=-5.0)
    p.add_argument("--x-max", type=float, default=5.0)
    p.add_argument("--dx", type=float, default=0.01)
    p.add_argument("--y-max", type=float, default=0.1)
    p.add_argument("--dy", type=float)
    p.add_argument("--tolerance", type=float, default=1e-3)
    fmt(p)
    p.set_defaults(func=cmd_heat)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, DomainError, DivergenceError, vf.StabilityError) as exc:
        print(f"dhermite {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
