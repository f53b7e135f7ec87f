"""Command-line interface: ``wrightkit {eval,check,figure,invert}``.

Exit codes
----------
0  success
1  ``check``: at least one record missed its expectation
2  invalid arguments or parameters (including unknown flags)
3  engine error: term cap, precision budget, overflow or contour check
4  I/O error writing an output file
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from ._precision import parse_number
from .closed_forms import closed_form
from .errors import (
    ContourError,
    ConvergenceError,
    DomainError,
    GammaOverflowError,
    PrecisionError,
    RegistryError,
)
from .figures import FIGURE_IDS, FigureSpec, write_figure
from .identities import run_all
from .laplace import ContourSpec, invert
from .wright import WrightParams, wright_series

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_ENGINE = 3
EXIT_IO = 4

_ENGINE_ERRORS = (ConvergenceError, PrecisionError, GammaOverflowError, ContourError)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with code 2 and keeps messages on stderr."""

    def error(self, message):  # pragma: no cover - exercised via main()
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _number(text: str):
    try:
        return parse_number(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fmt(v: float) -> str:
    return format(v, ".17g")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wrightkit", description="Wright functions of the second kind: "
                     "evaluation, identity checks, figure data and Laplace inversion.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate W_{lambda,mu}(z)")
    g = ev.add_mutually_exclusive_group(required=True)
    g.add_argument("--lambda", dest="lam", type=_number, help="lambda (> -1)")
    g.add_argument("--nu", type=_number, help="nu in (0,1); sets lambda = -nu")
    ev.add_argument("--mu", type=_number, required=True)
    ev.add_argument("--second-kind", action="store_true",
                    help="require a second-kind function (lambda < 0)")
    a = ev.add_mutually_exclusive_group(required=True)
    a.add_argument("--z", type=_number, help="argument z")
    a.add_argument("--x", type=_number, help="evaluate at z = -x")
    ev.add_argument("--rel-tol", type=float, default=1e-12)
    ev.add_argument("--method", choices=("series", "closed", "both"), default="series")

    ck = sub.add_parser("check", help="run the identity suite")
    ck.add_argument("--id", action="append", dest="ids", help="record id (repeatable)")
    ck.add_argument("--grid-points", type=int, default=41)
    ck.add_argument("--out", default=None, help="JSON report path (default: stdout)")

    fg = sub.add_parser("figure", help="write figure data as CSV")
    fg.add_argument("id", choices=FIGURE_IDS)
    fg.add_argument("--out", required=True, help="CSV path; two-panel figures add _vs_t/_vs_x")
    fg.add_argument("--points", type=int, default=500)
    fg.add_argument("--log", action="store_true", help="log-spaced abscissa")

    iv = sub.add_parser("invert", help="numerical Laplace inversion vs the Wright pair")
    iv.add_argument("--nu", type=_number, required=True)
    iv.add_argument("--mu", type=_number, required=True)
    iv.add_argument("--x", type=float, required=True)
    iv.add_argument("--t", type=float, required=True)
    iv.add_argument("--nodes", type=int, default=ContourSpec().node_count)
    return parser


def _cmd_eval(args) -> int:
    if args.nu is not None:
        if not 0 < args.nu < 1:
            raise DomainError(f"--nu must lie in (0, 1), got {float(args.nu)}")
        lam = -args.nu
    else:
        lam = args.lam
        if args.second_kind and not -1 < lam < 0:
            raise DomainError("--second-kind requires -1 < lambda < 0")
    z = -args.x if args.x is not None else args.z
    p = WrightParams(lam, args.mu)
    out = []
    series = None
    if args.method in ("series", "both"):
        series = wright_series(p, z, args.rel_tol)
    if args.method in ("closed", "both"):
        if not p.second_kind:
            raise DomainError("closed forms exist only for the second kind")
        if z == 0:
            raise DomainError("closed forms need a nonzero argument")
        cf = closed_form(-lam, args.mu, "+" if z > 0 else "-", abs(z))
        if series is None:
            out = [f"value={_fmt(cf.value)}", "terms_used=0", f"err_estimate={cf.err_estimate:.3e}",
                   "method=closed"]
        else:
            out = [f"series={_fmt(series.value)}", f"closed={_fmt(cf.value)}",
                   f"difference={abs(series.value - cf.value):.3e}",
                   f"terms_used={series.terms_used}", f"err_estimate={series.err_estimate:.3e}"]
    else:
        out = [f"value={_fmt(series.value)}", f"terms_used={series.terms_used}",
               f"err_estimate={series.err_estimate:.3e}", "method=series"]
    print(" ".join(out))
    return EXIT_OK


def _cmd_check(args) -> int:
    report = run_all(args.grid_points, ids=args.ids)
    text = report.dumps()
    if args.out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"wrightkit: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
        for r in report.records:
            print(f"{r.status.upper():4s} {r.id} max_rel_err={r.max_rel_err:.3e}")
        s = report.summary
        print(f"{s['passed']}/{s['total']} records met their expectation")
    return EXIT_OK if report.all_passed else EXIT_CHECK_FAILED


def _cmd_figure(args) -> int:
    spec = FigureSpec(args.id, points=args.points, log=args.log)
    try:
        paths = write_figure(spec, args.out)
    except OSError as exc:
        print(f"wrightkit: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    for p in paths:
        print(p)
    return EXIT_OK


def _cmd_invert(args) -> int:
    contour = ContourSpec(node_count=args.nodes)
    oracle = invert(args.nu, args.mu, args.x, args.t, contour)
    nu, mu = args.nu, args.mu
    r = wright_series(WrightParams(-nu, mu), -args.x / args.t ** float(nu))
    pair = args.t ** (float(mu) - 1.0) * r.value
    print(f"oracle={_fmt(oracle)} wright={_fmt(pair)} difference={abs(oracle - pair):.3e}")
    return EXIT_OK


_COMMANDS = {"eval": _cmd_eval, "check": _cmd_check, "figure": _cmd_figure, "invert": _cmd_invert}


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except _ENGINE_ERRORS as exc:
        print(f"wrightkit: engine error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    except (DomainError, RegistryError) as exc:
        print(f"wrightkit: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"wrightkit: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
