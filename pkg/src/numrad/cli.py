"""Command-line interface.

    numrad compute MATRIX.json [--weight A.json] [--quantity w|r|norm|m|cA|adjoint]
    numrad verify --suite all --trials 1000 --dim 4 --seed 7 [--out report.json] [--format json|csv]
    numrad boundary MATRIX.json [--points 360] [--out boundary.csv]

Exit codes: 0 success, 1 inequality violations found by ``verify``, 2 bad
flags or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from .errors import NumradError
from .kernel import adjoint, dumps_matrix, load_matrix, min_singular_value, op_norm
from .numrange import ThetaSweepConfig, crawford, numerical_radius, range_boundary, spectral_radius
from .suite import SUITE_IDS, run_suite
from .weighted import (
    a_adjoint,
    a_crawford,
    a_min_norm,
    a_norm,
    a_numerical_radius,
    congruence,
    make_weight,
)

QUANTITIES = ("w", "r", "norm", "m", "cA", "adjoint")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def atomic_write(path, text: str) -> None:
    """Write `text` to `path` through a temporary file and a rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _sweep(args) -> ThetaSweepConfig:
    return ThetaSweepConfig(grid_points=args.grid) if args.grid is not None else ThetaSweepConfig()


def cmd_compute(args) -> int:
    T = load_matrix(args.matrix)
    cfg = _sweep(args)
    q = args.quantity
    if args.weight is None:
        if q == "adjoint":
            print(dumps_matrix(adjoint(T)))
            return 0
        value = {
            "w": lambda: numerical_radius(T, cfg),
            "r": lambda: spectral_radius(T),
            "norm": lambda: op_norm(T),
            "m": lambda: crawford(T, cfg),
            "cA": lambda: min_singular_value(T),
        }[q]()
    else:
        W = make_weight(load_matrix(args.weight))
        if q == "adjoint":
            print(dumps_matrix(a_adjoint(W, T)))
            return 0
        value = {
            "w": lambda: a_numerical_radius(W, T, cfg),
            # similarity invariant for strict weights; compressed otherwise
            "r": lambda: spectral_radius(congruence(W, T)),
            "norm": lambda: a_norm(W, T),
            "m": lambda: a_crawford(W, T, cfg),
            "cA": lambda: a_min_norm(W, T),
        }[q]()
    print(_fmt(value))
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.trials, args.dim, args.seed, _sweep(args))
    text = report.to_json() if args.format == "json" else report.to_csv()
    if args.out:
        atomic_write(args.out, text)
        stream = sys.stdout
    else:
        sys.stdout.write(text)
        stream = sys.stderr
    mm = "nan" if report.min_margin is None else f"{report.min_margin:.3e}"
    print(
        f"suite={report.suite_id} trials={report.trials} dim={report.dim} seed={report.seed} "
        f"violations={report.violations} invalid={report.invalid_instances} min_margin={mm}",
        file=stream,
    )
    return 0 if report.violations == 0 else 1


def cmd_boundary(args) -> int:
    T = load_matrix(args.matrix)
    text = range_boundary(T, args.points).to_csv()
    if args.out:
        atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numrad",
        description="Numerical radius quantities and randomized inequality checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--grid", type=int, default=None,
                      help="angle grid points on the full circle (default 32)")

    p = sub.add_parser("compute", parents=[grid], help="evaluate one quantity of a matrix")
    p.add_argument("matrix", help="matrix JSON file")
    p.add_argument("--weight", help="positive semidefinite weight JSON file")
    p.add_argument("--quantity", choices=QUANTITIES, default="w")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", parents=[grid], help="run a randomized inequality suite")
    p.add_argument("--suite", choices=SUITE_IDS, default="all")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="report path (default: standard output)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("boundary", help="support points of the numerical range as CSV")
    p.add_argument("matrix", help="matrix JSON file")
    p.add_argument("--points", type=int, default=360)
    p.add_argument("--out", help="CSV path (default: standard output)")
    p.set_defaults(func=cmd_boundary)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NumradError, ValueError, KeyError, OSError, ArithmeticError) as exc:
        msg = str(exc).strip().splitlines()[0] if str(exc).strip() else type(exc).__name__
        print(f"numrad {args.command}: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
