"""Command-line front end.

Subcommands: symbol, matrix, det, table, verify. Results go to stdout (or
a file via -o); diagnostics go to stderr. Exit codes: 0 on success, 1
when verify finds a failing claim, 2 on invalid input.
"""

import argparse
import os
import sys
from pathlib import Path

from .matrices import CubeDiffPlusOne, DiffPlusC, EvenPowerPlusC, SumPlusC, build_matrix
from .determinant import determinant
from .render import emit_ansi, emit_csv, emit_svg, matrix_text, table_text
from .residues import Prime, cube_root, cubic_residue_symbol
from .tables import EXTENDED_EXTRA_ORDERS, generate_table
from .verify import report_lines, report_text, verify_all

__all__ = ["main", "build_parser"]

DEFAULT_MAX_ORDER = 200
PRIME_CAP = 2**31


def _prime_arg(value: int) -> Prime:
    if value >= PRIME_CAP:
        raise ValueError(f"p must be below 2**31, got {value}")
    return Prime(value)


def _check_order(n: int, max_order: int) -> None:
    if n > max_order:
        raise ValueError(f"order {n} exceeds the cap of {max_order}; raise it with --max-order")


def _formula_args(parser: argparse.ArgumentParser, with_cube: bool) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--diff", action="store_true", help="entries from j - i + c")
    group.add_argument("--sum", action="store_true", help="entries from j + i + c")
    if with_cube:
        group.add_argument("--cube-diff", action="store_true", help="entries from (j - i)**3 + 1")
    group.add_argument("--even-power", action="store_true", help="entries from (j - i)**(2t) + c")
    parser.add_argument("-c", "--shift", type=int, default=0, metavar="C",
                        help="shift c in the formula (default 0)")
    parser.add_argument("--t", type=int, default=1, metavar="T",
                        help="half-exponent t for --even-power (default 1)")


def _formula(args: argparse.Namespace):
    if args.diff:
        return DiffPlusC(args.shift)
    if args.sum:
        return SumPlusC(args.shift)
    if getattr(args, "cube_diff", False):
        return CubeDiffPlusOne()
    return EvenPowerPlusC(args.t, args.shift)


def _write(text: str, path: "str | None") -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_symbol(args: argparse.Namespace) -> int:
    p = _prime_arg(args.p)
    value = cubic_residue_symbol(args.a, p)
    print(value)
    if args.verbose and value == 1:
        x = cube_root(args.a, p)
        print(f"witness: {x}**3 = {args.a % p.value} (mod {p.value})")
    return 0


def _cmd_matrix(args: argparse.Namespace) -> int:
    p = _prime_arg(args.p)
    _check_order(args.n, args.max_order)
    print(matrix_text(build_matrix(_formula(args), p, args.n)))
    return 0


def _cmd_det(args: argparse.Namespace) -> int:
    p = _prime_arg(args.p)
    _check_order(args.n, args.max_order)
    print(determinant(build_matrix(_formula(args), p, args.n)))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    p = _prime_arg(args.p)
    family = "diff" if args.diff else ("sum" if args.sum else "even-power")
    explicit_n = args.n_min is not None or args.n_max is not None
    if args.extended and explicit_n:
        raise ValueError("--extended replaces the default order range; drop --n-min/--n-max")
    n_range = None
    if explicit_n:
        n_range = (args.n_min if args.n_min is not None else 1,
                   args.n_max if args.n_max is not None else p.value)
    c_range = None
    if args.c_min is not None or args.c_max is not None:
        c_range = (args.c_min if args.c_min is not None else 0,
                   args.c_max if args.c_max is not None else 2 * p.value - 1)
    top_order = (n_range[1] if n_range
                 else p.value + EXTENDED_EXTRA_ORDERS if args.extended
                 else p.value)
    _check_order(top_order, args.max_order)
    table = generate_table(family, p, n_range, c_range, t=args.t, extended=args.extended)
    if args.format == "csv":
        out = emit_csv(table)
    elif args.format == "svg":
        out = emit_svg(table, cell_px=args.cell_px)
    elif args.format == "ansi":
        color = not args.no_color and os.environ.get("NO_COLOR") is None
        out = emit_ansi(table, color=color)
    else:
        out = table_text(table)
    _write(out, args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.p_max < 5:
        raise ValueError(f"--p-max must be at least 5, got {args.p_max}")
    reports = verify_all(args.p_max, args.t_max, args.n_max)
    if args.format == "lines":
        out = "\n".join(report_lines(reports)) + "\n"
    else:
        out = report_text(reports)
    _write(out, args.output)
    failed = [r for r in reports if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(reports)} claim/prime reports failed", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubres",
        description="Cubic residue symbol matrices, exact determinants, and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("symbol", help="cubic residue symbol of a mod p")
    s.add_argument("a", type=int)
    s.add_argument("p", type=int)
    s.add_argument("-v", "--verbose", action="store_true",
                   help="also print a cube-root witness when the symbol is 1")
    s.set_defaults(func=_cmd_symbol)

    m = sub.add_parser("matrix", help="print the symbol matrix for a formula")
    _formula_args(m, with_cube=True)
    m.add_argument("-p", type=int, required=True, help="odd prime modulus")
    m.add_argument("-n", type=int, required=True, help="matrix order")
    m.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                   help=f"order cap (default {DEFAULT_MAX_ORDER})")
    m.set_defaults(func=_cmd_matrix)

    d = sub.add_parser("det", help="exact determinant of the symbol matrix")
    _formula_args(d, with_cube=True)
    d.add_argument("-p", type=int, required=True, help="odd prime modulus")
    d.add_argument("-n", type=int, required=True, help="matrix order")
    d.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                   help=f"order cap (default {DEFAULT_MAX_ORDER})")
    d.set_defaults(func=_cmd_det)

    t = sub.add_parser("table", help="determinant table over orders and shifts")
    group = t.add_mutually_exclusive_group(required=True)
    group.add_argument("--diff", action="store_true", help="family j - i + c")
    group.add_argument("--sum", action="store_true", help="family j + i + c")
    group.add_argument("--even-power", action="store_true", help="family (j - i)**(2t) + c")
    t.add_argument("--t", type=int, default=1, metavar="T",
                   help="half-exponent t for --even-power (default 1)")
    t.add_argument("-p", type=int, required=True, help="odd prime modulus")
    t.add_argument("--n-min", type=int, default=None, help="first order (default 1)")
    t.add_argument("--n-max", type=int, default=None, help="last order (default p)")
    t.add_argument("--c-min", type=int, default=None, help="first shift (default 0)")
    t.add_argument("--c-max", type=int, default=None, help="last shift (default 2p-1)")
    t.add_argument("--extended", action="store_true",
                   help=f"orders 1..p+{EXTENDED_EXTRA_ORDERS} instead of 1..p")
    t.add_argument("--format", choices=("csv", "text", "ansi", "svg"), default="csv")
    t.add_argument("--cell-px", type=int, default=12, help="SVG cell size in pixels")
    t.add_argument("--no-color", action="store_true",
                   help="ANSI format without colors (NO_COLOR in the environment does the same)")
    t.add_argument("-o", "--output", default=None, help="write to a file instead of stdout")
    t.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                   help=f"order cap (default {DEFAULT_MAX_ORDER})")
    t.set_defaults(func=_cmd_table)

    v = sub.add_parser("verify", help="sweep the identity catalog over primes up to a bound")
    v.add_argument("--p-max", type=int, default=60, help="largest prime to check (default 60)")
    v.add_argument("--t-max", type=int, default=3, help="largest half-exponent t (default 3)")
    v.add_argument("--n-max", type=int, default=8,
                   help="largest order for the even-power sweeps (default 8)")
    v.add_argument("--format", choices=("text", "lines"), default="text")
    v.add_argument("-o", "--output", default=None, help="write to a file instead of stdout")
    v.set_defaults(func=_cmd_verify)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
