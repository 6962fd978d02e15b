"""Command-line interface: ``egfasym {coeffs,asymp,verify}``.

Exit codes: 0 success, 1 computational failure, 2 usage or validation error,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

import mpmath

from egfasym import families
from egfasym.asymptotics import Formula, check_formula, estimate
from egfasym.errors import EgfError, NetworkError, ValidationError
from egfasym.numerics import PrecisionContext
from egfasym.oeis import bundled_fixture, compare_prefix, fetch_bfile, load_bfile
from egfasym.params import classify_regime, validate
from egfasym.richardson import extrapolation_table, ratio_series
from egfasym.series import EXACT, Float, egf_coefficients

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3

FULL_SCALE_TERMS = 10_000
FULL_SCALE_ORDERS = "100:1000:100"

EPILOG = """\
output columns:
  coeffs   csv: n,value          jsonl: {"n", "value"}
  asymp    csv: n,formula,z,log10_value,value
  verify   table: order<TAB>extrapolant (40 digits)
Big numbers are always written as strings; exact values never use
scientific notation.

environment:
  OEIS_BASE_URL   b-file server (default https://oeis.org)
  EGF_CACHE_DIR   b-file cache root (files under <dir>/bfiles/)
"""


class UsageError(Exception):
    pass


def parse_orders(text: str) -> list:
    """'lo:hi:step' (inclusive) or a comma list."""
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) == 2:
                parts.append(1)
            lo, hi, step = parts
            if step <= 0:
                raise ValueError
            orders = list(range(lo, hi + 1, step))
        else:
            orders = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"cannot parse orders {text!r}") from None
    if not orders or min(orders) < 1:
        raise UsageError(f"orders must be positive integers: {text!r}")
    return orders


def _params_from_args(args, required=True):
    given = [getattr(args, k) for k in "mbdr"]
    if all(v is None for v in given):
        if getattr(args, "oeis", None):
            try:
                return families.lookup(args.oeis)
            except KeyError as exc:
                raise UsageError(exc.args[0]) from None
        if not required:
            return None
        raise UsageError("parameters --m --b --d --r are required")
    if any(v is None for v in given):
        raise UsageError("--m --b --d --r must be given together")
    return validate(args.m, args.b, args.d, args.r, args.s or "0")


def _note_params(params, err):
    if params.outside_worked_examples:
        print(f"note: non-integer b or d ({params}) is outside the worked examples", file=err)


def _add_param_flags(p):
    g = p.add_argument_group("parameters (rational strings: 3, -1/2, 1.25)")
    for name in "mbdrs":
        g.add_argument(f"--{name}", default=None)


def _add_common(p):
    p.add_argument("--digits", type=int, default=None, help="decimal digits (>= 16)")
    p.add_argument("--out", choices=("csv", "jsonl", "table"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="egfasym",
        description="Coefficients and saddle-point asymptotics of exp(m e^(bx) + r e^(dx) + s).",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="print a(0..terms)", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_param_flags(p)
    _add_common(p)
    p.add_argument("--oeis", help="use built-in parameters for this A-number")
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--float", action="store_true", help="big-float mode instead of exact")

    p = sub.add_parser("asymp", help="evaluate an asymptotic estimate at given n", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_param_flags(p)
    _add_common(p)
    p.add_argument("--oeis")
    p.add_argument("--n", type=int, action="append", required=True, help="repeatable")
    p.add_argument("--formula", choices=[f.value for f in Formula], default="full")

    p = sub.add_parser("verify", help="compare against a b-file and extrapolate the ratio series",
                       epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_param_flags(p)
    _add_common(p)
    p.add_argument("--oeis", help="A-number; also selects built-in parameters")
    p.add_argument("--bfile", help="local b-file instead of fetching")
    p.add_argument("--offline", action="store_true", help="use bundled fixtures, never the network")
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--orders", default="10:100:10")
    p.add_argument("--formula", choices=[f.value for f in Formula], default="simplified")
    p.add_argument("--offset", type=int, default=0)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--base-url", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--full-scale", action="store_true",
                   help=f"{FULL_SCALE_TERMS} terms, orders {FULL_SCALE_ORDERS} (hours)")
    return parser


def _ctx(args, default=64):
    return PrecisionContext(args.digits if args.digits is not None else default)


def cmd_coeffs(args, out, err) -> int:
    params = _params_from_args(args)
    _note_params(params, err)
    if args.terms < 0:
        raise UsageError("--terms must be nonnegative")
    mode = Float(_ctx(args).digits) if args.float else EXACT
    table = egf_coefficients(params, args.terms, mode)
    if args.out == "csv":
        rows = table.iter_csv()
    elif args.out == "jsonl":
        rows = table.iter_jsonl()
    else:
        rows = (f"{n}\t{v}" for n, v in table.rows())
    for line in rows:
        out.write(line + "\n")
    return EXIT_OK


def cmd_asymp(args, out, err) -> int:
    params = _params_from_args(args)
    _note_params(params, err)
    formula = Formula(args.formula)
    try:
        check_formula(params, formula)
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: regime {classify_regime(params).value}: {exc}", file=err)
        return EXIT_USAGE
    ctx = _ctx(args)
    if args.out == "csv":
        out.write("n,formula,z,log10_value,value\n")
    for n in args.n:
        if n < 1:
            raise UsageError("--n must be positive")
        est = estimate(params, n, formula, ctx)
        z = "" if est.z is None else mpmath.nstr(est.z, ctx.digits)
        row = {
            "n": n,
            "formula": formula.value,
            "z": z,
            "log10_value": mpmath.nstr(est.log10_value, ctx.digits),
            "value": est.value,
        }
        if args.out == "jsonl":
            out.write(json.dumps(row) + "\n")
        elif args.out == "csv":
            out.write(",".join(str(v) for v in row.values()) + "\n")
        else:
            out.write("\t".join(str(v) for v in row.values()) + "\n")
    return EXIT_OK


def _resolve_bfile(args, err):
    if args.bfile:
        return load_bfile(args.bfile), "file"
    if not args.oeis:
        raise UsageError("verify needs --oeis or --bfile")
    if args.offline:
        bf = bundled_fixture(args.oeis)
        if bf is None:
            raise UsageError(f"no bundled fixture for {args.oeis}")
        return bf, "fixture"
    try:
        return fetch_bfile(args.oeis, args.cache_dir, args.base_url), "cache/network"
    except NetworkError as exc:
        bf = bundled_fixture(args.oeis)
        if bf is None:
            raise
        print(f"warning: {exc}; using bundled fixture", file=err)
        return bf, "fixture"


def cmd_verify(args, out, err) -> int:
    params = _params_from_args(args)
    _note_params(params, err)
    formula = Formula(args.formula)
    try:
        check_formula(params, formula)
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: regime {classify_regime(params).value}: {exc}", file=err)
        return EXIT_USAGE
    terms = args.terms
    orders_text = args.orders
    if args.full_scale:
        terms = FULL_SCALE_TERMS if terms is None else terms
        orders_text = FULL_SCALE_ORDERS
    if terms is None:
        terms = 2000
    orders = parse_orders(orders_text)
    if terms < max(orders):
        raise UsageError(f"--terms {terms} is smaller than the largest order {max(orders)}")
    digits = args.digits if args.digits is not None else max(64, 2 * max(orders))
    ctx = PrecisionContext(digits)
    failures = []

    bfile, source = _resolve_bfile(args, err)
    label = args.oeis or bfile.anum or "b-file"
    out.write(f"# {label}: {params} regime={classify_regime(params).value} formula={formula.value}\n")

    table = egf_coefficients(params, terms)
    out.write(f"# coefficients: a(0..{terms}) exact\n")

    count = min(terms + 1, bfile.offset + len(bfile) - args.offset)
    report = compare_prefix(table, bfile, count, args.offset)
    out.write(f"# b-file ({source}): matched {report.matched}/{count} at offset {args.offset}\n")
    if not report.ok:
        idx, expected, got = report.first_mismatch
        failures.append("mismatch")
        out.write(f"# MISMATCH at index {idx}: expected {expected}, got {got}\n")

    series = ratio_series(table, formula, ctx, label=label, jobs=args.jobs)
    out.write(f"# ratio f({series.L}) = {mpmath.nstr(series[series.L], 40)}\n")
    ext = extrapolation_table(series, orders, ctx, digits=40)
    for order, value in ext.rows():
        out.write(f"{order}\t{value}\n")
    out.flush()
    return EXIT_MISMATCH if failures else EXIT_OK


COMMANDS = {"coeffs": cmd_coeffs, "asymp": cmd_asymp, "verify": cmd_verify}


_PARAM_FLAGS = {f"--{k}" for k in "mbdrs"}


def _join_negative_values(argv):
    """Turn ``--s -4/3`` into ``--s=-4/3``; argparse only recognises plain
    negative numbers as option values."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _PARAM_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = _join_negative_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out, err)
    except (UsageError, ValidationError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_USAGE
    except (EgfError, ArithmeticError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
