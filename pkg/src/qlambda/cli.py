"""Command-line interface: tables, series, identity verification, substitution.

Exit codes are a stable contract for CI consumers: 0 success, 1 identity
failure, 2 usage error.  All output schemas are the kernel's canonical
renderings; CSV cells use the ASCII polynomial rule with the letter "l"
for the degeneracy parameter.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import stirling
from .fubini_bell import (BELL_DEGENERATE, FUBINI_CLASSICAL, FUBINI_DEGENERATE,
                          RBELL_DEGENERATE, RFUBINI_DEGENERATE, PolyFamily,
                          family_series, poly_by_sum)
from .gfun import degen_exp, degen_log1p
from .harmonic import degen_harmonic, degen_hyperharmonic, harmonic_gf
from .identities import CHECK_IDS, SuiteBounds, run_suite, suite_json
from .kernel import QL, QQ, LambdaPoly, TruncSeries, XPoly
from .render import (lambda_poly_ascii, lambda_poly_json, parse_lambda_poly,
                     parse_rational, parse_series, parse_xpoly, rational_str,
                     series_json, xpoly_json)

DEFAULT_CAP = 64
MAX_CAP = 512

_STIRLING_FAMILIES = {
    "stirling1c": stirling.S1_CLASSICAL,
    "stirling2c": stirling.S2_CLASSICAL,
    "stirling1d": stirling.S1_DEGENERATE,
    "stirling2d": stirling.S2_DEGENERATE,
    "stirling1du": stirling.S1_UNSIGNED_DEGENERATE,
    "stirling1r": stirling.S1R_DEGENERATE,
    "stirling2r": stirling.S2R_DEGENERATE,
    "stirling1ru": stirling.S1R_UNSIGNED_DEGENERATE,
}
_POLY_FAMILIES = {
    "bell-d": BELL_DEGENERATE,
    "rbell-d": RBELL_DEGENERATE,
    "fubini-c": FUBINI_CLASSICAL,
    "fubini-d": FUBINI_DEGENERATE,
    "rfubini-d": RFUBINI_DEGENERATE,
}
_HARMONIC_FAMILIES = ("harmonic", "hyperharmonic")
_SERIES_NAMES = ("degen-exp", "degen-log", "harmonic-gf", "hyperharmonic-gf",
                 "fubini-gf", "rfubini-gf")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlambda",
        description="Exact tables, series and identity checks over Q[l].")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="emit a triangle/sequence table")
    table.add_argument("family", help="family short name (see README)")
    table.add_argument("--nmax", type=int, default=8)
    table.add_argument("--r", type=int, default=None, help="shift parameter for r-families")
    table.add_argument("--lambda", dest="lam", default=None, metavar="P/Q",
                       help="substitute a rational for the degeneracy parameter")
    table.add_argument("--format", choices=("json", "csv"), default="json")
    table.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help=f"hard size cap (default {DEFAULT_CAP}, max {MAX_CAP})")

    series = sub.add_parser("series", help="emit a named generating series")
    series.add_argument("name", help="series name (see README)")
    series.add_argument("--order", type=int, default=8)
    series.add_argument("--r", type=int, default=None)
    series.add_argument("--lambda", dest="lam", default=None, metavar="P/Q")
    series.add_argument("--format", choices=("json", "csv"), default="json")
    series.add_argument("--cap", type=int, default=DEFAULT_CAP)

    verify = sub.add_parser("verify", help="run identity checks, emit JSON reports")
    verify.add_argument("--suite", default="all",
                        help="'all' or comma-separated check ids "
                             f"({', '.join(CHECK_IDS)})")
    verify.add_argument("--nmax", type=int, default=None)
    verify.add_argument("--rmax", type=int, default=None)
    verify.add_argument("--order", type=int, default=None)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--fault", default=None, metavar="FAMILY:R:N:K[:DELTA]",
                        help="testing hook: corrupt one triangle entry before running")

    evalp = sub.add_parser("eval", help="substitute into a kernel-rendered JSON value from stdin")
    evalp.add_argument("--lambda", dest="lam", default=None, metavar="P/Q")
    evalp.add_argument("--x", dest="x", default=None, metavar="P/Q",
                       help="evaluate an x-polynomial at a rational x first")
    return parser


def _check_cap(value: int, cap: int, what: str) -> None:
    if cap < 0 or cap > MAX_CAP:
        raise UsageError(f"--cap must be between 0 and {MAX_CAP}")
    if value < 0:
        raise UsageError(f"{what} must be >= 0")
    if value > cap:
        raise UsageError(f"{what} {value} exceeds the cap {cap} (raise with --cap, max {MAX_CAP})")


def _parse_lambda(text):
    if text is None:
        return None
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _triangle_payload(short: str, fid: str, r: int, nmax: int, lam):
    tri = stirling.triangle(stirling.StirlingFamily(fid, r), nmax)
    if lam is None:
        rows = [[lambda_poly_json(tri.entry(n, k)) for k in range(n + 1)]
                for n in range(nmax + 1)]
    else:
        rows = [[rational_str(tri.entry(n, k).subs(lam)) for k in range(n + 1)]
                for n in range(nmax + 1)]
    return {"family": short, "r": r, "nmax": nmax, "rows": rows}


def _triangle_csv_rows(fid: str, r: int, nmax: int, lam):
    tri = stirling.triangle(stirling.StirlingFamily(fid, r), nmax)
    for n in range(nmax + 1):
        if lam is None:
            yield [lambda_poly_ascii(tri.entry(n, k)) for k in range(n + 1)]
        else:
            yield [rational_str(tri.entry(n, k).subs(lam)) for k in range(n + 1)]


def _poly_cells(p: XPoly, n: int, lam):
    cells = []
    for k in range(max(p.degree, n) + 1 if p.degree >= 0 else n + 1):
        c = p.coeff(k)
        cells.append(lambda_poly_ascii(c) if lam is None else rational_str(c.subs(lam)))
    return cells


def cmd_table(args) -> int:
    lam = _parse_lambda(args.lam)
    short = args.family
    _check_cap(args.nmax, args.cap, "--nmax")
    out = sys.stdout
    if short in _STIRLING_FAMILIES:
        fid = _STIRLING_FAMILIES[short]
        r = args.r if args.r is not None else 0
        if r and fid not in stirling.R_FAMILY_IDS:
            raise UsageError(f"family {short} does not take --r")
        if args.format == "json":
            json.dump(_triangle_payload(short, fid, r, args.nmax, lam), out, indent=2)
            out.write("\n")
        else:
            writer = csv.writer(out)
            for row in _triangle_csv_rows(fid, r, args.nmax, lam):
                writer.writerow(row)
        return 0
    if short in _POLY_FAMILIES:
        fam = PolyFamily(_POLY_FAMILIES[short],
                         args.r if args.r is not None else 0)
        polys = [poly_by_sum(fam, n) for n in range(args.nmax + 1)]
        if args.format == "json":
            if lam is None:
                body = [xpoly_json(p) for p in polys]
            else:
                body = [[rational_str(c) for c in p.subs_lambda(lam)] for p in polys]
            payload = {"family": short, "r": fam.r, "nmax": args.nmax, "polys": body}
            json.dump(payload, out, indent=2)
            out.write("\n")
        else:
            writer = csv.writer(out)
            for n, p in enumerate(polys):
                writer.writerow(_poly_cells(p, n, lam))
        return 0
    if short in _HARMONIC_FAMILIES:
        if short == "harmonic":
            r = 1
            values = [degen_harmonic(n) for n in range(args.nmax + 1)]
        else:
            if args.r is None or args.r < 1:
                raise UsageError("hyperharmonic requires --r >= 1")
            r = args.r
            values = [degen_hyperharmonic(n, r) for n in range(args.nmax + 1)]
        if args.format == "json":
            body = [lambda_poly_json(v) if lam is None else rational_str(v.subs(lam))
                    for v in values]
            payload = {"family": short, "r": r, "nmax": args.nmax, "values": body}
            json.dump(payload, out, indent=2)
            out.write("\n")
        else:
            writer = csv.writer(out)
            for v in values:
                writer.writerow([lambda_poly_ascii(v) if lam is None
                                 else rational_str(v.subs(lam))])
        return 0
    raise UsageError(f"unknown family {short!r}; known: "
                     + ", ".join(sorted({**_STIRLING_FAMILIES, **_POLY_FAMILIES}))
                     + ", harmonic, hyperharmonic")


def _named_series(name: str, order: int, r) -> TruncSeries:
    if name == "degen-exp":
        return degen_exp(order)
    if name == "degen-log":
        return degen_log1p(order)
    if name == "harmonic-gf":
        return harmonic_gf(1, order)
    if name == "hyperharmonic-gf":
        if r is None or r < 1:
            raise UsageError("hyperharmonic-gf requires --r >= 1")
        return harmonic_gf(r, order)
    if name == "fubini-gf":
        return family_series(PolyFamily(FUBINI_DEGENERATE), order)
    if name == "rfubini-gf":
        return family_series(PolyFamily(RFUBINI_DEGENERATE, r if r else 0), order)
    raise UsageError(f"unknown series {name!r}; known: " + ", ".join(_SERIES_NAMES))


def _series_subs_lambda(s: TruncSeries, lam: Fraction):
    if s.ring is QL:
        return [rational_str(c.subs(lam)) for c in s.coeffs]
    return [[rational_str(v) for v in c.subs_lambda(lam)] for c in s.coeffs]


def cmd_series(args) -> int:
    lam = _parse_lambda(args.lam)
    _check_cap(args.order, args.cap, "--order")
    s = _named_series(args.name, args.order, args.r)
    out = sys.stdout
    if args.format == "json":
        if lam is None:
            payload = series_json(s)
        else:
            payload = {"order": s.order, "coeffs": _series_subs_lambda(s, lam)}
        json.dump(payload, out, indent=2)
        out.write("\n")
        return 0
    writer = csv.writer(out)
    for c in s.coeffs:
        if s.ring is QL:
            cells = [lambda_poly_ascii(c) if lam is None else rational_str(c.subs(lam))]
        else:
            cells = _poly_cells(c, 0, lam)
        writer.writerow(cells)
    return 0


def _apply_fault(spec: str) -> None:
    parts = spec.split(":")
    if len(parts) not in (4, 5):
        raise UsageError("--fault expects FAMILY:R:N:K[:DELTA]")
    short, r_s, n_s, k_s = parts[:4]
    if short not in _STIRLING_FAMILIES:
        raise UsageError(f"unknown triangle family {short!r} in --fault")
    try:
        r, n, k = int(r_s), int(n_s), int(k_s)
        delta = parse_rational(parts[4]) if len(parts) == 5 else Fraction(1)
        family = stirling.StirlingFamily(_STIRLING_FAMILIES[short], r)
    except ValueError as exc:
        raise UsageError(f"bad --fault value: {exc}") from None
    stirling.inject_fault(family, n, k, LambdaPoly.const(delta))


def cmd_verify(args) -> int:
    if args.fault:
        _apply_fault(args.fault)
    selection = set(CHECK_IDS) if args.suite == "all" else {
        piece.strip() for piece in args.suite.split(",") if piece.strip()}
    bounds = SuiteBounds().with_cli_overrides(args.nmax, args.rmax, args.order)
    try:
        reports = run_suite(selection, bounds, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(suite_json(reports) + "\n")
    failed = sum(1 for rep in reports if not rep.passed)
    print(f"checks: {len(reports)} passed: {len(reports) - failed} failed: {failed}",
          file=sys.stderr)
    return 1 if failed else 0


def _eval_payload(value, lam, x):
    if isinstance(value, str):
        return rational_str(parse_rational(value))
    if isinstance(value, dict) and "order" in value:
        ring = QL
        for c in value.get("coeffs", []):
            if isinstance(c, str):
                ring = None  # plain rational coefficients: substitution is a no-op
                break
            if isinstance(c, list) and c:
                ring = QLX if isinstance(c[0], list) else QL
                break
        if ring is None:
            return series_json(parse_series(value, QQ))
        s = parse_series(value, ring)
        if lam is None:
            return series_json(s)
        return {"order": s.order, "coeffs": _series_subs_lambda(s, lam)}
    if isinstance(value, list):
        nested = any(isinstance(item, list) for item in value)
        if nested or not value:
            p = parse_xpoly(value)
            if x is not None:
                q = p.eval_x(x)
                return rational_str(q.subs(lam)) if lam is not None else lambda_poly_json(q)
            if lam is not None:
                return [rational_str(c) for c in p.subs_lambda(lam)]
            return xpoly_json(p)
        p = parse_lambda_poly(value)
        return rational_str(p.subs(lam)) if lam is not None else lambda_poly_json(p)
    raise UsageError("stdin JSON must be a rational string, polynomial array, or series object")


def cmd_eval(args) -> int:
    lam = _parse_lambda(args.lam)
    x = _parse_lambda(args.x)
    try:
        value = json.load(sys.stdin)
    except json.JSONDecodeError as exc:
        raise UsageError(f"stdin is not valid JSON: {exc}") from None
    try:
        result = _eval_payload(value, lam, x)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    json.dump(result, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


_COMMANDS = {"table": cmd_table, "series": cmd_series, "verify": cmd_verify, "eval": cmd_eval}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
