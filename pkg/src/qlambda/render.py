"""Canonical text renderings and their parsers.

These are the wire formats used by the CLI and by test fixtures:

* Rational        -> "p/q" with q > 0, plain "p" when q = 1
* LambdaPoly      -> JSON array of Rational strings, ascending degree
* XPoly           -> JSON array of LambdaPoly arrays
* TruncSeries     -> {"order": N, "coeffs": [...]}
* ASCII (for CSV) -> "c0 + c1 l + c2 l^2", with the letter "l" for the
  degeneracy parameter and canonical Rational coefficients.

Parsing is strict: a rational string must match ``p`` or ``p/q`` with an
unsigned q, so round trips are exact.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .kernel import QL, QLX, LambdaPoly, TruncSeries, XPoly

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def rational_str(q: Fraction) -> str:
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a canonical rational: {text!r}")
    return Fraction(text)


def lambda_poly_json(p: LambdaPoly) -> list[str]:
    return [rational_str(c) for c in p.coeffs]


def parse_lambda_poly(items) -> LambdaPoly:
    if isinstance(items, str):
        raise ValueError("expected an array of rational strings, got a bare string")
    return LambdaPoly(parse_rational(s) for s in items)


def xpoly_json(p: XPoly) -> list[list[str]]:
    return [lambda_poly_json(c) for c in p.coeffs]


def parse_xpoly(items) -> XPoly:
    if isinstance(items, str):
        raise ValueError("expected an array of coefficient arrays, got a bare string")
    return XPoly(parse_lambda_poly(row) for row in items)


def series_json(s: TruncSeries) -> dict:
    if s.ring is QLX:
        coeffs = [xpoly_json(c) for c in s.coeffs]
    elif s.ring is QL:
        coeffs = [lambda_poly_json(c) for c in s.coeffs]
    else:
        coeffs = [rational_str(c) for c in s.coeffs]
    return {"order": s.order, "coeffs": coeffs}


def parse_series(obj, ring) -> TruncSeries:
    order = obj["order"]
    raw = obj["coeffs"]
    if len(raw) != order + 1:
        raise ValueError(f"series claims order {order} but has {len(raw)} coefficients")
    if ring is QLX:
        coeffs = [parse_xpoly(c) for c in raw]
    elif ring is QL:
        coeffs = [parse_lambda_poly(c) for c in raw]
    else:
        coeffs = [parse_rational(c) for c in raw]
    return TruncSeries(ring, coeffs)


def _term_ascii(mag: Fraction, power: int, var: str) -> str:
    if power == 0:
        return rational_str(mag)
    head = "" if mag == 1 else rational_str(mag) + " "
    return head + (var if power == 1 else f"{var}^{power}")


def _poly_ascii(coeffs, var: str) -> str:
    parts: list[str] = []
    for power, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = -c if c < 0 else c
        if not parts:
            sign = "-" if c < 0 else ""
            parts.append(sign + _term_ascii(mag, power, var))
        else:
            parts.append(("- " if c < 0 else "+ ") + _term_ascii(mag, power, var))
    return " ".join(parts) if parts else "0"


def lambda_poly_ascii(p: LambdaPoly) -> str:
    """ASCII rendering with the letter "l" for the degeneracy parameter."""
    return _poly_ascii(p.coeffs, "l")


def xpoly_ascii(p: XPoly) -> str:
    parts: list[str] = []
    for power, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        if c.degree <= 0:
            piece = _poly_ascii((c.coeff(0),), "l") if power == 0 else _term_ascii(
                abs(c.coeff(0)), power, "x")
            neg = power > 0 and c.coeff(0) < 0
        else:
            body = lambda_poly_ascii(c)
            piece = f"({body})" if power == 0 else f"({body}) " + ("x" if power == 1 else f"x^{power}")
            neg = False
        if not parts:
            parts.append(("-" if neg else "") + piece)
        else:
            parts.append(("- " if neg else "+ ") + piece)
    return " ".join(parts) if parts else "0"
