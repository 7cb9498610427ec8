"""The degenerate Euler operator and the two-power-series identity.

The operator acts diagonally on monomials: in plain mode it sends the
x^k term of f to (k+r)_{m,l} x^(k+r) (the operand being x^r f); shifted
mode first takes the r-fold derivative.  ``rhs_theorem1`` assembles the
equivalent expansion through second-kind r-Stirling triangles and
repeated differentiation, so the two must agree coefficientwise -- that
equality is the first operator identity the suite verifies.

``theorem2_check`` verifies the general two-series identity (both
forms) for a polynomial f against a truncated series g; f is restricted
to polynomials so both sides are finite-order computable.  Intermediate
per-(g, r) work is memoized; the memo is registered with the triangle
cache so fault injection invalidates it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from . import stirling
from .factorials import degen_falling
from .kernel import QL, LambdaPoly, TruncSeries, XPoly
from .report import CheckReport, first_mismatch, make_report

Operand = Union[XPoly, TruncSeries]

_MODES = ("plain", "shifted")


@dataclass(frozen=True)
class OperatorSpec:
    """Degenerate-factorial length m, power-of-x prefactor r, and mode."""

    m: int
    r: int = 0
    mode: str = "plain"

    def __post_init__(self):
        if self.mode not in _MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.m < 0 or self.r < 0:
            raise ValueError("m and r must be >= 0")
        if self.mode == "shifted" and self.m < self.r:
            raise ValueError("shifted mode requires m >= r")


def _diagonal_xpoly(f: XPoly, r: int, length: int) -> XPoly:
    coeffs = [LambdaPoly.zero()] * r + [
        f.coeff(k) * degen_falling(k + r, length) for k in range(f.degree + 1)
    ]
    return XPoly(coeffs)


def _diagonal_series(f: TruncSeries, r: int, length: int) -> TruncSeries:
    coeffs = [QL.zero] * r + [
        f.coeffs[k] * degen_falling(k + r, length) for k in range(f.order + 1)
    ]
    return TruncSeries(QL, coeffs)


def euler_apply(spec: OperatorSpec, f: Operand) -> Operand:
    """Apply the operator to f (polynomial, or series in x over Q[l]).

    Plain mode realizes the action on x^r f; shifted mode realizes the
    length-(m-r) operator on x^r times the r-th derivative of f.  On a
    series input the tracked order rises by r (plain) or is kept (shifted).
    """
    if spec.mode == "shifted":
        g = f
        for _ in range(spec.r):
            g = g.derivative() if isinstance(g, XPoly) else g.derive()
        length = spec.m - spec.r
    else:
        g = f
        length = spec.m
    if isinstance(g, XPoly):
        return _diagonal_xpoly(g, spec.r, length)
    return _diagonal_series(g, spec.r, length)


def rhs_theorem1(spec: OperatorSpec, f: Operand) -> Operand:
    """The Stirling-weighted derivative expansion equal to ``euler_apply``."""
    fam = stirling.StirlingFamily(stirling.S2R_DEGENERATE, spec.r)
    if spec.mode == "plain":
        terms = [(stirling.stirling_value(fam, spec.m, l), l, l + spec.r)
                 for l in range(spec.m + 1)]
    else:
        terms = [(stirling.stirling_value(fam, spec.m - spec.r, l - spec.r), l, l)
                 for l in range(spec.r, spec.m + 1)]
    if isinstance(f, XPoly):
        out = XPoly.zero()
        for weight, l, shift in terms:
            d = f
            for _ in range(l):
                d = d.derivative()
            out = out + XPoly.monomial(weight, shift) * d
        return out
    target_order = f.order + (spec.r if spec.mode == "plain" else 0)
    out = TruncSeries.zero(QL, target_order)
    for weight, l, shift in terms:
        d = f
        for _ in range(l):
            d = d.derive()
        out = out + d.scale(weight).shift(shift)
    return out


def degen_transform(f: XPoly) -> XPoly:
    """Replace each monomial a_n x^n by a_n times the degenerate falling factorial."""
    out = XPoly.zero()
    for n in range(f.degree + 1):
        a = f.coeff(n)
        if not a.is_zero():
            out = out + degen_falling(XPoly.x(), n) * a
    return out


def degen_transform_value(f: XPoly, arg: int) -> LambdaPoly:
    """The transformed polynomial evaluated at an integer argument."""
    out = LambdaPoly.zero()
    for n in range(f.degree + 1):
        a = f.coeff(n)
        if not a.is_zero():
            out = out + a * degen_falling(arg, n)
    return out


def theorem1_check(m: int, r: int, mode: str, jmax: int = 10) -> CheckReport:
    """Operator equality on the monomial basis x^j, j <= jmax, one (m, r, mode)."""
    spec = OperatorSpec(m, r, mode)
    params = {"m": m, "r": r, "mode": mode, "jmax": jmax}
    for j in range(jmax + 1):
        f = XPoly.monomial(1, j)
        lhs = euler_apply(spec, f)
        rhs = rhs_theorem1(spec, f)
        bad = first_mismatch(lhs, rhs, f"operand x^{j}")
        if bad is not None:
            return make_report("thm1", params, bad)
    return make_report("thm1", params, None)


@lru_cache(maxsize=None)
def _shifted_derivative(g: TruncSeries, k: int, order: int) -> TruncSeries:
    """x^k d^k/dx^k g, tracked to exactly ``order``."""
    d = g
    for _ in range(k):
        d = d.derive()
    return d.truncate(order - k).shift(k)


@lru_cache(maxsize=None)
def _stirling_derivative_mix(g: TruncSeries, r: int, n: int, order: int) -> TruncSeries:
    """sum_k {n+r over k+r}_r x^k g^(k), the g-side block of the main form."""
    fam = stirling.StirlingFamily(stirling.S2R_DEGENERATE, r)
    out = TruncSeries.zero(QL, order)
    for k in range(n + 1):
        w = stirling.stirling_value(fam, n, k)
        if not w.is_zero():
            out = out + _shifted_derivative(g, k, order).scale(w)
    return out


@lru_cache(maxsize=None)
def _falling_at(arg: int, m: int) -> LambdaPoly:
    return degen_falling(arg, m)


def _clear_theorem2_caches() -> None:
    _stirling_derivative_mix.cache_clear()


stirling.register_cache_clearer(_clear_theorem2_caches)


def theorem2_check(f: XPoly, g: TruncSeries, r: int, order: int) -> CheckReport:
    """Both forms of the two-power-series identity, coefficientwise to ``order``.

    Requires g tracked to at least order + deg f, since each derivative
    loses one coefficient.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    deg = max(f.degree, 0)
    if g.order < order + deg:
        raise ValueError(f"g must be tracked to >= {order + deg} (got {g.order})")
    params = {"r": r, "order": order, "deg_f": f.degree}

    # Main form: sum_n a_n (sum_k {...} x^k g^(k)) == sum_n b_n f_l(n+r) x^n.
    lhs = TruncSeries.zero(QL, order)
    for n in range(f.degree + 1):
        a = f.coeff(n)
        if not a.is_zero():
            lhs = lhs + _stirling_derivative_mix(g, r, n, order).scale(a)
    rhs_coeffs = []
    for n in range(order + 1):
        b = g.coeffs[n]
        value = LambdaPoly.zero()
        for m_ in range(f.degree + 1):
            a = f.coeff(m_)
            if not a.is_zero():
                value = value + a * _falling_at(n + r, m_)
        rhs_coeffs.append(b * value)
    rhs = TruncSeries(QL, rhs_coeffs)
    bad = first_mismatch(lhs, rhs, "main form")
    if bad is not None:
        return make_report("thm2", params, bad)

    # Shifted form: only the a_m with m >= r participate.
    fam = stirling.StirlingFamily(stirling.S2R_DEGENERATE, r)
    lhs2 = TruncSeries.zero(QL, order)
    for m_ in range(r, f.degree + 1):
        a = f.coeff(m_)
        if a.is_zero():
            continue
        block = TruncSeries.zero(QL, order)
        for k in range(r, m_ + 1):
            w = stirling.stirling_value(fam, m_ - r, k - r)
            if not w.is_zero():
                block = block + _shifted_derivative(g, k, order).scale(w)
        lhs2 = lhs2 + block.scale(a)
    rhs2_coeffs = [QL.zero] * (order + 1)
    rfact = math.factorial(r)
    for n in range(r, order + 1):
        b = g.coeffs[n]
        value = LambdaPoly.zero()
        for m_ in range(r, f.degree + 1):
            a = f.coeff(m_)
            if not a.is_zero():
                value = value + a * _falling_at(n, m_ - r)
        rhs2_coeffs[n] = b * value * (math.comb(n, r) * rfact)
    rhs2 = TruncSeries(QL, rhs2_coeffs)
    bad = first_mismatch(lhs2, rhs2, "shifted form")
    return make_report("thm2", params, bad)
