"""Named truncated series used throughout the package.

Everything here is assembled from the kernel's series operations and the
factorial products; coefficients live in Q[l] (use :func:`lift_to_xpoly`
to move a series into Q[l][x] coefficients).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .factorials import classical_falling, degen_falling
from .kernel import QL, QLX, LambdaPoly, TruncSeries, XPoly


def degen_exp(order: int, exponent=1) -> TruncSeries:
    """Degenerate exponential with the given (integer/rational/poly) exponent.

    Coefficient of t^n is the degenerate falling factorial of the exponent
    of length n, divided by n!.  Exponent 1 gives the plain degenerate
    exponential; the limit l -> 0 is the classical exponential.
    """
    coeffs = []
    for n in range(order + 1):
        coeffs.append(degen_falling(exponent, n) / math.factorial(n))
    return TruncSeries(QL, coeffs)


def degen_log1p(order: int) -> TruncSeries:
    """Degenerate logarithm of 1 + t (the compositional inverse series).

    Coefficient of t^n, n >= 1, is (l-1)(l-2)...(l-n+1)/n!; the constant
    term is 0.
    """
    coeffs = [LambdaPoly.zero()]
    for n in range(1, order + 1):
        top = classical_falling(LambdaPoly.param() - 1, n - 1)
        coeffs.append(top / math.factorial(n))
    return TruncSeries(QL, coeffs)


def degen_log_one_minus(order: int) -> TruncSeries:
    """Degenerate logarithm of 1 - t (substitute -t into :func:`degen_log1p`)."""
    base = degen_log1p(order)
    return TruncSeries(QL, tuple(c * ((-1) ** n) for n, c in enumerate(base.coeffs)))


def classical_exp(order: int, ring=QL) -> TruncSeries:
    """The ordinary exponential series over the requested coefficient ring."""
    return TruncSeries(ring, (ring.coerce(Fraction(1, math.factorial(n)))
                              for n in range(order + 1)))


def classical_log1p(order: int) -> TruncSeries:
    """log(1+t) with rational coefficients embedded in Q[l]."""
    coeffs = [LambdaPoly.zero()]
    for n in range(1, order + 1):
        coeffs.append(LambdaPoly.const(Fraction((-1) ** (n - 1), n)))
    return TruncSeries(QL, coeffs)


def one_minus_var(order: int, ring=QL) -> TruncSeries:
    """The polynomial 1 - t as a series of the given order."""
    if order == 0:
        return TruncSeries.one(ring, 0)
    return TruncSeries.one(ring, order) - TruncSeries.var(ring, order)


def inv_one_minus(order: int, power: int = 1, ring=QL) -> TruncSeries:
    """(1 - t)^(-power) via the kernel reciprocal."""
    if power < 0:
        raise ValueError("power must be >= 0")
    if power == 0:
        return TruncSeries.one(ring, order)
    return one_minus_var(order, ring).pow(power).reciprocal()


def lift_to_xpoly(series: TruncSeries) -> TruncSeries:
    """Reinterpret a Q[l]-coefficient series inside Q[l][x]."""
    if series.ring is not QL:
        raise TypeError("expected a QL-coefficient series")
    return TruncSeries(QLX, (XPoly.const(c) for c in series.coeffs))
