"""Degenerate harmonic and hyperharmonic numbers.

The degenerate harmonic number of index n is a polynomial of degree n-1
in the degeneracy parameter; each summand is kept in the polynomial form
(-1)^(k-1) (l-1)(l-2)...(l-k+1) / k!, so no formal division by the
parameter ever happens and the classical value is a plain substitution
at 0.  Hyperharmonic numbers are the iterated partial sums; their
generating function is the independent cross-check.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .factorials import classical_falling
from .gfun import degen_log_one_minus, inv_one_minus
from .kernel import LambdaPoly, TruncSeries

_LOCK = threading.RLock()
_HARMONIC: list[LambdaPoly] = [LambdaPoly.zero()]
_HYPER: dict[int, list[LambdaPoly]] = {}


def degen_harmonic(n: int) -> LambdaPoly:
    """Degenerate harmonic number; 0 at n = 0."""
    if n < 0:
        raise ValueError("harmonic index must be >= 0")
    with _LOCK:
        while len(_HARMONIC) <= n:
            k = len(_HARMONIC)
            summand = classical_falling(LambdaPoly.param() - 1, k - 1) / math.factorial(k)
            summand = summand * ((-1) ** (k - 1))
            _HARMONIC.append(_HARMONIC[k - 1] + summand)
        return _HARMONIC[n]


def degen_hyperharmonic(n: int, r: int) -> LambdaPoly:
    """Degenerate hyperharmonic number of order r >= 1 (partial-sum recursion)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    if r < 1:
        raise ValueError("order must be >= 1")
    if r == 1:
        return degen_harmonic(n)
    with _LOCK:
        values = _HYPER.setdefault(r, [LambdaPoly.zero()])
        while len(values) <= n:
            m = len(values)
            values.append(values[m - 1] + degen_hyperharmonic(m, r - 1))
        return values[n]


def harmonic_gf(r: int, order: int) -> TruncSeries:
    """Generating series of the order-r hyperharmonic numbers.

    Assembled from kernel operations as the degenerate logarithm against
    the r-th reciprocal power of 1 - t; the constant term is 0.
    """
    if r < 1:
        raise ValueError("order must be >= 1")
    return (-degen_log_one_minus(order)) * inv_one_minus(order, r)


def classical_harmonic(n: int) -> Fraction:
    """Exact rational harmonic number (0 at n = 0)."""
    if n < 0:
        raise ValueError("harmonic index must be >= 0")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))
