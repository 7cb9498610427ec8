"""Bell- and Fubini-type polynomial families over Q[l][x].

Each family is computable two independent ways: as a finite weighted sum
over a Stirling triangle (Bell families unweighted, Fubini families with
the k! weight), and as n! times a coefficient of its generating series.
The generating-series route never touches the triangles, so agreement of
the two routes is a real cross-check.

``rfubini_numbers`` is the package's only numeric (non-symbolic)
computation: an exact-rational partial sum with a certified geometric
tail bound, never floating point.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from . import stirling
from .gfun import classical_exp, degen_exp, lift_to_xpoly
from .kernel import QLX, TruncSeries, XPoly

BELL_DEGENERATE = "bell-degenerate"
RBELL_DEGENERATE = "rbell-degenerate"
FUBINI_CLASSICAL = "fubini-classical"
FUBINI_DEGENERATE = "fubini-degenerate"
RFUBINI_DEGENERATE = "rfubini-degenerate"

POLY_FAMILY_IDS = (
    BELL_DEGENERATE,
    RBELL_DEGENERATE,
    FUBINI_CLASSICAL,
    FUBINI_DEGENERATE,
    RFUBINI_DEGENERATE,
)
_R_POLY_FAMILIES = (RBELL_DEGENERATE, RFUBINI_DEGENERATE)


@dataclass(frozen=True)
class PolyFamily:
    id: str
    r: int = 0

    def __post_init__(self):
        if self.id not in POLY_FAMILY_IDS:
            raise ValueError(f"unknown polynomial family {self.id!r}")
        if self.r < 0:
            raise ValueError("r must be >= 0")
        if self.r and self.id not in _R_POLY_FAMILIES:
            raise ValueError(f"family {self.id} does not take r != 0")


def _triangle_family(family: PolyFamily) -> stirling.StirlingFamily:
    if family.id == FUBINI_CLASSICAL:
        return stirling.StirlingFamily(stirling.S2_CLASSICAL)
    if family.id in (BELL_DEGENERATE, FUBINI_DEGENERATE):
        return stirling.StirlingFamily(stirling.S2_DEGENERATE)
    return stirling.StirlingFamily(stirling.S2R_DEGENERATE, family.r)


def _weighted(family: PolyFamily) -> bool:
    return family.id in (FUBINI_CLASSICAL, FUBINI_DEGENERATE, RFUBINI_DEGENERATE)


def poly_by_sum(family: PolyFamily, n: int) -> XPoly:
    """Finite Stirling-weighted sum; Fubini families carry the k! weight."""
    if n < 0:
        raise ValueError("index must be >= 0")
    tri = stirling.triangle(_triangle_family(family), n)
    weighted = _weighted(family)
    coeffs = []
    for k in range(n + 1):
        c = tri.entry(n, k)
        if weighted:
            c = c * math.factorial(k)
        coeffs.append(c)
    return XPoly(coeffs)


_GF_LOCK = threading.Lock()
_GF_CACHE: dict[tuple[str, int, int], TruncSeries] = {}


def family_series(family: PolyFamily, order: int) -> TruncSeries:
    """The family's generating series in t, with XPoly coefficients."""
    key = (family.id, family.r, order)
    with _GF_LOCK:
        hit = _GF_CACHE.get(key)
    if hit is not None:
        return hit
    x = XPoly.x()
    one = TruncSeries.one(QLX, order)
    if family.id == FUBINI_CLASSICAL:
        e_minus_1 = classical_exp(order, QLX) - one
    else:
        e_minus_1 = lift_to_xpoly(degen_exp(order)) - one
    if family.id in (BELL_DEGENERATE, RBELL_DEGENERATE):
        series = classical_exp(order, QLX).compose(e_minus_1.scale(x))
    else:
        series = (one - e_minus_1.scale(x)).reciprocal()
    if family.r:
        series = series * lift_to_xpoly(degen_exp(order, family.r))
    with _GF_LOCK:
        _GF_CACHE.setdefault(key, series)
    return series


def _clear_gf_cache() -> None:
    with _GF_LOCK:
        _GF_CACHE.clear()


def poly_by_gf(family: PolyFamily, n: int, order: int) -> XPoly:
    """n! times the t^n coefficient of the family's generating series."""
    if n < 0:
        raise ValueError("index must be >= 0")
    if order < n:
        raise ValueError(f"order {order} < n {n}")
    series = family_series(family, order)
    return series.coeff(n) * math.factorial(n)


def rfubini_numbers(m: int, r: int, lam: Fraction, tol_exponent: int) -> Fraction:
    """Certified partial sum of the weighted geometric series at a rational lam.

    Sums (n+r)_{m,lam} / 2^(n+1) until the remaining tail is provably below
    10^(-tol_exponent); the tail uses |(n+r)_{m,lam}| <= (n+r+|lam|m)^m
    against the geometric factor.  Exact rationals throughout.
    """
    if m < 0 or r < 0:
        raise ValueError("indices must be >= 0")
    if tol_exponent < 0:
        raise ValueError("tolerance exponent must be >= 0")
    lam = Fraction(lam)
    target = Fraction(1, 10 ** tol_exponent)
    slack = abs(lam) * m
    partial = Fraction(0)
    half_pow = Fraction(1, 2)  # (1/2)^(n+1)
    n = 0
    while True:
        term = Fraction(1)
        for j in range(m):
            term *= n + r - j * lam
        partial += term * half_pow
        tail_start = n + 1
        base = tail_start + r + slack
        ratio = ((base + 1) / base) ** m / 2 if m else Fraction(1, 2)
        if ratio < 1:
            bound = base ** m * (half_pow / 2) / (1 - ratio)
            if bound <= target:
                return partial
        n += 1
        half_pow /= 2
