"""Factorial-type building blocks and basis conversion for Q[l][x].

Falling/rising factorials in their classical and degenerate forms, the
generalized binomial coefficient with a polynomial top, and conversion of
an ``XPoly`` between the monomial basis and any of the (monic) factorial
bases.  Shifted bases like (x+r)_n are obtained by substituting x -> x+r
before expanding, so one conversion engine serves every family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .kernel import LambdaPoly, XPoly

BASIS_KINDS = ("monomial", "falling", "rising", "degen-falling", "degen-rising")

PolyArg = Union[int, Fraction, LambdaPoly, XPoly]


@dataclass(frozen=True)
class BasisId:
    """A factorial basis of Q[l][x], optionally shifted by x -> x + shift."""

    kind: str
    shift: int = 0

    def __post_init__(self):
        if self.kind not in BASIS_KINDS:
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if self.shift < 0:
            raise ValueError("basis shift must be >= 0")


def _factorial_product(x: PolyArg, n: int, step, sign: int):
    """Product x (x +/- step) (x +/- 2 step) ... with n factors."""
    if n < 0:
        raise ValueError("factorial length must be >= 0")
    if isinstance(x, XPoly):
        one_kind = XPoly.one()
        step_el = XPoly.const(step)
        base = x
    else:
        one_kind = LambdaPoly.one()
        step_el = step if isinstance(step, LambdaPoly) else LambdaPoly.const(step)
        base = x if isinstance(x, LambdaPoly) else LambdaPoly.const(x)
    out = one_kind
    for j in range(n):
        out = out * (base + step_el * (sign * j))
    return out


def classical_falling(x: PolyArg, n: int):
    """x(x-1)...(x-n+1); the empty product is 1."""
    return _factorial_product(x, n, 1, -1)


def classical_rising(x: PolyArg, n: int):
    """x(x+1)...(x+n-1)."""
    return _factorial_product(x, n, 1, +1)


def degen_falling(x: PolyArg, n: int):
    """x(x-l)(x-2l)...(x-(n-1)l), the degenerate falling factorial."""
    return _factorial_product(x, n, LambdaPoly.param(), -1)


def degen_rising(x: PolyArg, n: int):
    """x(x+l)(x+2l)...(x+(n-1)l)."""
    return _factorial_product(x, n, LambdaPoly.param(), +1)


def gen_binomial(top: Union[int, Fraction, LambdaPoly], k: int) -> LambdaPoly:
    """Binomial coefficient with a polynomial top: top(top-1)...(top-k+1)/k!."""
    if k < 0:
        raise ValueError("binomial lower index must be >= 0")
    return classical_falling(top, k) / math.factorial(k)


@lru_cache(maxsize=None)
def basis_poly(basis: BasisId, k: int) -> XPoly:
    """The k-th basis polynomial (monic of degree k in x)."""
    arg = XPoly.x() + XPoly.const(basis.shift) if basis.shift else XPoly.x()
    if basis.kind == "monomial":
        return XPoly.monomial(1, k) if basis.shift == 0 else arg ** k
    if basis.kind == "falling":
        return classical_falling(arg, k)
    if basis.kind == "rising":
        return classical_rising(arg, k)
    if basis.kind == "degen-falling":
        return degen_falling(arg, k)
    return degen_rising(arg, k)


def to_basis(p: XPoly, basis: BasisId) -> list[LambdaPoly]:
    """Coefficients of p in the given basis, by monic back-substitution.

    Returns exactly deg(p)+1 coefficients (the empty list for p = 0);
    every supported basis is monic in x, so this never fails.
    """
    work = p
    coeffs = [LambdaPoly.zero()] * (p.degree + 1)
    for k in range(p.degree, -1, -1):
        c = work.coeff(k)
        coeffs[k] = c
        if not c.is_zero():
            work = work - basis_poly(basis, k) * c
        if work.degree >= k:
            raise AssertionError("basis back-substitution failed to lower the degree")
    if not work.is_zero():
        raise AssertionError("basis back-substitution left a remainder")
    return coeffs


def from_basis(coeffs, basis: BasisId) -> XPoly:
    """Evaluate the linear combination sum(c_k * basis_k)."""
    out = XPoly.zero()
    for k, c in enumerate(coeffs):
        lp = c if isinstance(c, LambdaPoly) else LambdaPoly.const(c)
        if not lp.is_zero():
            out = out + basis_poly(basis, k) * lp
    return out
