"""Degenerate Euler operator, the transform, and the two-series identity."""

import math
import random
from fractions import Fraction

import pytest

from qlambda.factorials import degen_falling
from qlambda.gfun import classical_exp, degen_log_one_minus, inv_one_minus
from qlambda.kernel import QL, LambdaPoly, TruncSeries, XPoly
from qlambda.operators import (OperatorSpec, degen_transform, degen_transform_value,
                               euler_apply, rhs_theorem1, theorem1_check, theorem2_check)

X = XPoly.x()


def test_spec_validation():
    with pytest.raises(ValueError):
        OperatorSpec(1, 2, "shifted")
    with pytest.raises(ValueError):
        OperatorSpec(-1)
    with pytest.raises(ValueError):
        OperatorSpec(1, 0, "sideways")
    OperatorSpec(2, 2, "shifted")


def test_euler_apply_examples():
    out = euler_apply(OperatorSpec(2, 0), XPoly.monomial(1, 3))
    assert out == XPoly.monomial(LambdaPoly([9, -3]), 3)  # 3(3-l) x^3
    p = XPoly([1, 2, 3])
    assert euler_apply(OperatorSpec(0, 2), p) == XPoly.monomial(1, 2) * p
    assert euler_apply(OperatorSpec(1, 0), XPoly.one()) == XPoly.zero()


def test_rhs_examples():
    # length-1 operator is x d/dx
    rng = random.Random(1)
    for _ in range(20):
        f = XPoly([Fraction(rng.randint(-5, 5), rng.randint(1, 5))
                   for _ in range(rng.randint(1, 6))])
        assert rhs_theorem1(OperatorSpec(1, 0), f) == X * f.derivative()
        assert rhs_theorem1(OperatorSpec(3, 0), XPoly.const(5)) == XPoly.zero()


def test_operator_identity_on_monomials_both_modes():
    for m in range(6):
        for r in range(min(m, 3) + 1):
            for mode in ("plain", "shifted"):
                rep = theorem1_check(m, r, mode, jmax=8)
                assert rep.passed, rep.to_json()


def test_operator_identity_on_series():
    geo = inv_one_minus(10)
    for m in range(4):
        for r in range(min(m, 2) + 1):
            for mode in ("plain", "shifted"):
                spec = OperatorSpec(m, r, mode)
                assert euler_apply(spec, geo) == rhs_theorem1(spec, geo), (m, r, mode)


def test_linearity_randomized():
    rng = random.Random(12)
    spec = OperatorSpec(3, 1)
    for _ in range(30):
        f = XPoly([LambdaPoly([Fraction(rng.randint(-4, 4))]) for _ in range(5)])
        g = XPoly([LambdaPoly([Fraction(rng.randint(-4, 4))]) for _ in range(5)])
        c = LambdaPoly([rng.randint(-3, 3), rng.randint(-3, 3)])
        lhs = euler_apply(spec, f * c + g)
        rhs = euler_apply(spec, f) * c + euler_apply(spec, g)
        assert lhs == rhs
        lhs2 = rhs_theorem1(spec, f * c + g)
        rhs2 = rhs_theorem1(spec, f) * c + rhs_theorem1(spec, g)
        assert lhs2 == rhs2


def test_degen_transform_examples():
    for m in range(7):
        assert degen_transform(XPoly.monomial(1, m)) == degen_falling(X, m)
    assert degen_transform(XPoly.one()) == XPoly.one()
    assert degen_transform_value(XPoly.monomial(1, 2), 3).subs(1) == 6


def test_shifted_mode_series_expansion():
    # shifted euler on a series equals the binomial-weighted coefficient map
    g = classical_exp(12, QL)
    for m in range(2, 5):
        for r in range(1, min(m, 3) + 1):
            spec = OperatorSpec(m, r, "shifted")
            out = euler_apply(spec, g)
            expect = [LambdaPoly.zero()] * (g.order + 1)
            for n in range(r, g.order + 1):
                w = math.comb(n, r) * math.factorial(r)
                expect[n] = g.coeff(n) * degen_falling(n, m - r) * w
            assert out == TruncSeries(QL, expect), (m, r)


def _g_for(name, order):
    if name == "geometric":
        return inv_one_minus(order)
    if name == "exp":
        return classical_exp(order, QL)
    return (-degen_log_one_minus(order)) * inv_one_minus(order)


def test_theorem2_examples():
    order = 12
    rep = theorem2_check(XPoly.one(), _g_for("geometric", order), 0, order)
    assert rep.passed
    rep = theorem2_check(X, _g_for("exp", order + 1), 0, order)
    assert rep.passed
    rep = theorem2_check(XPoly.monomial(1, 4), _g_for("geometric", order + 4), 3, order)
    assert rep.passed


def test_theorem2_random_polynomials_all_gs():
    rng = random.Random(77)
    order = 12
    for name in ("geometric", "exp", "harmonic"):
        g = _g_for(name, order + 5)
        for r in range(3):
            for _ in range(6):
                f = XPoly([LambdaPoly([Fraction(rng.randint(-6, 6), rng.randint(1, 4))])
                           for _ in range(rng.randint(1, 6))])
                rep = theorem2_check(f, g, r, order)
                assert rep.passed, rep.to_json()


def test_theorem2_insufficient_order_is_error():
    with pytest.raises(ValueError):
        theorem2_check(XPoly.monomial(1, 3), inv_one_minus(10), 0, 10)


def test_shifted_mode_requires_enough_length():
    with pytest.raises(ValueError):
        euler_apply(OperatorSpec(1, 2, "shifted"), X)
