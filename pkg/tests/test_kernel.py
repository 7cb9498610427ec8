"""Kernel contracts: exact rationals, polynomial rings, truncated series."""

import random
from fractions import Fraction

import pytest

from qlambda.kernel import (QL, QQ, LambdaPoly, SeriesOrderError, TruncSeries,
                            XPoly, rational_arith)
from qlambda.gfun import degen_exp, degen_log1p, inv_one_minus, one_minus_var

from oracles import convolve


def test_rational_arith_examples():
    assert rational_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    assert rational_arith(Fraction(1, 2), Fraction(0), "mul") == Fraction(0)
    out = rational_arith(Fraction(7, 3), Fraction(7, 3), "sub")
    assert out == 0 and out.numerator == 0 and out.denominator == 1


def test_rational_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        rational_arith(Fraction(1), Fraction(0), "div")


def test_rational_unknown_op():
    with pytest.raises(ValueError):
        rational_arith(Fraction(1), Fraction(1), "pow")


def _random_fraction(rng):
    return Fraction(rng.randint(-20, 20), rng.randint(1, 15))


def _random_lp(rng, degmax=4):
    return LambdaPoly([_random_fraction(rng) for _ in range(rng.randint(0, degmax) + 1)])


def _random_xp(rng, degmax=3):
    return XPoly([_random_lp(rng, 3) for _ in range(rng.randint(0, degmax) + 1)])


def _random_series(rng, ring, order):
    if ring is QQ:
        return TruncSeries(ring, [_random_fraction(rng) for _ in range(order + 1)])
    if ring is QL:
        return TruncSeries(ring, [_random_lp(rng, 3) for _ in range(order + 1)])
    return TruncSeries(ring, [_random_xp(rng, 2) for _ in range(order + 1)])


def test_ring_laws_randomized():
    # >= 1000 exact cases across the four value kinds
    rng = random.Random(20240811)
    for _ in range(300):
        a, b, c = (_random_fraction(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
    for _ in range(300):
        a, b, c = (_random_lp(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a * LambdaPoly.one() == a
        assert (a + LambdaPoly.zero()) == a
    for _ in range(250):
        a, b, c = (_random_xp(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a * XPoly.one() == a
    for _ in range(200):
        a, b, c = (_random_series(rng, QL, 5) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_series_mul_examples():
    one_plus = TruncSeries(QQ, [1, 1, 0])
    assert (one_plus * one_minus_var(2, QQ)).coeffs == (1, 0, -1)
    s = TruncSeries(QQ, [1, 1, 1])
    assert (s * TruncSeries.one(QQ, 2)) == s
    geo = inv_one_minus(4, 1, QQ)
    assert (geo * one_minus_var(4, QQ)).coeffs == (1, 0, 0, 0, 0)


def test_series_mul_matches_convolution_oracle():
    rng = random.Random(7)
    for _ in range(50):
        a = [_random_fraction(rng) for _ in range(6)]
        b = [_random_fraction(rng) for _ in range(6)]
        got = TruncSeries(QQ, a) * TruncSeries(QQ, b)
        assert list(got.coeffs) == convolve(a, b, 5)


def test_series_order_mismatch_is_error():
    with pytest.raises(SeriesOrderError):
        TruncSeries(QQ, [1, 2]) * TruncSeries(QQ, [1, 2, 3])
    with pytest.raises(SeriesOrderError):
        TruncSeries(QQ, [1, 2]) + TruncSeries(QQ, [1, 2, 3])
    with pytest.raises(SeriesOrderError):
        TruncSeries(QQ, [1, 2]).compose(TruncSeries(QQ, [0, 1, 0]))


def test_series_compose_examples():
    outer = TruncSeries(QQ, [1, 1, 0, 0])  # 1 + t
    inner = TruncSeries(QQ, [0, 0, 1, 0])  # t^2
    assert outer.compose(inner).coeffs == (1, 0, 1, 0)
    # 1/(1-t) at t/(1-t) gives (1-t)/(1-2t)
    comp = inv_one_minus(4, 1, QQ).compose(inv_one_minus(3, 1, QQ).shift(1))
    assert comp.coeffs == (1, 1, 2, 4, 8)


def test_series_compose_requires_zero_constant_term():
    with pytest.raises(SeriesOrderError):
        TruncSeries(QQ, [1, 1]).compose(TruncSeries(QQ, [1, 1]))


def test_series_reciprocal_examples():
    assert inv_one_minus(3, 1, QQ).coeffs == (1, 1, 1, 1)
    two = TruncSeries.const(QQ, 2, 2)
    assert two.reciprocal().coeffs == (Fraction(1, 2), 0, 0)
    assert inv_one_minus(2, 2, QQ).coeffs == (1, 2, 3)


def test_series_reciprocal_requires_unit():
    with pytest.raises(ZeroDivisionError):
        TruncSeries(QQ, [0, 1]).reciprocal()
    with pytest.raises(ZeroDivisionError):
        TruncSeries(QL, [LambdaPoly.param(), LambdaPoly.one()]).reciprocal()


def test_reciprocal_mul_is_identity_randomized():
    rng = random.Random(99)
    for _ in range(60):
        coeffs = [Fraction(rng.randint(1, 9))] + [_random_fraction(rng) for _ in range(6)]
        s = TruncSeries(QQ, coeffs)
        assert s * s.reciprocal() == TruncSeries.one(QQ, 6)
    for _ in range(40):
        coeffs = [LambdaPoly.const(rng.randint(1, 5))] + [_random_lp(rng, 3) for _ in range(5)]
        s = TruncSeries(QL, coeffs)
        assert s * s.reciprocal() == TruncSeries.one(QL, 5)


def test_series_derive_examples():
    s = TruncSeries(QQ, [1, 1, 1])
    assert s.derive().coeffs == (1, 2)
    assert TruncSeries(QQ, [1, 0]).derive().coeffs == (0,)
    assert inv_one_minus(5, 1, QQ).derive().coeffs == (1, 2, 3, 4, 5)
    with pytest.raises(SeriesOrderError):
        TruncSeries(QQ, [1]).derive()


def test_degenerate_exp_log_inverse_order_16():
    order = 16
    e = degen_exp(order)
    log = degen_log1p(order)
    assert e.compose(log) == TruncSeries.one(QL, order) + TruncSeries.var(QL, order)
    assert log.compose(e - TruncSeries.one(QL, order)) == TruncSeries.var(QL, order)


def test_xpoly_evaluation_homomorphism():
    rng = random.Random(5)
    for _ in range(100):
        p, q = _random_xp(rng), _random_xp(rng)
        m = rng.randint(-6, 6)
        assert (p * q).eval_x(m) == p.eval_x(m) * q.eval_x(m)


def test_lambda_poly_canonical_form():
    assert LambdaPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert LambdaPoly([0, 0]).coeffs == ()
    assert LambdaPoly([0]).is_zero()
    assert (LambdaPoly([1, 1]) - LambdaPoly([1, 1])).coeffs == ()


def test_xpoly_canonical_and_eval():
    p = XPoly([LambdaPoly([0]), LambdaPoly([1])])  # x
    assert p.degree == 1
    assert p.eval_x(3) == LambdaPoly.const(3)
    assert p.subs_lambda(Fraction(1, 2)) == (Fraction(0), Fraction(1))


def test_values_are_immutable_and_hashable():
    p = LambdaPoly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = ()
    s = TruncSeries(QL, [p, p])
    with pytest.raises(AttributeError):
        s.coeffs = ()
    assert len({p, LambdaPoly([1, 2]), XPoly([p]), s}) == 3


def test_series_shift_and_truncate_track_order():
    s = TruncSeries(QQ, [1, 2, 3])
    assert s.shift(2).order == 4
    assert s.shift(2).coeffs == (0, 0, 1, 2, 3)
    assert s.truncate(1).coeffs == (1, 2)
    with pytest.raises(SeriesOrderError):
        s.truncate(5)
