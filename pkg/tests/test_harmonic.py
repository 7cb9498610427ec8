"""Harmonic and hyperharmonic values, their generating series and limits."""

import math
from fractions import Fraction

import pytest

from qlambda import stirling as st
from qlambda.harmonic import (classical_harmonic, degen_harmonic, degen_hyperharmonic,
                              harmonic_gf)
from qlambda.kernel import LambdaPoly

from oracles import harmonic_sum, hyperharmonic_sum


def test_harmonic_examples():
    assert degen_harmonic(0) == LambdaPoly.zero()
    assert degen_harmonic(1) == LambdaPoly.one()
    assert degen_harmonic(2) == LambdaPoly([Fraction(3, 2), Fraction(-1, 2)])
    assert degen_harmonic(3).subs(0) == Fraction(11, 6)
    with pytest.raises(ValueError):
        degen_harmonic(-1)


def test_hyperharmonic_examples():
    assert degen_hyperharmonic(2, 2) == LambdaPoly([Fraction(5, 2), Fraction(-1, 2)])
    for r in range(1, 7):
        assert degen_hyperharmonic(0, r) == LambdaPoly.zero()
        assert degen_hyperharmonic(1, r) == LambdaPoly.one()
    with pytest.raises(ValueError):
        degen_hyperharmonic(2, 0)
    with pytest.raises(ValueError):
        degen_hyperharmonic(-1, 2)


def test_gf_matches_recursion_up_to_order_16():
    for r in range(1, 6):
        series = harmonic_gf(r, 16)
        assert series.coeff(0) == LambdaPoly.zero()
        for n in range(17):
            assert series.coeff(n) == degen_hyperharmonic(n, r), (n, r)


def test_gf_examples():
    assert harmonic_gf(1, 4).coeff(2) == degen_harmonic(2)
    assert harmonic_gf(2, 4).coeff(2) == LambdaPoly([Fraction(5, 2), Fraction(-1, 2)])
    with pytest.raises(ValueError):
        harmonic_gf(0, 4)


def test_classical_limit_to_order_20():
    for n in range(21):
        assert degen_harmonic(n).subs(0) == harmonic_sum(n)
        assert classical_harmonic(n) == harmonic_sum(n)
    for r in range(1, 5):
        for n in range(12):
            assert degen_hyperharmonic(n, r).subs(0) == hyperharmonic_sum(n, r), (n, r)


def test_first_column_bridge_to_unsigned_r_triangles():
    for r in range(1, 5):
        fam = st.StirlingFamily(st.S1R_UNSIGNED_DEGENERATE, r)
        for n in range(1, 13):
            lhs = degen_hyperharmonic(n, r) * math.factorial(n)
            assert lhs == st.stirling_value(fam, n, 1), (n, r)


def test_degree_grows_linearly():
    for n in range(1, 16):
        assert degen_harmonic(n).degree == n - 1
