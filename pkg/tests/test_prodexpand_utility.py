#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: test_prodexpand_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Products of shifted squares, their Stirling expansion and the trig compositions.

License:
"""

""" Imports """
# Import python libraries
from fractions import Fraction

# Import external packages
import pytest
import sympy as sp

# Import local modules
from invtrig_series import prodexpand_utility as pe
from invtrig_series.module.errors import DomainError, InconsistencyError
from invtrig_series.module.int_polynomial import IntPolynomial


""" Tests """

def test_small_products():
    assert pe.prod_squares(2, 'consecutive').coeffs == (4, 5, 1)
    assert pe.prod_squares(2, 'odd').coeffs == (9, 10, 1)
    assert pe.prod_squares(1, 'odd').coeffs == (1, 1)
    with pytest.raises(DomainError):
        pe.prod_squares(0, 'odd')
    with pytest.raises(DomainError):
        pe.prod_squares(2, 'even')


def test_stirling_route(table):
    assert pe.prod_squares_stirling(3, 'consecutive', table) == pe.prod_squares(3, 'consecutive')
    assert pe.prod_squares_stirling(3, 'odd', table) == pe.prod_squares(3, 'odd')
    assert pe.check_product_equivalence(8, table).passed


def test_lemma_identities(table):
    report = pe.check_lemma_identities(12, table)
    assert report.passed
    assert report.notes


@pytest.mark.slow
def test_full_sweeps(table):
    assert pe.check_product_equivalence(25, table).passed
    report = pe.check_lemma_identities(25, table)
    assert report.passed
    assert report.checked > 25 * 26


def test_int_polynomial():
    p = IntPolynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPolynomial().degree == -1
    assert str(IntPolynomial()) == '0'
    assert (p * p).coeffs == (1, 4, 4)
    assert (p + IntPolynomial((0, -2))).coeffs == (1,)
    assert p.evaluate(Fraction(1, 2)) == 2
    with pytest.raises(InconsistencyError):
        IntPolynomial.from_rationals([Fraction(1, 2)])


def test_chebyshev_from_cos_compositions():
    # cos(2 arcsin x) = 1 - 2x^2, T_2 = 1 + 4(x-1) + 2(x-1)^2
    assert [pe.trig_coeff('cos_arcsin', 2, n) for n in range(3)] == [1, -2, 0]
    assert [pe.trig_coeff('cos_arccos_1', 2, n) for n in range(4)] == [1, 4, 2, 0]


def test_sinh_arcsin_against_sympy():
    x = sp.symbols('x')
    expansion = sp.series(sp.sinh(sp.Rational(1, 2) * sp.asin(x)), x, 0, 8).removeO()
    expected = [Fraction(str(expansion.coeff(x, n))) for n in range(8)]
    series = pe.trig_series('sinh_arcsin', Fraction(1, 2), 3)
    assert list(series.coeffs) == expected


def test_cos_arcsin_against_sympy():
    x = sp.symbols('x')
    expansion = sp.series(sp.cos(sp.Rational(3, 2) * sp.asin(x)), x, 0, 9).removeO()
    expected = [Fraction(str(expansion.coeff(x, n))) for n in range(9)]
    assert list(pe.trig_series('cos_arcsin', Fraction(3, 2), 4).coeffs) == expected


def test_arccos_at_zero_pair():
    coeff = pe.trig_coeff('sinh_arccos_0', Fraction(1, 3), 1)
    assert isinstance(coeff, pe.TrigCoeff)
    assert (coeff.prefactor_even, coeff.prefactor_odd) == ('sinh', '-cosh')
    assert pe.prefactor_parts(coeff.prefactor_odd) == (-1, 'cosh')
    even, odd = pe.trig_series('cos_arccos_0', Fraction(1, 2), 3)
    assert even.meta['prefactor'] == 'cos'
    assert odd.meta['prefactor'] == 'sin'
    assert even[2] == pe.trig_coeff('cos_arcsin', Fraction(1, 2), 1)


def test_unknown_tag():
    with pytest.raises(DomainError):
        pe.trig_coeff('tan_arcsin', 1, 0)
