#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: test_series_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Expansions of arcsin, arcsinh and arccos powers, derivative formulas,
    truncated evaluation and the identity reports built on them.

License:
"""

""" Imports """
# Import python libraries
import math
from fractions import Fraction

# Import external packages
import pytest
import sympy as sp

# Import local modules
from invtrig_series import series_utility as se
from invtrig_series.module.coeff_series import CoeffSeries
from invtrig_series.module.errors import DomainError, NotExpandable
from invtrig_series.module.fixnum import FixNum


""" Function definitions """

def sympy_coeffs(expr, order):
    x = sp.symbols('x')
    expansion = sp.series(expr(x), x, 0, order + 1).removeO()
    return [Fraction(str(expansion.coeff(x, n))) for n in range(order + 1)]


""" Tests """

def test_arcsin_over_x(table):
    series = se.arcsin_pow(1, 3, table=table)
    assert series.coeffs == (1, 0, Fraction(1, 6), 0, Fraction(3, 40), 0, Fraction(5, 112))
    assert series.center == 'zero' and series.parity == 'even'
    assert se.arcsin_series(3).coeffs == series.coeffs


def test_powers_against_sympy(table):
    assert list(se.arcsin_pow(3, 4, table=table).coeffs) == sympy_coeffs(lambda x: (sp.asin(x) / x) ** 3, 8)
    assert list(se.arcsin_pow(2, 4, hyperbolic=True, table=table).coeffs) == \
        sympy_coeffs(lambda x: (sp.asinh(x) / x) ** 2, 8)


def test_stirling_route_matches(table):
    for k in range(1, 6):
        assert se.arcsin_pow_stirling(k, 6, table).coeffs == se.arcsin_pow(k, 6, table=table).coeffs


def test_arcsin_square_recovery(table):
    series = se.arcsin_pow(2, 25, table=table)
    for m in range(26):
        expected = Fraction(math.prod(range(2, 2 * m + 1, 2)), math.prod(range(1, 2 * m + 2, 2)) * (m + 1))
        assert series[2 * m] == expected
    assert se.check_recovery(25, 5, table).passed


def test_arccos_ratio(table):
    assert se.arccos_ratio_pow(1, 3, table=table).coeffs == (1, Fraction(-1, 6), Fraction(2, 45), Fraction(-1, 70))
    hyp = se.arccos_ratio_pow(2, 5, hyperbolic=True, table=table)
    assert hyp.coeffs == se.arccos_ratio_pow(2, 5, table=table).coeffs
    assert hyp.variable == 'x-1'
    assert hyp.meta['expr'] == 'arccosh-ratio'


def test_shifted_forms(table):
    series = se.shifted_forms(1, 2, table=table)
    assert series.coeffs == (1, Fraction(1, 6), Fraction(2, 45))
    assert series.variable == 'x+1'
    ratio = se.arccos_ratio_pow(2, 4, table=table)
    shifted = se.shifted_forms(2, 4, table=table)
    assert all(shifted[m] == (-1) ** m * ratio[m] for m in range(5))
    assert se.shifted_forms(1, 2, 'pi-plus-i-arccosh', table).meta['global_factor'] == -1
    assert se.shifted_forms(2, 2, 'pi-plus-i-arccosh', table).meta['global_factor'] == 1
    with pytest.raises(DomainError):
        se.shifted_forms(1, 2, 'pi-plus-arccos', table)


def test_real_powers(table):
    assert se.ratio_pow_alpha(1, 4, table=table).coeffs == se.arccos_ratio_pow(1, 4, table=table).coeffs
    half = se.ratio_pow_alpha(Fraction(1, 2), 3, table=table)
    # -1/24 per 2(x-1)
    assert half[1] == Fraction(-1, 12)
    assert half.meta['cross_checked']
    assert se.ratio_pow_alpha(0, 4, table=table).coeffs == (1, 0, 0, 0, 0)
    square = se.ratio_pow_alpha(Fraction(1, 2), 6, table=table).power(2)
    assert square.coeffs == se.arccos_ratio_pow(1, 6, table=table).coeffs
    assert se.check_alpha_natural(4, 8, table).passed


@pytest.mark.slow
def test_alpha_natural_sweep(table):
    assert se.check_alpha_natural(8, 15, table).passed


def test_derivatives_at_one(table):
    assert se.deriv_at_one(1, 1, 'ratio', table) == Fraction(-1, 6)
    assert se.deriv_at_one(1, 2, 'ratio', table) == Fraction(4, 45)
    assert se.deriv_at_one(1, 1, 'ratio-hyp', table) == Fraction(1, 6)
    assert se.deriv_at_one(1, 1, 'shifted', table) == Fraction(1, 6)
    assert se.deriv_at_one(2, 1, 'shifted-hyp', table) == -se.deriv_at_one(2, 1, 'ratio', table)
    with pytest.raises(DomainError):
        se.deriv_at_one(1, 1, 'tangent', table)
    with pytest.raises(DomainError):
        se.deriv_at_one(1, 0, 'ratio', table)


def test_even_powers(table):
    assert se.even_pow_deriv_at1(2, 1, table=table) == 0
    assert se.even_pow_deriv_at1(1, 1, table=table) == -2
    assert se.even_pow_deriv_at1(1, 2, hyperbolic=True, table=table) == Fraction(-2, 3)
    # (arccos x)^2 = -2(x-1) + (x-1)^2/3 + ...
    series = se.even_pow_series(1, 3, table=table)
    assert series.coeffs[:3] == (0, -2, Fraction(1, 3))
    assert se.check_derivatives(3, 6, table).passed


@pytest.mark.parametrize('j, expected', [(0, math.pi ** 2 / 4), (1, -math.pi), (2, 1.0)])
def test_maclaurin_coefficients(table, j, expected):
    approx, tail = se.maclaurin_even_pow(1, j, 60, table=table)
    assert tail is not None
    assert abs(float(approx) - expected) < 1e-8


def test_odd_powers_not_expandable():
    for k in (1, 2, 3):
        with pytest.raises(NotExpandable, match='cannot be expanded'):
            se.odd_pow_at_one(k)
    assert se.check_odd_powers(3).passed


def test_tail_estimate():
    assert se.tail_estimate([Fraction(1), Fraction(1, 2), Fraction(1, 4)]) == Fraction(1, 2)
    assert se.tail_estimate([Fraction(1), Fraction(2)]) is None
    assert se.tail_estimate([Fraction(1), Fraction(0), Fraction(0)]) == 0
    assert se.tail_estimate([Fraction(1)]) is None


def test_eval_with_tail(table):
    value, tail = se.eval_with_tail(se.arccos_ratio_pow(1, 10, table=table), 1, 20)
    assert value.to_rational() == 1 and value.err == 0
    assert tail == 0
    constant, tail = se.eval_with_tail(CoeffSeries('zero', [1]), Fraction(1, 2), 5)
    assert str(constant) == '1.00000'
    assert tail is None
    value, tail = se.eval_with_tail(se.arcsin_pow(1, 30, table=table), Fraction(1, 2), 20)
    assert abs(float(value) - math.pi / 3) < 1e-15
    assert tail < Fraction(1, 10 ** 15)
    with pytest.raises(DomainError):
        se.eval_with_tail(se.arcsin_pow(1, 3, table=table), 1, 10)


def test_eval_truncated(table):
    value = se.eval_truncated(se.arccos_ratio_pow(1, 10, table=table), 1, 20)
    assert isinstance(value, FixNum)
    assert value.to_rational() == 1 and value.err == 0
    series = se.arcsin_pow(1, 30, table=table)
    assert se.eval_truncated(series, Fraction(1, 2), 20) == se.eval_with_tail(series, Fraction(1, 2), 20)[0]
    assert str(se.eval_truncated(CoeffSeries('zero', [1]), Fraction(1, 2), 5)) == '1.00000'
    with pytest.raises(DomainError):
        se.eval_truncated(se.arcsin_pow(1, 3, table=table), 1, 10)
    with pytest.raises(DomainError):
        se.eval_truncated(se.arccos_ratio_pow(1, 3, table=table), -1, 10)



def test_product_consistency(table):
    report = se.check_product_consistency(6, 12, table)
    assert report.passed
    assert report.checked > 6


def test_series_spec():
    spec = se.SeriesSpec('alpha-ratio', 5, alpha='1/2')
    assert spec.alpha == Fraction(1, 2)
    assert spec.label == 'alpha-ratio(alpha=1/2)'
    assert se.build_series(spec).meta['alpha'] == Fraction(1, 2)
    assert se.build_series(se.SeriesSpec('shifted-hyp', 3, k=1)).meta['global_factor'] == -1
    with pytest.raises(DomainError):
        se.SeriesSpec('arctan-pow', 3)
    with pytest.raises(DomainError):
        se.SeriesSpec('alpha-ratio', 3)
    with pytest.raises(DomainError):
        se.SeriesSpec('trig', 3, alpha=1, tag='cos_arccos_0')
    with pytest.raises(DomainError):
        se.SeriesSpec('arcsin-pow', 3, k=0)
