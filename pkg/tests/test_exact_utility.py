#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: test_exact_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Exact scalar helpers: parsing, factorials, binomials, powers.

License:
"""

""" Imports """
# Import python libraries
from fractions import Fraction

# Import external packages
import pytest
from hypothesis import given
from hypothesis import strategies as st

# Import local modules
from invtrig_series import exact_utility as ex
from invtrig_series.module.errors import DomainError


""" Tests """

def test_parse_rational_forms():
    assert ex.parse_rational('6/4') == Fraction(3, 2)
    assert ex.parse_rational('-3') == Fraction(-3)
    assert ex.parse_rational('0.7') == Fraction(7, 10)
    assert ex.parse_rational(' 1 / 3 ') == Fraction(1, 3)


@pytest.mark.parametrize('text', ['abc', '1/0', '', '1e5', '2/-3'])
def test_parse_rational_rejects(text):
    with pytest.raises(DomainError):
        ex.parse_rational(text)


def test_rat_to_str_is_canonical():
    assert ex.rat_to_str(Fraction(-6, 4)) == '-3/2'
    assert ex.rat_to_str(Fraction(8, 4)) == '2'
    assert ex.rat_to_str(0) == '0'


@given(st.fractions())
def test_text_form_parses_back(q):
    assert ex.parse_rational(ex.rat_to_str(q)) == q


def test_as_rational_refuses_floats_and_bools():
    with pytest.raises(DomainError):
        ex.as_rational(0.5)
    with pytest.raises(DomainError):
        ex.as_rational(True)
    assert ex.as_rational('2/6') == Fraction(1, 3)


def test_double_factorial_conventions():
    assert ex.double_factorial(-1) == 1
    assert ex.double_factorial(0) == 1
    assert ex.double_factorial(7) == 105
    assert ex.double_factorial(8) == 384
    with pytest.raises(DomainError):
        ex.double_factorial(-3)


@given(st.integers(0, 30), st.integers(0, 30))
def test_binom_times_factorial_is_falling(n, k):
    assert ex.binom(n, k) * ex.factorial(k) == ex.falling(n, k)
    assert ex.binom(n, k) == ex.binom_int(n, k)


@given(st.fractions(min_value=-5, max_value=5, max_denominator=12), st.integers(0, 8))
def test_falling_is_signed_rising(z, n):
    assert ex.falling(z, n) == (-1) ** n * ex.rising(-z, n)


def test_binom_rational_upper_index():
    assert ex.binom(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert ex.binom(-1, 3) == -1


def test_pow_rat():
    assert ex.pow_rat(0, 0) == 1
    assert ex.pow_rat(Fraction(2, 3), -2) == Fraction(9, 4)
    with pytest.raises(DomainError):
        ex.pow_rat(0, -1)


def test_central_binom():
    assert [ex.central_binom(n) for n in range(6)] == [1, 2, 6, 20, 70, 252]
