#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: test_stirling_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Signed Stirling numbers of the first kind against sympy and the generating function.

License:
"""

""" Imports """
# Import python libraries
from fractions import Fraction

# Import external packages
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.functions.combinatorial.numbers import stirling

# Import local modules
from invtrig_series import stirling_utility as su
from invtrig_series.module.errors import DomainError
from invtrig_series.module.stirling_table import StirlingTable


""" Tests """

def test_small_values(table):
    assert su.stirling1(0, 0, table) == 1
    assert su.stirling1(4, 2, table) == 11
    assert su.stirling1(4, 3, table) == -6
    assert su.stirling1(5, 1, table) == 24
    assert su.stirling_row(4, table) == [0, -6, 11, -6, 1]


def test_agrees_with_sympy(table):
    for n in range(16):
        for k in range(n + 1):
            assert su.stirling1(n, k, table) == int(stirling(n, k, kind=1, signed=True))


def test_generating_function_oracle(table):
    assert su.stirling_oracle(6, 3) == su.stirling1(6, 3, table)
    triangle = su.stirling_oracle_triangle(12)
    assert triangle[12] == su.stirling_row(12, table)


def test_out_of_range():
    t = StirlingTable()
    with pytest.raises(DomainError):
        t.s(3, 4)
    with pytest.raises(DomainError):
        t.s(-1, 0)
    assert t.s_or_zero(3, 4) == 0
    assert t.max_n == 0
    t.extend(5)
    assert t.max_n == 5


def test_sweeps_pass(table):
    assert su.check_triangle(20, table).passed
    assert su.check_row_sums(25, table).passed
    points = [Fraction(-3, 2), Fraction(0), Fraction(1, 3), Fraction(5)]
    report = su.check_binom_sweep(10, points, table)
    assert report.passed
    assert report.checked == 2 * 11 * len(points)


@settings(max_examples=50)
@given(st.integers(0, 12), st.fractions(min_value=-5, max_value=5, max_denominator=10))
def test_binomial_and_rising_identities(n, z):
    assert su.check_binom_identity(n, z)
    assert su.check_rising_identity(n, z)
