#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: test_qfunc_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Q(k,m) values, table layout, closed forms and vanishing sums.

License:
"""

""" Imports """
# Import python libraries
from fractions import Fraction

# Import external packages
import pytest

# Import local modules
from invtrig_series import exact_utility as ex
from invtrig_series import qfunc_utility as qf
from invtrig_series.module.errors import DomainError


""" Tests """

def test_known_values(table):
    assert qf.q(1, 2, table) == Fraction(-1, 4)
    assert qf.q(2, 2, table) == -1
    assert qf.q(2, 4, table) == 4
    assert qf.q(5, 0, table) == 1


def test_domain(table):
    with pytest.raises(DomainError):
        qf.q(0, 1, table)
    with pytest.raises(DomainError):
        qf.q(1, -1, table)


def test_closed_forms_directly(table):
    for k in range(1, 12):
        assert qf.q(2, 2 * k, table) == (-1) ** k * ex.factorial(k) ** 2
        assert qf.q(1, 2 * k, table) == (-1) ** k * Fraction(ex.double_factorial(2 * k - 1), 2 ** k) ** 2
    assert qf.q(3, 1, table) == 0
    assert qf.q(5, 3, table) == 0


def test_identity_reports(table):
    assert qf.check_q_closed_forms(15, table).passed
    assert qf.check_q_decomposition(5, 5, table).passed
    report = qf.check_q_sum_zero(8, table)
    assert report.passed
    assert report.checked == sum(k - 1 for k in range(2, 9))


@pytest.mark.slow
def test_closed_forms_sweep(table):
    report = qf.check_q_closed_forms(30, table)
    assert report.passed
    assert report.checked >= 30


def test_weighted_sum_nonzero_on_diagonal(table):
    # m = k is the first non vanishing case
    assert qf.q_weighted_sum(1, 1, table) == Fraction(1, 12)


def test_q_table(table):
    df = qf.q_table(3, 4, table)
    assert df.shape == (3, 5)
    assert df.loc[2, 2] == -1
    assert list(df.index) == [1, 2, 3]
    text = qf.q_table_text(df)
    assert text.loc[1, 2] == '-1/4'
    assert text.loc[3, 0] == '1'


def test_decomposition_rest_is_rational(table):
    value = qf.q_decomposition_rest(1, 2, table)
    assert isinstance(value, Fraction)
