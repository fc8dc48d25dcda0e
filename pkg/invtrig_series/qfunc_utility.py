#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: qfunc_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    The quantity
        Q(k,m) = sum_{l=0}^{m} binom(k+l-1,k-1) s(k+m-1,k+l-1) ((k+m-2)/2)^l
    which appears in every series coefficient of the package, its tabulation
    and the closed forms and vanishing sums it satisfies.

License:
"""


""" Imports """
# Import python libraries
from fractions import Fraction

# Import external packages
import pandas as pd

# Import local modules
from invtrig_series import exact_utility as ex
from invtrig_series.module.errors import DomainError
from invtrig_series.module.report import CheckReport
from invtrig_series.module.stirling_table import StirlingTable, default_table


""" Function definitions """

def q(k:int, m:int, table:StirlingTable = None) -> Fraction:
    """
    Exact Q(k,m), defined by the same sum for every m >= 0

    Parameters
    k : int, k >= 1
    m : int, m >= 0
    table : StirlingTable, default = process wide table

    Returns
    Q(k,m) : Fraction
    """
    if k < 1:
        raise DomainError(f'Q(k,m) needs k >= 1, got k = {k}')
    if m < 0:
        raise DomainError(f'Q(k,m) needs m >= 0, got m = {m}')
    table = table or default_table()
    base = Fraction(k + m - 2, 2)
    n = k + m - 1
    total = Fraction(0)
    for l in range(m + 1):
        total += ex.binom_int(k + l - 1, k - 1) * table.s(n, k + l - 1) * ex.pow_rat(base, l)
    return total


def q_table(k_max:int, m_max:int, table:StirlingTable = None) -> pd.DataFrame:
    """
    All Q(k,m), 1 <= k <= k_max, 0 <= m <= m_max, from one Stirling triangle

    Returns
    df : pd.DataFrame of Fraction, index k, columns m
    """
    if k_max < 1 or m_max < 0:
        raise DomainError(f'Q table needs k_max >= 1 and m_max >= 0, got {k_max}, {m_max}')
    table = table or default_table()
    table.extend(k_max + m_max - 1)
    rows = [[q(k, m, table) for m in range(m_max + 1)] for k in range(1, k_max + 1)]
    df = pd.DataFrame(rows, index=pd.RangeIndex(1, k_max + 1, name='k'),
                      columns=pd.RangeIndex(0, m_max + 1, name='m'), dtype=object)
    return df


def q_table_text(df:pd.DataFrame) -> pd.DataFrame:
    """same table with canonical "p/q" strings, ready for csv"""
    return df.map(ex.rat_to_str)


def q_decomposition_rest(j:int, m:int, table:StirlingTable = None) -> Fraction:
    """
    sum_{l=1}^{2m-1} binom(2j+l,2j) s(2j+2m-1,2j+l) (j+m-1)^l / (l+1)

    The remainder term in the decomposition of Q(2j,2m). No simple form is known,
    the value is only tabulated.
    """
    if j < 1 or m < 1:
        raise DomainError(f'decomposition rest needs j, m >= 1, got {j}, {m}')
    table = table or default_table()
    n = 2 * j + 2 * m - 1
    c = j + m - 1
    return sum((Fraction(ex.binom_int(2 * j + l, 2 * j) * table.s(n, 2 * j + l) * c ** l, l + 1)
                for l in range(1, 2 * m)), Fraction(0))


def check_q_closed_forms(k_max:int, table:StirlingTable = None) -> CheckReport:
    """
    Q(2,2k) = (-1)^k (k!)^2 and Q(1,2k) = (-1)^k ((2k-1)!!/2^k)^2 for 1 <= k <= k_max,
    Q(2j+1,2m-1) = 0 for j >= 0, m >= 1, 2j+2m-1 <= 2 k_max + 1,
    Q(k,0) = 1 for k <= k_max
    """
    table = table or default_table()
    report = CheckReport('q_closed_forms')
    for k in range(1, k_max + 1):
        sign = (-1) ** k
        report.record((2, 2 * k), q(2, 2 * k, table), sign * ex.factorial(k) ** 2)
        report.record((1, 2 * k), q(1, 2 * k, table),
                      sign * Fraction(ex.double_factorial(2 * k - 1), 2 ** k) ** 2)
        report.record((k, 0), q(k, 0, table), 1)
    for j in range(0, k_max + 1):
        for m in range(1, k_max + 2 - j):
            report.record((2 * j + 1, 2 * m - 1), q(2 * j + 1, 2 * m - 1, table), 0)
    return report


def check_q_decomposition(j_max:int, m_max:int, table:StirlingTable = None) -> CheckReport:
    """
    Q(2j,2m) = s(2j+2m-1,2j-1) + 2j(j+m-1) s(2j+2m-1,2j) + 2j(j+m-1) R(j,m),
    R the decomposition rest, for 1 <= j <= j_max, 1 <= m <= m_max
    """
    table = table or default_table()
    report = CheckReport('q_decomposition')
    for j in range(1, j_max + 1):
        for m in range(1, m_max + 1):
            n = 2 * j + 2 * m - 1
            weight = 2 * j * (j + m - 1)
            rhs = (table.s(n, 2 * j - 1) + weight * table.s(n, 2 * j)
                   + weight * q_decomposition_rest(j, m, table))
            report.record((j, m), q(2 * j, 2 * m, table), rhs)
    return report


def q_weighted_sum(k:int, m:int, table:StirlingTable = None) -> Fraction:
    """
    sum_{j=1}^{k} (-1)^j (2j)! binom(k,j) Q(2j,2m) / (2j+2m)!
    """
    table = table or default_table()
    total = Fraction(0)
    for j in range(1, k + 1):
        total += Fraction((-1) ** j * ex.factorial(2 * j) * ex.binom_int(k, j) * q(2 * j, 2 * m, table),
                          ex.factorial(2 * j + 2 * m))
    return total


def check_q_sum_zero(k_max:int, table:StirlingTable = None) -> CheckReport:
    """q_weighted_sum(k,m) vanishes for all 1 <= m < k <= k_max"""
    table = table or default_table()
    report = CheckReport('q_sum_zero')
    for k in range(2, k_max + 1):
        for m in range(1, k):
            report.record((k, m), q_weighted_sum(k, m, table), 0)
    return report
