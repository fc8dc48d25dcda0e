#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: stirling_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Signed Stirling numbers of the first kind s(n,k): point queries and rows from the
    cached triangle, an independent generating function route [ln(1+x)]^k/k!,
    and the identities tying them to binomial coefficients and rising factorials.

License:
"""


""" Imports """
# Import python libraries
from fractions import Fraction

# Import external packages

# Import local modules
from invtrig_series import exact_utility as ex
from invtrig_series.module.coeff_series import series_mul, series_pow
from invtrig_series.module.errors import DomainError
from invtrig_series.module.report import CheckReport
from invtrig_series.module.stirling_table import StirlingTable, default_table


""" Function definitions """

def stirling1(n:int, k:int, table:StirlingTable = None) -> int:
    """
    Signed Stirling number of the first kind s(n,k) from the triangular recurrence

    Parameters
    n : int, n >= 0
    k : int, 0 <= k <= n
    table : StirlingTable, default = process wide table

    Returns
    s(n,k) : int
    """
    table = table or default_table()
    return table.s(n, k)


def stirling_row(n:int, table:StirlingTable = None) -> list:
    """row [s(n,0), ..., s(n,n)]"""
    table = table or default_table()
    return table.row(n)


def stirling_oracle(n:int, k:int) -> int:
    """
    s(n,k) as n!/k! times the coefficient of x^n in the k-th power of the
    truncated series ln(1+x) = x - x^2/2 + x^3/3 - ...
    Slow on purpose: it shares nothing with the recurrence.
    """
    if n < 0 or k < 0 or k > n:
        raise DomainError(f's({n},{k}) needs 0 <= k <= n')
    coeff = series_pow(_log1p_series(n), k, n)[n]
    return _to_stirling(coeff, n, k)


def stirling_oracle_triangle(n_max:int) -> list:
    """
    Whole triangle s(n,k), n <= n_max, from successive powers of ln(1+x).
    Same route as stirling_oracle, one series product per k.
    """
    log_series = _log1p_series(n_max)
    rows = [[0] * (n + 1) for n in range(n_max + 1)]
    power = [Fraction(1)] + [Fraction(0)] * n_max
    for k in range(n_max + 1):
        for n in range(k, n_max + 1):
            rows[n][k] = _to_stirling(power[n], n, k)
        power = series_mul(power, log_series, n_max)
    return rows


def _log1p_series(order:int) -> list:
    return [Fraction(0)] + [Fraction((-1) ** (i + 1), i) for i in range(1, order + 1)]


def _to_stirling(coeff:Fraction, n:int, k:int) -> int:
    value = coeff * ex.factorial(n) / ex.factorial(k)
    if value.denominator != 1:
        raise ArithmeticError(f'generating function gave non integral s({n},{k}) = {value}')
    return value.numerator


def check_binom_identity(n:int, z, table:StirlingTable = None) -> bool:
    """
    n! binom(z,n) == sum_k s(n,k) z^k, evaluated exactly
    """
    table = table or default_table()
    z = ex.as_rational(z)
    lhs = ex.factorial(n) * ex.binom(z, n)
    rhs = sum(table.s(n, k) * ex.pow_rat(z, k) for k in range(n + 1))
    return lhs == rhs


def check_rising_identity(n:int, z, table:StirlingTable = None) -> bool:
    """
    (z)_n == sum_k (-1)^(n-k) s(n,k) z^k
    """
    table = table or default_table()
    z = ex.as_rational(z)
    rhs = sum((-1) ** (n - k) * table.s(n, k) * ex.pow_rat(z, k) for k in range(n + 1))
    return ex.rising(z, n) == rhs


def check_triangle(n_max:int, table:StirlingTable = None) -> CheckReport:
    """
    Recurrence triangle against the generating function oracle, signs and row sums
    """
    table = table or default_table()
    report = CheckReport('stirling_oracle')
    oracle = stirling_oracle_triangle(n_max)
    for n in range(n_max + 1):
        row = table.row(n)
        for k in range(n + 1):
            report.record((n, k), row[k], oracle[n][k])
            if k >= 1:
                sign = (row[k] > 0) - (row[k] < 0)
                report.record((n, k, 'sign'), sign, (-1) ** (n - k))
    return report + check_row_sums(n_max, table)


def check_binom_sweep(n_max:int, points:list, table:StirlingTable = None) -> CheckReport:
    """binomial and rising factorial identities for all n <= n_max and the given points"""
    report = CheckReport('stirling_binom')
    for n in range(n_max + 1):
        for z in points:
            report.record((n, ex.rat_to_str(z)), check_binom_identity(n, z, table), True)
            report.record((n, ex.rat_to_str(z), 'rising'), check_rising_identity(n, z, table), True)
    return report


def check_row_sums(n_max:int, table:StirlingTable = None) -> CheckReport:
    """sum_k s(n,k) = 0 for 2 <= n <= n_max, the binomial identity at z = 1"""
    table = table or default_table()
    report = CheckReport('stirling_rowsum')
    for n in range(2, n_max + 1):
        report.record(n, sum(table.row(n)), 0)
    return report
