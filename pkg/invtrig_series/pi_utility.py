#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: pi_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Series representations of pi^2/8, its powers, (pi/(2 sqrt 2))^k, (pi^2/9)^alpha and four
    classical pi^2 series. Partial sums are exact rationals; the irrational targets come from
    oracle_utility only when a residual is measured. Convergence diagnostics estimate the
    geometric rate L(k) of the (pi^2/8)^k series by the root and the ratio test.

License:
"""


""" Imports """
# Import python libraries
import math
from dataclasses import dataclass
from fractions import Fraction

# Import external packages
import numpy as np
import pandas as pd

# Import local modules
from invtrig_series import exact_utility as ex
from invtrig_series import oracle_utility as oracle
from invtrig_series.qfunc_utility import q
from invtrig_series.series_utility import ratio_pow_alpha
from invtrig_series.module.errors import DomainError
from invtrig_series.module.fixnum import FixNum
from invtrig_series.module.report import CheckReport
from invtrig_series.module.stirling_table import StirlingTable


""" Variable definitions """

KINDS = ('pow8', 'sq8', 'sqrt2pow', 'alpha9',
         'classic-basel', 'classic-odd', 'classic-alt', 'classic-central')
CLASSIC_KINDS = ('classic-basel', 'classic-odd', 'classic-alt', 'classic-central')

# limits of |t_(m+1) / t_m| and of |t_m|^(1/m)
RATIO_LIMITS = {'sq8': Fraction(1, 2), 'classic-basel': Fraction(1), 'classic-odd': Fraction(1),
                'classic-alt': Fraction(1), 'classic-central': Fraction(1, 4)}
# ratio and root estimates are read off at this many summands
LIMIT_TERMS = 1000

# pi^2 divided by this number is the target of the series
_PI_SQUARE_DIVISOR = {'sq8': 8, 'classic-basel': 6, 'classic-odd': 8, 'classic-alt': 12, 'classic-central': 18}


""" Class definitions """

@dataclass(frozen=True)
class PiSeriesTag:
    """
    One series representation

    Attributes
    kind : str, one of KINDS
    k : int, power of pow8 and sqrt2pow
    alpha : Fraction, power of alpha9
    """
    kind: str
    k: int = 1
    alpha: Fraction = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f'unknown series {self.kind!r}, use one of {KINDS}')
        if self.kind in ('pow8', 'sqrt2pow') and self.k < 1:
            raise DomainError(f'{self.kind} needs k >= 1, got {self.k}')
        if self.kind == 'alpha9':
            if self.alpha is None:
                raise DomainError('alpha9 needs alpha')
            object.__setattr__(self, 'alpha', ex.as_rational(self.alpha))

    @property
    def label(self) -> str:
        if self.kind in ('pow8', 'sqrt2pow'):
            return f'{self.kind}(k={self.k})'
        if self.kind == 'alpha9':
            return f'alpha9(alpha={ex.rat_to_str(self.alpha)})'
        return self.kind

    @property
    def target_text(self) -> str:
        if self.kind == 'pow8':
            return f'(pi^2/8)^{self.k}'
        if self.kind == 'sqrt2pow':
            return f'(pi/(2 sqrt 2))^{self.k}'
        if self.kind == 'alpha9':
            return f'(pi^2/9)^{ex.rat_to_str(self.alpha)}'
        return f'pi^2/{_PI_SQUARE_DIVISOR[self.kind]}'

    def target(self, digits:int) -> FixNum:
        """constant the series converges to, from the oracle"""
        inner = oracle.guarded_digits(digits)
        pi = oracle.pi_ref(inner)
        pi_square = pi * pi
        if self.kind in _PI_SQUARE_DIVISOR:
            return (pi_square / _PI_SQUARE_DIVISOR[self.kind]).round_to(digits)
        if self.kind == 'pow8':
            return oracle.pow_fp(pi_square / 8, self.k, digits)
        if self.kind == 'sqrt2pow':
            return oracle.pow_fp(pi * oracle.sqrt_fp(2, inner) / 4, self.k, digits)
        return oracle.pow_fp(pi_square / 9, self.alpha, digits)


""" Function definitions """

def term(tag:PiSeriesTag, m:int, table:StirlingTable = None) -> Fraction:
    """m-th summand, m = 0 is the constant term"""
    if m < 0:
        raise DomainError(f'term index must be natural, got {m}')
    return terms(tag, m, table)[m]


def terms(tag:PiSeriesTag, M:int, table:StirlingTable = None) -> list:
    """summands 0..M as exact rationals"""
    if M < 0:
        raise DomainError(f'number of terms must be natural, got {M}')
    kind = tag.kind
    if kind == 'alpha9':
        # x = 1/2 in the (x-1) series: [2(x-1)]^n = (-1)^n
        coeffs = ratio_pow_alpha(tag.alpha, M, cross_check=False, table=table).coeffs
        return [(-1) ** n * c / 2 ** n for n, c in enumerate(coeffs)]
    out = []
    for m in range(M + 1):
        if kind == 'pow8':
            value = (Fraction(1) if m == 0 else (-1) ** m * 2 ** m * q(2 * tag.k, 2 * m, table)
                     * Fraction(ex.factorial(2 * tag.k), ex.factorial(2 * tag.k + 2 * m)))
        elif kind == 'sqrt2pow':
            value = (Fraction(1) if m == 0 else (-1) ** m * 2 ** m * q(tag.k, 2 * m, table)
                     * Fraction(ex.factorial(tag.k), ex.factorial(tag.k + 2 * m)))
        elif kind == 'sq8':
            value = Fraction(0) if m == 0 else Fraction(2 ** m, m * m * ex.central_binom(m))
        elif kind == 'classic-central':
            value = Fraction(0) if m == 0 else Fraction(1, m * m * ex.central_binom(m))
        elif kind == 'classic-basel':
            value = Fraction(1, (m + 1) ** 2)
        elif kind == 'classic-odd':
            value = Fraction(1, (2 * m + 1) ** 2)
        else:
            value = Fraction((-1) ** m, (m + 1) ** 2)
        out.append(value)
    return out


def partial_sum(tag:PiSeriesTag, M:int, table:StirlingTable = None) -> Fraction:
    """
    Exact sum of the summands 0..M

    Parameters
    tag : PiSeriesTag
    M : int, M >= 1

    Returns
    partial : Fraction
    """
    if M < 1:
        raise DomainError(f'partial sums need M >= 1, got {M}')
    return sum(terms(tag, M, table), Fraction(0))


def residual(tag:PiSeriesTag, M:int, digits:int, table:StirlingTable = None) -> FixNum:
    """|partial_sum - target| at `digits` places"""
    if digits < 10:
        raise DomainError(f'residuals need at least 10 digits, got {digits}')
    return abs(tag.target(digits) - partial_sum(tag, M, table))


def _log_abs(value:Fraction) -> float:
    # exact integers keep math.log finite for tiny rationals
    return math.log(abs(value.numerator)) - math.log(value.denominator)


def ratio_diagnostics(tag:PiSeriesTag, M:int, table:StirlingTable = None) -> np.ndarray:
    """
    Float convergence diagnostics of the summands 1..M

    Returns
    diag : np.ndarray, shape (M, 2), row m-1 holds |t_(m+1)/t_m| and |t_m|^(1/m),
           nan where a summand vanishes
    """
    values = terms(tag, M + 1, table)
    diag = np.full((M, 2), np.nan)
    for m in range(1, M + 1):
        t = values[m]
        if t == 0:
            continue
        diag[m - 1, 0] = float(abs(values[m + 1] / t))
        diag[m - 1, 1] = math.exp(_log_abs(t) / m)
    return diag


def l_term(k:int, M:int, table:StirlingTable = None) -> Fraction:
    """(2k)! 2^M Q(2k,2M) / (2k+2M)!, the M-th coefficient of the (pi^2/8)^k series up to sign"""
    return 2 ** M * q(2 * k, 2 * M, table) * Fraction(ex.factorial(2 * k), ex.factorial(2 * k + 2 * M))


def empirical_L(k:int, M:int, digits:int = 30, table:StirlingTable = None) -> dict:
    """
    Root and ratio estimates of the geometric rate of the (pi^2/8)^k series.
    Estimates only; no limit is extrapolated.

    Returns
    estimate : dict, root (FixNum), ratio (Fraction), ratios (np.ndarray of the
               last ten term ratios)
    """
    if k < 1 or M < 10:
        raise DomainError(f'empirical_L needs k >= 1 and M >= 10, got k={k}, M={M}')
    values = [abs(l_term(k, m, table)) for m in range(M - 10, M + 1)]
    root = oracle.pow_fp(values[-1], Fraction(1, M), digits)
    ratios = np.array([float(values[i + 1] / values[i]) for i in range(10)])
    return {'k': k, 'terms': M, 'root': root, 'ratio': values[-1] / values[-2], 'ratios': ratios,
            'authoritative': False}


def alpha9_partial(alpha, M:int, table:StirlingTable = None) -> Fraction:
    """1 + sum_{n=1}^{M} (-1)^n [coefficient of [2(x-1)]^n of the alpha power]; tends to (pi^2/9)^alpha"""
    return partial_sum(PiSeriesTag('alpha9', alpha=alpha), M, table)


def convergence_table(M_values, digits:int = 30, table:StirlingTable = None) -> pd.DataFrame:
    """
    Residuals of sq8 and the four classical series

    Returns
    df : pd.DataFrame of float, index M, one column per series
    """
    columns = ('sq8',) + CLASSIC_KINDS
    data = {kind: [float(residual(PiSeriesTag(kind), M, digits, table)) for M in M_values]
            for kind in columns}
    return pd.DataFrame(data, index=pd.Index(list(M_values), name='M'))


def check_pi_series(digits:int = 30, table:StirlingTable = None) -> CheckReport:
    """
    sq8 partial sums increase and stay below pi^2/8, classical residuals decrease,
    known partial sums, ratio and root limits of the summands, root estimate of L(1) near 1/2
    """
    report = CheckReport('pi_series')
    sq8 = PiSeriesTag('sq8')
    report.record(('sq8', 'partial', 1), partial_sum(sq8, 1, table), Fraction(1))
    report.record(('sq8', 'partial', 2), partial_sum(sq8, 2, table), Fraction(7, 6))
    upper = sq8.target(digits).upper()
    sums = [partial_sum(sq8, M, table) for M in range(1, 31)]
    report.record(('sq8', 'increasing'), all(a < b for a, b in zip(sums, sums[1:])), True)
    report.record(('sq8', 'bounded'), sums[-1] < upper, True)
    report.record(('sq8', 'residual', 60), residual(sq8, 60, digits, table).upper() < Fraction(1, 10 ** 10), True)
    for M in (5, 12):
        report.record(('pow8', 'shift', M), partial_sum(PiSeriesTag('pow8', 1), M, table),
                      partial_sum(sq8, M + 1, table))
    for k in (1, 2, 3):
        for kind in ('pow8', 'sqrt2pow'):
            tag = PiSeriesTag(kind, k)
            small = residual(tag, 60, digits, table).upper() < Fraction(1, 10 ** 8)
            report.record((kind, k, 'residual', 60), small, True)
    report.record(('alpha9', 'alpha0'), alpha9_partial(0, 8, table), Fraction(1))
    report.record(('alpha9', 'alpha1', 1), alpha9_partial(1, 1, table), Fraction(13, 12))
    for alpha in (Fraction(1), Fraction(1, 2)):
        tag = PiSeriesTag('alpha9', alpha=alpha)
        small = residual(tag, 40, digits, table).upper() < Fraction(1, 10 ** 10)
        report.record(('alpha9', ex.rat_to_str(alpha), 'residual', 40), small, True)
    df = convergence_table(range(10, 101, 10), digits, table)
    for kind in CLASSIC_KINDS:
        report.record((kind, 'decreasing'), bool(df[kind].is_monotonic_decreasing), True)
    for kind, limit in RATIO_LIMITS.items():
        last_ratio, last_root = ratio_diagnostics(PiSeriesTag(kind), LIMIT_TERMS, table)[-1]
        report.record((kind, 'ratio_limit'), abs(last_ratio - float(limit)) < 0.05, True, ratio=last_ratio)
        report.record((kind, 'root_limit'), abs(last_root - float(limit)) < 0.05, True, root=last_root)
    estimate = empirical_L(1, 200, digits, table)
    report.record(('L', 1, 'root'), abs(estimate['root'].to_rational() - Fraction(1, 2)) < Fraction(1, 20), True,
                  root=estimate['root'])
    report.notes.append('L(k) estimates are empirical and non-authoritative')
    return report
