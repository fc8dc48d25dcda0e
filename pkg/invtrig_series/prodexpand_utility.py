#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: prodexpand_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Products of shifted squares prod (l^2 + beta) and prod ((2l-1)^2 + beta) as
    polynomials in beta = alpha^2, their Stirling number expansions and identities,
    and the series coefficients of cosh, sinh, cos and sin composed with
    arcsin and arccos. All arithmetic stays real: cos/sin variants use -alpha^2.

License:
"""


""" Imports """
# Import python libraries
from dataclasses import dataclass
from fractions import Fraction

# Import external packages

# Import local modules
from invtrig_series import exact_utility as ex
from invtrig_series.module.coeff_series import CoeffSeries
from invtrig_series.module.errors import DomainError
from invtrig_series.module.int_polynomial import IntPolynomial
from invtrig_series.module.report import CheckReport
from invtrig_series.module.stirling_table import StirlingTable, default_table


""" Variable definitions """

VARIANTS = ('consecutive', 'odd')

# tag -> (outer function, inner function, expansion point)
TRIG_TAGS = {
    'cosh_arcsin': ('cosh', 'arcsin', 'zero'),
    'sinh_arcsin': ('sinh', 'arcsin', 'zero'),
    'cos_arcsin': ('cos', 'arcsin', 'zero'),
    'sin_arcsin': ('sin', 'arcsin', 'zero'),
    'cosh_arccos_1': ('cosh', 'arccos', 'one'),
    'cos_arccos_1': ('cos', 'arccos', 'one'),
    'cosh_arccos_0': ('cosh', 'arccos', 'zero'),
    'sinh_arccos_0': ('sinh', 'arccos', 'zero'),
    'cos_arccos_0': ('cos', 'arccos', 'zero'),
    'sin_arccos_0': ('sin', 'arccos', 'zero'),
}

# f(alpha (pi/2 - s)) = P_even(alpha pi/2) g(alpha s) + P_odd(alpha pi/2) h(alpha s),
# arccos x = pi/2 - arcsin x: tag -> (even part tag, prefactor, odd part tag, prefactor)
_ARCCOS_AT_ZERO = {
    'cosh_arccos_0': ('cosh_arcsin', 'cosh', 'sinh_arcsin', '-sinh'),
    'sinh_arccos_0': ('cosh_arcsin', 'sinh', 'sinh_arcsin', '-cosh'),
    'cos_arccos_0': ('cos_arcsin', 'cos', 'sin_arcsin', 'sin'),
    'sin_arccos_0': ('cos_arcsin', 'sin', 'sin_arcsin', '-cos'),
}


""" Class definitions """

@dataclass(frozen=True)
class TrigCoeff:
    """
    Coefficient pair of an arccos composition expanded at x = 0

    even_coeff * P_even(alpha pi/2) is the coefficient of x^(2n),
    odd_coeff * P_odd(alpha pi/2) the coefficient of x^(2n+1).
    Prefactors are names 'cosh', 'sinh', 'cos', 'sin', with an optional leading '-'.
    """
    even_coeff: Fraction
    odd_coeff: Fraction
    prefactor_even: str
    prefactor_odd: str


""" Function definitions """

def prefactor_parts(prefactor:str) -> tuple:
    """'-sinh' -> (-1, 'sinh')"""
    if prefactor.startswith('-'):
        return -1, prefactor[1:]
    return 1, prefactor


def square_product(k:int, step:int, offset:int) -> IntPolynomial:
    """prod_{l=1}^{k} ((step*l + offset)^2 + beta), repeated multiplication"""
    poly = IntPolynomial((1,))
    for l in range(1, k + 1):
        poly = poly * IntPolynomial(((step * l + offset) ** 2, 1))
    return poly


def prod_squares(k:int, variant:str) -> IntPolynomial:
    """
    Direct expansion of prod_{l=1}^{k} (l^2 + beta) (consecutive) or
    prod_{l=1}^{k} ((2l-1)^2 + beta) (odd)

    Parameters
    k : int, k >= 1
    variant : str, 'consecutive' or 'odd'

    Returns
    poly : IntPolynomial in beta
    """
    if k < 1:
        raise DomainError(f'product needs k >= 1, got {k}')
    if variant == 'consecutive':
        return square_product(k, 1, 0)
    if variant == 'odd':
        return square_product(k, 2, -1)
    raise DomainError(f'unknown product variant {variant!r}, use one of {VARIANTS}')


def prod_squares_stirling(k:int, variant:str, table:StirlingTable = None) -> IntPolynomial:
    """
    Same product from Stirling numbers of the first kind.

    consecutive: coefficient of beta^j is
        (-1)^(k+j) sum_{l=2j+1}^{2k+1} binom(l,2j+1) s(2k+1,l) k^(l-2j-1)
    odd: coefficient of beta^j is
        (-1)^(k+j) 4^k sum_{l=2j}^{2k} s(2k,l)/2^l binom(l,2j) (2k-1)^(l-2j)

    Half powers are summed as exact rationals, a non integral result raises InconsistencyError.
    """
    if k < 1:
        raise DomainError(f'product needs k >= 1, got {k}')
    table = table or default_table()
    coeffs = []
    if variant == 'consecutive':
        for j in range(k + 1):
            inner = sum(ex.binom_int(l, 2 * j + 1) * table.s(2 * k + 1, l) * k ** (l - 2 * j - 1)
                        for l in range(2 * j + 1, 2 * k + 2))
            coeffs.append(Fraction((-1) ** (k + j) * inner))
    elif variant == 'odd':
        for j in range(k + 1):
            inner = sum((Fraction(table.s(2 * k, l), 2 ** l) * ex.binom_int(l, 2 * j) * (2 * k - 1) ** (l - 2 * j)
                         for l in range(2 * j, 2 * k + 1)), Fraction(0))
            coeffs.append((-1) ** (k + j) * 4 ** k * inner)
    else:
        raise DomainError(f'unknown product variant {variant!r}, use one of {VARIANTS}')
    return IntPolynomial.from_rationals(coeffs)


def check_product_equivalence(k_max:int, table:StirlingTable = None) -> CheckReport:
    """prod_squares == prod_squares_stirling, both variants, k <= k_max"""
    report = CheckReport('prod_equivalence')
    for variant in VARIANTS:
        for k in range(1, k_max + 1):
            report.record((variant, k), prod_squares_stirling(k, variant, table), prod_squares(k, variant))
    return report


def check_lemma_identities(k_max:int, table:StirlingTable = None) -> CheckReport:
    """
    Stirling sums behind the product expansions, for all k <= k_max:
    (i)   sum_{l=0}^{2k} (l+1) s(2k+1,l+1) k^l = (-1)^k (k!)^2
    (ii)  sum_{l=2j+1}^{2k-1} binom(l,2j) s(2k-1,l) (k-1)^(l-2j) = -s(2k-1,2j), 0 <= j <= k-1
    (iii) sum_{l=2j+1}^{2k} binom(l,2j+1) s(2k,l) (k-1/2)^l = 0, 0 <= j < k
    (iv)  sum_{l=0}^{2k} s(2k,l) (k-1/2)^l = (-1)^k ((2k-1)!!/2^k)^2
    (v)   sum_{l=1}^{2m} binom(2j+l,2j+1) s(2j+2m,2j+l) (j+m-1/2)^l = 0, j >= 0, m >= 1, j+m <= k_max
    """
    table = table or default_table()
    report = CheckReport('prod_lemma')
    for k in range(1, k_max + 1):
        half = Fraction(2 * k - 1, 2)
        lhs = sum((l + 1) * table.s(2 * k + 1, l + 1) * k ** l for l in range(2 * k + 1))
        report.record(('i', k), lhs, (-1) ** k * ex.factorial(k) ** 2)
        for j in range(k):
            # at k = 1 the sum is 0 * s(1,1) and s(1,0) = 0
            lhs = sum(ex.binom_int(l, 2 * j) * table.s(2 * k - 1, l) * ex.pow_rat(k - 1, l - 2 * j)
                      for l in range(2 * j + 1, 2 * k))
            report.record(('ii', k, j), lhs, -table.s(2 * k - 1, 2 * j))
            lhs = sum((ex.binom_int(l, 2 * j + 1) * table.s(2 * k, l) * half ** l
                       for l in range(2 * j + 1, 2 * k + 1)), Fraction(0))
            report.record(('iii', k, j), lhs, 0)
        lhs = sum((table.s(2 * k, l) * half ** l for l in range(2 * k + 1)), Fraction(0))
        report.record(('iv', k), lhs, (-1) ** k * Fraction(ex.double_factorial(2 * k - 1), 2 ** k) ** 2)
    for j in range(k_max):
        for m in range(1, k_max + 1 - j):
            c = Fraction(2 * j + 2 * m - 1, 2)
            lhs = sum((ex.binom_int(2 * j + l, 2 * j + 1) * table.s(2 * j + 2 * m, 2 * j + l) * c ** l
                       for l in range(1, 2 * m + 1)), Fraction(0))
            report.record(('v', j, m), lhs, 0)
    report.notes.append('identity (ii) at k=1, j=0 reduces to 0*s(1,1) = -s(1,0) = 0')
    return report


def _shifted_product(n:int, step:int, offset:int, beta:Fraction) -> Fraction:
    return square_product(n, step, offset).evaluate(beta)


def trig_coeff(tag:str, alpha, n:int):
    """
    n-th series coefficient of a cosh/sinh/cos/sin composed with arcsin or arccos

    Index meaning per tag:
    *_arcsin        even functions: coefficient of x^(2n); odd functions: of x^(2n+1)
    *_arccos_1      coefficient of (x-1)^n
    *_arccos_0      TrigCoeff pair for x^(2n) and x^(2n+1)

    Parameters
    tag : str, key of TRIG_TAGS
    alpha : Rational
    n : int, n >= 0

    Returns
    coeff : Fraction, or TrigCoeff for the *_arccos_0 tags
    """
    if tag not in TRIG_TAGS:
        raise DomainError(f'unsupported tag {tag!r}')
    if n < 0:
        raise DomainError(f'coefficient index must be natural, got {n}')
    alpha = ex.as_rational(alpha)
    outer = TRIG_TAGS[tag][0]
    # hyperbolic outer functions use +alpha^2, trigonometric ones -alpha^2
    beta = alpha ** 2 if outer in ('cosh', 'sinh') else -alpha ** 2

    if tag in ('cosh_arcsin', 'cos_arcsin'):
        return _shifted_product(n, 2, -2, beta) / ex.factorial(2 * n)
    if tag in ('sinh_arcsin', 'sin_arcsin'):
        return alpha * _shifted_product(n, 2, -1, beta) / ex.factorial(2 * n + 1)
    if tag in ('cosh_arccos_1', 'cos_arccos_1'):
        return (Fraction((-1) ** n, ex.double_factorial(2 * n - 1))
                * _shifted_product(n, 1, -1, beta) / ex.factorial(n))
    even_tag, even_pref, odd_tag, odd_pref = _ARCCOS_AT_ZERO[tag]
    return TrigCoeff(trig_coeff(even_tag, alpha, n), trig_coeff(odd_tag, alpha, n), even_pref, odd_pref)


def trig_series(tag:str, alpha, M:int):
    """
    Truncated expansion through index M

    Returns
    series : CoeffSeries, or a pair (even part, odd part) of CoeffSeries for the
             *_arccos_0 tags, each carrying its prefactor in meta
    """
    if M < 0:
        raise DomainError(f'truncation order must be natural, got {M}')
    alpha = ex.as_rational(alpha)
    meta = {'expr': tag, 'alpha': alpha}
    if tag in _ARCCOS_AT_ZERO:
        even_tag, even_pref, odd_tag, odd_pref = _ARCCOS_AT_ZERO[tag]
        even = trig_series(even_tag, alpha, M)
        odd = trig_series(odd_tag, alpha, M)
        return (CoeffSeries('zero', even.coeffs, 'even', dict(meta, prefactor=even_pref)),
                CoeffSeries('zero', odd.coeffs, 'all', dict(meta, prefactor=odd_pref)))
    if tag not in TRIG_TAGS:
        raise DomainError(f'unsupported tag {tag!r}')
    values = [trig_coeff(tag, alpha, n) for n in range(M + 1)]
    if tag in ('cosh_arccos_1', 'cos_arccos_1'):
        return CoeffSeries('one', values, 'all', meta)
    coeffs = [Fraction(0)] * (2 * M + 2)
    odd = tag in ('sinh_arcsin', 'sin_arcsin')
    for n, c in enumerate(values):
        coeffs[2 * n + odd] = c
    if not odd:
        return CoeffSeries('zero', coeffs[:2 * M + 1], 'even', meta)
    return CoeffSeries('zero', coeffs, 'all', meta)
