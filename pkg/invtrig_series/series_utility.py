#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: series_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Truncated Taylor and Maclaurin expansions of powers of arcsin x / x, arcsinh x / x,
    (arccos x)^2 / (2(1-x)) and its real powers, derivative formulas at x = 1,
    Maclaurin coefficients of (arccos x)^(2k) and the exact partial sum evaluation
    used by the numeric comparisons.

    Series around 1 are stored in the variable (x-1), series around -1 in (x+1).
    Expansions in 2(x-1) or 1-x are converted before storage.

License:
"""


""" Imports """
# Import python libraries
from dataclasses import dataclass
from fractions import Fraction

# Import external packages

# Import local modules
from invtrig_series import exact_utility as ex
from invtrig_series.bell_utility import bell_arccos
from invtrig_series.prodexpand_utility import TRIG_TAGS, trig_series
from invtrig_series.qfunc_utility import q
from invtrig_series.module.coeff_series import CENTER_VALUE, CoeffSeries
from invtrig_series.module.errors import DomainError, InconsistencyError, NotExpandable
from invtrig_series.module.fixnum import FixNum
from invtrig_series.module.report import CheckReport
from invtrig_series.module.stirling_table import StirlingTable, default_table


""" Variable definitions """

TAIL_SAFETY = 2
# ratio_pow_alpha runs the Bell polynomial route up to this order by default
CROSS_CHECK_MAX = 20

DERIVATIVE_FORMS = ('ratio', 'ratio-hyp', 'shifted', 'shifted-hyp')
SHIFTED_VARIANTS = ('pi-minus-arccos', 'pi-plus-i-arccosh')
FAMILIES = ('arcsin-pow', 'arcsinh-pow', 'arccos-ratio', 'arccosh-ratio',
            'shifted', 'shifted-hyp', 'alpha-ratio', 'trig')

# radius of convergence around each expansion point
_RADIUS = {'zero': Fraction(1), 'one': Fraction(2), 'minus_one': Fraction(2)}


""" Function definitions """

def arcsin_series(M:int) -> CoeffSeries:
    """arcsin x / x through x^(2M): coefficient of x^(2n) is (2n)! / (4^n (n!)^2 (2n+1))"""
    coeffs = [Fraction(0)] * (2 * M + 1)
    for n in range(M + 1):
        coeffs[2 * n] = Fraction(ex.central_binom(n), 4 ** n * (2 * n + 1))
    return CoeffSeries('zero', coeffs, 'even', {'expr': 'arcsin-pow', 'k': 1})


def arcsin_pow(k:int, M:int, hyperbolic:bool = False, table:StirlingTable = None) -> CoeffSeries:
    """
    (arcsin x / x)^k, or (arcsinh x / x)^k, through x^(2M)

    coefficient of x^(2m) = (+-1)^m Q(k,2m) 4^m / (binom(k+2m,k) (2m)!), the sign only for arcsin

    Parameters
    k : int, k >= 1
    M : int, M >= 0
    hyperbolic : bool, arcsinh instead of arcsin

    Returns
    series : CoeffSeries around 0, even
    """
    if k < 1 or M < 0:
        raise DomainError(f'arcsin_pow needs k >= 1 and M >= 0, got k={k}, M={M}')
    coeffs = [Fraction(0)] * (2 * M + 1)
    for m in range(M + 1):
        sign = 1 if hyperbolic else (-1) ** m
        coeffs[2 * m] = sign * q(k, 2 * m, table) * Fraction(4 ** m, ex.binom_int(k + 2 * m, k) * ex.factorial(2 * m))
    expr = 'arcsinh-pow' if hyperbolic else 'arcsin-pow'
    return CoeffSeries('zero', coeffs, 'even', {'expr': expr, 'k': k})


def arcsin_power_coeff(k:int, m:int, table:StirlingTable = None) -> Fraction:
    """
    Coefficient of x^m in (arcsin x)^k / k! from the product expansions:
    k = 2K:   (-4)^(m/2-K) sum_l binom(l,2K-1) s(m-1,l) (m/2-1)^(l-2K+1) / m!
    k = 2K+1: (-1)^(K+(m-1)/2) 2^m sum_l s(m-1,l)/2^(l+1) binom(l,2K) (m-2)^(l-2K) / m!
    """
    table = table or default_table()
    if m < k or (m - k) % 2:
        return Fraction(0)
    if k % 2 == 0:
        big_k = k // 2
        half = m // 2
        inner = sum(ex.binom_int(l, 2 * big_k - 1) * table.s(2 * half - 1, l)
                    * ex.pow_rat(half - 1, l - 2 * big_k + 1)
                    for l in range(2 * big_k - 1, 2 * half))
        return Fraction((-4) ** (half - big_k) * inner, ex.factorial(2 * half))
    big_k = (k - 1) // 2
    half = (m - 1) // 2
    inner = sum((Fraction(table.s(2 * half, l), 2 ** (l + 1)) * ex.binom_int(l, 2 * big_k)
                 * ex.pow_rat(2 * half - 1, l - 2 * big_k)
                 for l in range(2 * big_k, 2 * half + 1)), Fraction(0))
    return (-1) ** (big_k + half) * inner * Fraction(2 ** m, ex.factorial(m))


def arcsin_pow_stirling(k:int, M:int, table:StirlingTable = None) -> CoeffSeries:
    """(arcsin x / x)^k through x^(2M) recovered from the product expansions"""
    if k < 1 or M < 0:
        raise DomainError(f'arcsin_pow_stirling needs k >= 1 and M >= 0, got k={k}, M={M}')
    coeffs = [Fraction(0)] * (2 * M + 1)
    for m in range(M + 1):
        coeffs[2 * m] = ex.factorial(k) * arcsin_power_coeff(k, 2 * m + k, table)
    return CoeffSeries('zero', coeffs, 'even', {'expr': 'arcsin-pow', 'k': k, 'route': 'stirling'})


def arcsin_square_series(M:int) -> CoeffSeries:
    """(arcsin x)^2 / 2 = 1/2 sum_{n>=1} (2n-2)!!/(2n-1)!! x^(2n)/n through x^(2M)"""
    coeffs = [Fraction(0)] * (2 * M + 1)
    for n in range(1, M + 1):
        coeffs[2 * n] = Fraction(ex.double_factorial(2 * n - 2), 2 * n * ex.double_factorial(2 * n - 1))
    return CoeffSeries('zero', coeffs, 'even', {'expr': 'arcsin-square-half'})


def ratio_coeff(k:int, n:int, table:StirlingTable = None) -> Fraction:
    """(2k)! Q(2k,2n) / (2k+2n)!, the coefficient of [2(x-1)]^n in [(arccos x)^2/(2(1-x))]^k"""
    return Fraction(ex.factorial(2 * k) * q(2 * k, 2 * n, table), ex.factorial(2 * k + 2 * n))


def arccos_ratio_pow(k:int, M:int, hyperbolic:bool = False, table:StirlingTable = None) -> CoeffSeries:
    """
    [(arccos x)^2 / (2(1-x))]^k, or [(arccosh x)^2 / (2(x-1))]^k, in powers of (x-1)
    coefficient of (x-1)^n = (2k)! Q(2k,2n) 2^n / (2k+2n)!
    Both functions agree, their coefficients are identical.
    """
    if k < 1 or M < 0:
        raise DomainError(f'arccos_ratio_pow needs k >= 1 and M >= 0, got k={k}, M={M}')
    coeffs = [ratio_coeff(k, n, table) * 2 ** n for n in range(M + 1)]
    expr = 'arccosh-ratio' if hyperbolic else 'arccos-ratio'
    return CoeffSeries('one', coeffs, 'all', {'expr': expr, 'k': k})


def shifted_forms(k:int, M:int, variant:str = 'pi-minus-arccos', table:StirlingTable = None) -> CoeffSeries:
    """
    [(pi - arccos x)^2 / (2(1+x))]^k in powers of (x+1), coefficient (-1)^m (2k)! Q(2k,2m) 2^m / (2k+2m)!

    The pi-plus-i-arccosh variant has the same coefficients, its function carries the
    global factor (-1)^k stored as meta['global_factor'].
    """
    if variant not in SHIFTED_VARIANTS:
        raise DomainError(f'unknown variant {variant!r}, use one of {SHIFTED_VARIANTS}')
    if k < 1 or M < 0:
        raise DomainError(f'shifted_forms needs k >= 1 and M >= 0, got k={k}, M={M}')
    coeffs = [(-1) ** m * ratio_coeff(k, m, table) * 2 ** m for m in range(M + 1)]
    meta = {'expr': 'shifted', 'k': k, 'variant': variant}
    if variant == 'pi-plus-i-arccosh':
        meta['global_factor'] = (-1) ** k
    return CoeffSeries('minus_one', coeffs, 'all', meta)


def ratio_pow_alpha(alpha, M:int, cross_check:bool = None, table:StirlingTable = None) -> CoeffSeries:
    """
    [(arccos x)^2 / (2(1-x))]^alpha in powers of (x-1) for a rational alpha.

    Coefficient of [2(x-1)]^n:
        sum_{j=1}^{n} (-1)^j <alpha>_j / j! sum_{l=1}^{j} (-1)^l (2l)! binom(j,l) Q(2l,2n) / (2l+2n)!
    With cross_check the same coefficient is rebuilt through Faa di Bruno,
        n-th derivative = sum_j <alpha>_j B_{n,j}(derivatives of the base),
    and a mismatch raises InconsistencyError. Default: cross check up to CROSS_CHECK_MAX.
    """
    alpha = ex.as_rational(alpha)
    if M < 0:
        raise DomainError(f'truncation order must be natural, got {M}')
    if cross_check is None:
        cross_check = M <= CROSS_CHECK_MAX
    falling = [ex.falling(alpha, j) for j in range(M + 1)]
    coeffs = [Fraction(1)]
    for n in range(1, M + 1):
        weights = [None] + [ratio_coeff(l, n, table) for l in range(1, n + 1)]
        value = Fraction(0)
        for j in range(1, n + 1):
            if falling[j] == 0:
                continue
            inner = sum(((-1) ** l * ex.binom_int(j, l) * weights[l] for l in range(1, j + 1)), Fraction(0))
            value += (-1) ** j * falling[j] / ex.factorial(j) * inner
        if cross_check:
            derivative = sum((falling[j] * bell_arccos(n, j, table) for j in range(1, n + 1)), Fraction(0))
            if derivative / (ex.factorial(n) * 2 ** n) != value:
                raise InconsistencyError(f'alpha={ex.rat_to_str(alpha)}, n={n}: Faa di Bruno route '
                                         f'{ex.rat_to_str(derivative / (ex.factorial(n) * 2 ** n))} '
                                         f'!= closed form {ex.rat_to_str(value)}')
        coeffs.append(value * 2 ** n)
    return CoeffSeries('one', coeffs, 'all', {'expr': 'alpha-ratio', 'alpha': alpha, 'cross_checked': cross_check})


def deriv_at_one(k:int, m:int, form:str = 'ratio', table:StirlingTable = None) -> Fraction:
    """
    m-th one sided derivative at the expansion point, (2k)! (2m)!! Q(2k,2m) / (2k+2m)! times
    ratio        [(arccos x)^2/(2(1-x))]^k at 1-            1
    ratio-hyp    [(arccosh x)^2/(2(1-x))]^k at 1-           (-1)^k
    shifted      [(pi - arccos x)^2/(2(1+x))]^k at -1+      (-1)^m
    shifted-hyp  [(pi + i arccosh x)^2/(2(1+x))]^k at -1+   (-1)^(k+m)
    """
    if k < 1 or m < 1:
        raise DomainError(f'deriv_at_one needs k, m >= 1, got k={k}, m={m}')
    signs = {'ratio': 1, 'ratio-hyp': (-1) ** k, 'shifted': (-1) ** m, 'shifted-hyp': (-1) ** (k + m)}
    if form not in signs:
        raise DomainError(f'unknown form {form!r}, use one of {DERIVATIVE_FORMS}')
    return signs[form] * ex.double_factorial(2 * m) * ratio_coeff(k, m, table)


def even_pow_deriv_at1(k:int, n:int, hyperbolic:bool = False, table:StirlingTable = None) -> Fraction:
    """
    n-th derivative of (arccos x)^(2k), or (arccosh x)^(2k), at x = 1
        0                                       n < k
        (+-1)^k (2k)!!                          n = k
        (+-1)^k (2k)! Q(2k,2n-2k) / (2n-1)!!    n > k
    with the minus sign for arccos
    """
    if k < 1 or n < 0:
        raise DomainError(f'even_pow_deriv_at1 needs k >= 1 and n >= 0, got k={k}, n={n}')
    if n < k:
        return Fraction(0)
    sign = 1 if hyperbolic else (-1) ** k
    if n == k:
        return Fraction(sign * ex.double_factorial(2 * k))
    return Fraction(sign * ex.factorial(2 * k) * q(2 * k, 2 * n - 2 * k, table), ex.double_factorial(2 * n - 1))


def even_pow_series(k:int, M:int, hyperbolic:bool = False, table:StirlingTable = None) -> CoeffSeries:
    """(arccos x)^(2k), or (arccosh x)^(2k), in powers of (x-1) through (x-1)^M"""
    coeffs = [even_pow_deriv_at1(k, n, hyperbolic, table) / ex.factorial(n) for n in range(M + 1)]
    expr = 'arccosh-even-pow' if hyperbolic else 'arccos-even-pow'
    return CoeffSeries('one', coeffs, 'all', {'expr': expr, 'k': k})


def tail_estimate(terms:list):
    """
    TAIL_SAFETY * |t| r / (1 - r), t the last non-zero term and r its ratio to the previous
    non-zero term. 0 when all terms after the first vanish, None when r >= 1 or
    fewer than two non-zero terms are available.
    """
    nonzero = [t for t in terms if t != 0]
    if len(terms) > 1 and all(t == 0 for t in terms[1:]):
        return Fraction(0)
    if len(nonzero) < 2:
        return None
    last, previous = abs(nonzero[-1]), abs(nonzero[-2])
    r = last / previous
    if r >= 1:
        return None
    return TAIL_SAFETY * last * r / (1 - r)


def maclaurin_even_pow(k:int, j:int, M:int, hyperbolic:bool = False, table:StirlingTable = None) -> tuple:
    """
    Approximate coefficient of x^j in (arccos x)^(2k) (or (arccosh x)^(2k)):
    the (x-1) series re-expanded around 0, sum_n c_n binom(n,j) (-1)^(n-j)
    over M terms starting at n = max(j,k).

    Returns
    (approx, tail) : (Fraction, Fraction or None), see tail_estimate
    """
    if k < 1 or j < 0 or M < 1:
        raise DomainError(f'maclaurin_even_pow needs k >= 1, j >= 0, M >= 1, got {k}, {j}, {M}')
    start = max(j, k)
    terms = []
    for n in range(start, start + M):
        c = even_pow_deriv_at1(k, n, hyperbolic, table) / ex.factorial(n)
        terms.append(c * ex.binom_int(n, j) * (-1) ** (n - j))
    return sum(terms, Fraction(0)), tail_estimate(terms)


def odd_power_leading_sum(k:int, m:int) -> Fraction:
    """sum_{j=0}^{m} (-1)^j <2k-1>_j [2(m-j)-1]!! binom(2m-j-1, 2(m-j))"""
    return sum((Fraction((-1) ** j) * ex.falling(2 * k - 1, j) * ex.double_factorial(2 * (m - j) - 1)
                * ex.binom_int(2 * m - j - 1, 2 * (m - j)) for j in range(m + 1)), Fraction(0))


def odd_pow_at_one(k:int):
    """(arccos x)^(2k-1) has no Taylor series at x = 1: always raises NotExpandable"""
    if k < 1:
        raise DomainError(f'odd_pow_at_one needs k >= 1, got {k}')
    sums = ', '.join(f'm={m}: {ex.rat_to_str(odd_power_leading_sum(k, m))}' for m in range(1, 4))
    raise NotExpandable(f'(arccos x)^{2 * k - 1} cannot be expanded into a Taylor series at x = 1: '
                        f'its m-th derivative at 1- is 0 for m < {2 * k - 1} and diverges for m >= {2 * k - 1}. '
                        f'Leading coefficient sums {sums}')


def check_convergence_region(series:CoeffSeries, x:Fraction):
    radius = _RADIUS[series.center]
    if abs(x - CENTER_VALUE[series.center]) >= radius:
        raise DomainError(f'x = {ex.rat_to_str(x)} outside |{series.variable}| < {radius}')


def eval_with_tail(series:CoeffSeries, x, digits:int) -> tuple:
    """
    Exact partial sum at x rounded to `digits` places, with its tail estimate

    Parameters
    series : CoeffSeries
    x : Rational inside the convergence region
    digits : int, decimal places

    Returns
    (value, tail) : (FixNum, Fraction or None)
    """
    x = ex.as_rational(x)
    check_convergence_region(series, x)
    terms = series.terms(x)
    return FixNum.from_rational(sum(terms, Fraction(0)), digits), tail_estimate(terms)


def eval_truncated(series:CoeffSeries, x, digits:int) -> FixNum:
    """partial sum at x rounded to `digits` places; err covers the rounding only, not the truncation"""
    return eval_with_tail(series, x, digits)[0]


""" Class definitions """

@dataclass(frozen=True)
class SeriesSpec:
    """
    Descriptor of one expansion, understood by build_series and the numeric comparison

    Attributes
    family : str, one of FAMILIES
    M : int, truncation order
    k : int, power for the integer families
    alpha : Fraction, real power of alpha-ratio and parameter of trig
    tag : str, TRIG_TAGS key for the trig family
    """
    family: str
    M: int
    k: int = 1
    alpha: Fraction = None
    tag: str = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f'unknown series family {self.family!r}, use one of {FAMILIES}')
        if self.M < 0:
            raise DomainError(f'truncation order must be natural, got {self.M}')
        if self.family in ('alpha-ratio', 'trig'):
            if self.alpha is None:
                raise DomainError(f'{self.family} needs alpha')
            object.__setattr__(self, 'alpha', ex.as_rational(self.alpha))
        elif self.k < 1:
            raise DomainError(f'{self.family} needs k >= 1, got {self.k}')
        if self.family == 'trig' and (self.tag not in TRIG_TAGS or self.tag.endswith('_0')
                                      and 'arccos' in self.tag):
            raise DomainError(f'trig family needs a single series tag, got {self.tag!r}')

    @property
    def label(self) -> str:
        if self.family == 'alpha-ratio':
            return f'{self.family}(alpha={ex.rat_to_str(self.alpha)})'
        if self.family == 'trig':
            return f'{self.tag}(alpha={ex.rat_to_str(self.alpha)})'
        return f'{self.family}(k={self.k})'


def build_series(spec:SeriesSpec, table:StirlingTable = None) -> CoeffSeries:
    """construct the truncated series a SeriesSpec describes"""
    family = spec.family
    if family in ('arcsin-pow', 'arcsinh-pow'):
        return arcsin_pow(spec.k, spec.M, family == 'arcsinh-pow', table)
    if family in ('arccos-ratio', 'arccosh-ratio'):
        return arccos_ratio_pow(spec.k, spec.M, family == 'arccosh-ratio', table)
    if family == 'shifted':
        return shifted_forms(spec.k, spec.M, 'pi-minus-arccos', table)
    if family == 'shifted-hyp':
        return shifted_forms(spec.k, spec.M, 'pi-plus-i-arccosh', table)
    if family == 'alpha-ratio':
        return ratio_pow_alpha(spec.alpha, spec.M, table=table)
    return trig_series(spec.tag, spec.alpha, spec.M)


""" Identity checks """

def check_product_consistency(k_max:int, M:int, table:StirlingTable = None) -> CheckReport:
    """
    arcsin_pow(k1) * arcsin_pow(k2) == arcsin_pow(k1+k2) for k1 + k2 <= k_max,
    and arcsin_series(M)^k == arcsin_pow(k), both through x^(2M)
    """
    report = CheckReport('series_product')
    powers = {k: arcsin_pow(k, M, table=table) for k in range(1, k_max + 1)}
    base = arcsin_series(M)
    for k1 in range(1, k_max):
        for k2 in range(k1, k_max - k1 + 1):
            report.record((k1, k2), (powers[k1] * powers[k2]).coeffs, powers[k1 + k2].coeffs)
    for k in range(1, k_max + 1):
        report.record((k, 'closed_form_power'), base.power(k).coeffs, powers[k].coeffs)
    return report


def check_recovery(m_max:int, k_max:int = 6, table:StirlingTable = None) -> CheckReport:
    """
    arcsin_pow(2) coefficient of x^(2m) == (2m)!!/((2m+1)!!(m+1)) for m <= m_max,
    the same coefficient from the (arcsin x)^2/2 series, and
    arcsin_pow_stirling(k) == arcsin_pow(k) for k <= k_max
    """
    report = CheckReport('series_recovery')
    square = arcsin_pow(2, m_max, table=table)
    half_square = arcsin_square_series(m_max + 1)
    for m in range(m_max + 1):
        expected = Fraction(ex.double_factorial(2 * m), ex.double_factorial(2 * m + 1) * (m + 1))
        report.record((m, 'double_factorial'), square[2 * m], expected)
        report.record((m, 'square_series'), square[2 * m], 2 * half_square[2 * m + 2])
    for k in range(1, k_max + 1):
        report.record((k, 'stirling_route'), arcsin_pow_stirling(k, m_max, table).coeffs,
                      arcsin_pow(k, m_max, table=table).coeffs)
    return report


def check_alpha_natural(k_max:int, n_max:int, table:StirlingTable = None) -> CheckReport:
    """ratio_pow_alpha(alpha = k) reproduces arccos_ratio_pow(k) for k <= k_max, n <= n_max"""
    report = CheckReport('series_alpha_natural')
    for k in range(1, k_max + 1):
        general = ratio_pow_alpha(k, n_max, table=table)
        natural = arccos_ratio_pow(k, n_max, table=table)
        for n in range(n_max + 1):
            report.record((k, n), general[n], natural[n])
    return report


def check_derivatives(k_max:int, m_max:int, table:StirlingTable = None) -> CheckReport:
    """
    deriv_at_one(k,m) == m! [coefficient of (x-1)^m in arccos_ratio_pow(k)],
    shifted derivatives == m! [coefficient of (x+1)^m in shifted_forms(k)],
    even_pow_series(k) == (-2)^k (x-1)^k arccos_ratio_pow(k)
    """
    report = CheckReport('series_derivatives')
    for k in range(1, k_max + 1):
        ratio = arccos_ratio_pow(k, m_max, table=table)
        shifted = shifted_forms(k, m_max, table=table)
        even = even_pow_series(k, m_max + k, table=table)
        even_hyp = even_pow_series(k, m_max + k, hyperbolic=True, table=table)
        for m in range(1, m_max + 1):
            report.record((k, m, 'ratio'), deriv_at_one(k, m, 'ratio', table), ex.factorial(m) * ratio[m])
            report.record((k, m, 'ratio-hyp'), deriv_at_one(k, m, 'ratio-hyp', table),
                          (-1) ** k * ex.factorial(m) * ratio[m])
            report.record((k, m, 'shifted'), deriv_at_one(k, m, 'shifted', table), ex.factorial(m) * shifted[m])
        for n in range(m_max + k + 1):
            expected = (-2) ** k * ratio[n - k] if k <= n <= m_max + k else Fraction(0)
            report.record((k, n, 'even_pow'), even[n], expected)
            report.record((k, n, 'even_pow_hyp'), even_hyp[n], (-1) ** k * expected)
    return report


def check_odd_powers(k_max:int) -> CheckReport:
    """odd_pow_at_one raises NotExpandable for every 1 <= k <= k_max"""
    report = CheckReport('series_odd_powers')
    for k in range(1, k_max + 1):
        try:
            odd_pow_at_one(k)
            report.record(k, 'returned', 'NotExpandable')
        except NotExpandable:
            report.record(k, 'NotExpandable', 'NotExpandable')
    return report
