#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: oracle_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Fixed point reference values of pi, sqrt, ln, exp, arcsin, arccos, arccosh, arcsinh,
    real powers and the hyperbolic and circular functions, all with certified error bounds.
    These are the ground truth for every truncated series comparison and share no code
    with the series under test. compare puts a truncated series next to the direct
    composition of these functions.
    Working precision is digits + GUARD_DIGITS, rounded once at the end.

License:
"""


""" Imports """
# Import python libraries
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction

# Import external packages

# Import local modules
from invtrig_series import exact_utility as ex
from invtrig_series.module.errors import DomainError, PrecisionInfeasible
from invtrig_series.module.fixnum import FixNum, isqrt_fixnum
from invtrig_series.module.report import CheckReport
from invtrig_series.prodexpand_utility import TRIG_TAGS
from invtrig_series.series_utility import SeriesSpec, build_series, eval_with_tail


""" Variable definitions """

GUARD_DIGITS = 10
DEFAULT_MAX_DIGITS = 1000
MAX_DIGITS_ENV = 'INVTRIG_SERIES_MAX_DIGITS'

DEFAULT_POINTS = (Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(7, 10), Fraction(-7, 10))
DEFAULT_SPECS = (
    SeriesSpec('arcsin-pow', 40, k=1),
    SeriesSpec('arcsin-pow', 40, k=3),
    SeriesSpec('arcsinh-pow', 40, k=2),
    SeriesSpec('arccos-ratio', 40, k=1),
    SeriesSpec('arccos-ratio', 40, k=2),
    SeriesSpec('arccosh-ratio', 40, k=1),
    SeriesSpec('shifted', 40, k=1),
    SeriesSpec('alpha-ratio', 40, alpha=Fraction(1, 2)),
    SeriesSpec('trig', 40, alpha=Fraction(1, 2), tag='cosh_arcsin'),
    SeriesSpec('trig', 40, alpha=Fraction(3, 2), tag='cos_arccos_1'),
)


""" Function definitions """

def max_digits() -> int:
    """oracle precision limit, INVTRIG_SERIES_MAX_DIGITS overrides the default"""
    text = os.environ.get(MAX_DIGITS_ENV)
    if not text:
        return DEFAULT_MAX_DIGITS
    try:
        value = int(text)
    except ValueError:
        raise DomainError(f'{MAX_DIGITS_ENV} must be an integer, got {text!r}') from None
    if value < 1:
        raise DomainError(f'{MAX_DIGITS_ENV} must be positive, got {value}')
    return value


def _working_scale(digits:int) -> int:
    if digits < 1:
        raise DomainError(f'digits must be positive, got {digits}')
    limit = max_digits()
    if digits > limit:
        raise PrecisionInfeasible(f'{digits} digits requested, oracle limit is {limit} '
                                  f'(set {MAX_DIGITS_ENV} to raise it)')
    return digits + GUARD_DIGITS


def guarded_digits(digits:int, guard:int = GUARD_DIGITS) -> int:
    """digits + guard for intermediate oracle calls, clamped to max_digits() but never below digits"""
    _working_scale(digits)
    return max(digits, min(digits + guard, max_digits()))


def _as_fixnum(x, scale:int) -> FixNum:
    if isinstance(x, FixNum):
        return x.round_to(scale) if x.scale != scale else x
    return FixNum.from_rational(ex.as_rational(x), scale)


def _sum_terms(first:FixNum, next_term, ratio_small) -> FixNum:
    """
    Sum a series term by term. next_term(term, n) gives term n from term n-1.
    Stops once a term is below one ulp and ratio_small(n) guarantees that all
    later ratios are at most 1/2, so the neglected tail is at most twice that term.
    """
    total = first
    term = first
    n = 0
    while True:
        n += 1
        term = next_term(term, n)
        if term.magnitude_bound() <= 1 and ratio_small(n):
            return FixNum(total.mantissa, total.scale, total.err + 2 * term.magnitude_bound())
        total = total + term


def _arctan_inverse(n:int, scale:int) -> FixNum:
    """arctan(1/n) for an integer n >= 2 with plain integer arithmetic"""
    unit = 10 ** scale
    power = unit // n
    total = 0
    k = 0
    n2 = n * n
    while power:
        term = power // (2 * k + 1)
        total += -term if k % 2 else term
        power //= n2
        k += 1
    # two floor divisions per term, tail below one ulp
    return FixNum(total, scale, 2 * k + 1)


def _pi(scale:int) -> FixNum:
    return _arctan_inverse(5, scale) * 16 - _arctan_inverse(239, scale) * 4


def pi_ref(digits:int) -> FixNum:
    """
    pi from Machin's formula 16 arctan(1/5) - 4 arctan(1/239)

    Parameters
    digits : int, decimal places, at most max_digits()

    Returns
    pi : FixNum with err <= 2
    """
    return _pi(_working_scale(digits)).round_to(digits)


def _sqrt(x, scale:int) -> FixNum:
    if isinstance(x, FixNum):
        return isqrt_fixnum(_as_fixnum(x, scale))
    q = ex.as_rational(x)
    if q < 0:
        raise DomainError(f'square root of negative number {q}')
    unit = 10 ** scale
    # floor(sqrt(floor(q unit^2))) is within one ulp of sqrt(q)
    return FixNum(math.isqrt(q.numerator * unit * unit // q.denominator), scale, 1)


def sqrt_fp(x, digits:int) -> FixNum:
    """square root of a non negative Rational or FixNum"""
    return _sqrt(x, _working_scale(digits)).round_to(digits)


def _arcsin_small(x:FixNum) -> FixNum:
    """Maclaurin series of arcsin, |x| <= 1/2 (ratios <= x^2 < 1/2)"""
    x2 = x * x

    def next_term(term, n):
        return term * x2 * Fraction((2 * n - 1) ** 2, 2 * n * (2 * n + 1))

    return _sum_terms(x, next_term, lambda n: True)


def _arcsin(x, scale:int) -> FixNum:
    if isinstance(x, FixNum):
        x = _as_fixnum(x, scale)
        if x.lower() < -1 or x.upper() > 1:
            raise DomainError(f'arcsin needs |x| <= 1, got {x}')
        bound = x.magnitude_bound()
        if 2 * bound <= x.unit:
            return _arcsin_small(x)
        # arcsin x = pi/2 - 2 arcsin(sqrt((1-x)/2)), reflected for negative x
        sign = -1 if x.mantissa < 0 else 1
        y = isqrt_fixnum((1 - abs(x)) / 2)
        return (_pi(scale) / 2 - _arcsin_small(y) * 2) * sign
    q = ex.as_rational(x)
    if abs(q) > 1:
        raise DomainError(f'arcsin needs |x| <= 1, got {q}')
    if abs(q) == 1:
        return _pi(scale) / 2 * (1 if q > 0 else -1)
    if abs(q) <= Fraction(1, 2):
        return _arcsin_small(FixNum.from_rational(q, scale))
    sign = -1 if q < 0 else 1
    y = _sqrt((1 - abs(q)) / 2, scale)
    return (_pi(scale) / 2 - _arcsin_small(y) * 2) * sign


def arcsin_fp(x, digits:int) -> FixNum:
    """arcsin of a Rational or FixNum in [-1, 1]"""
    return _arcsin(x, _working_scale(digits)).round_to(digits)


def _arccos(x, scale:int) -> FixNum:
    if not isinstance(x, FixNum):
        q = ex.as_rational(x)
        if q == 1:
            return FixNum(0, scale, 0)
        if q == -1:
            return _pi(scale)
    return _pi(scale) / 2 - _arcsin(x, scale)


def arccos_fp(x, digits:int) -> FixNum:
    """arccos = pi/2 - arcsin, exact 0 at x = 1"""
    return _arccos(x, _working_scale(digits)).round_to(digits)


def _atanh_small(z:FixNum) -> FixNum:
    """atanh series, |z| <= 1/3 + one ulp"""
    z2 = z * z
    state = {'power': z}

    def next_term(term, n):
        state['power'] = state['power'] * z2
        return state['power'] / (2 * n + 1)

    return _sum_terms(z, next_term, lambda n: True)


def _ln(x, scale:int) -> FixNum:
    """ln x = e ln 2 + 2 atanh((m-1)/(m+1)) with x = m 2^e, 1 <= m < 2"""
    ln2 = _atanh_small(FixNum.from_rational(Fraction(1, 3), scale)) * 2
    if isinstance(x, FixNum):
        x = _as_fixnum(x, scale)
        if x.lower() <= 0:
            raise DomainError(f'ln needs x > 0, got {x}')
        q = x.to_rational()
    else:
        q = ex.as_rational(x)
        if q <= 0:
            raise DomainError(f'ln needs x > 0, got {q}')
        if q == 1:
            return FixNum(0, scale, 0)
    e = q.numerator.bit_length() - q.denominator.bit_length()
    if Fraction(2) ** e > q:
        e -= 1
    if isinstance(x, FixNum):
        m = x / Fraction(2) ** e
    else:
        m = FixNum.from_rational(q / Fraction(2) ** e, scale)
    z = (m - 1) / (m + 1)
    return ln2 * e + _atanh_small(z) * 2


def ln_fp(x, digits:int) -> FixNum:
    """natural logarithm of a positive Rational or FixNum"""
    return _ln(x, _working_scale(digits)).round_to(digits)


def _exp(y, scale:int) -> FixNum:
    """exp by halving the argument until |r| <= 1/2, Taylor series, then squaring"""
    y = _as_fixnum(y, scale)
    halvings = 0
    while 2 * y.magnitude_bound() > y.unit:
        y = y / 2
        halvings += 1
    one = FixNum(10 ** scale, scale, 0)

    def next_term(term, n):
        return term * y / n

    value = _sum_terms(one, next_term, lambda n: True)
    for _ in range(halvings):
        value = value * value
    return value


def exp_fp(y, digits:int) -> FixNum:
    return _exp(y, _working_scale(digits)).round_to(digits)


def _cosh_sinh(y, scale:int) -> tuple:
    a = _exp(y, scale)
    b = 1 / a
    return (a + b) / 2, (a - b) / 2


def _cos_sin(y, scale:int) -> tuple:
    """Taylor series of cos and sin, ratios bounded by y^2/((2n)(2n+1))"""
    y = _as_fixnum(y, scale)
    y2 = y * y
    bound = Fraction(y2.magnitude_bound(), y2.unit)
    one = FixNum(10 ** scale, scale, 0)

    def ratio_small(n):
        return bound <= Fraction((2 * n - 1) * (2 * n), 2)

    cos = _sum_terms(one, lambda term, n: -(term * y2) / ((2 * n - 1) * (2 * n)), ratio_small)
    sin = _sum_terms(y, lambda term, n: -(term * y2) / ((2 * n) * (2 * n + 1)), ratio_small)
    return cos, sin


def trig_fp(name:str, y, digits:int) -> FixNum:
    """cosh, sinh, cos or sin of a Rational or FixNum"""
    scale = _working_scale(digits)
    if name in ('cosh', 'sinh'):
        value = _cosh_sinh(y, scale)[0 if name == 'cosh' else 1]
    elif name in ('cos', 'sin'):
        value = _cos_sin(y, scale)[0 if name == 'cos' else 1]
    else:
        raise DomainError(f'unknown function {name!r}')
    return value.round_to(digits)


def half_pi_prefactor(prefactor:str, alpha, digits:int) -> FixNum:
    """value of a prefactor name such as '-sinh' at alpha pi/2"""
    scale = _working_scale(digits)
    sign = -1 if prefactor.startswith('-') else 1
    name = prefactor.lstrip('-')
    y = _pi(scale) * ex.as_rational(alpha) / 2
    if name in ('cosh', 'sinh'):
        value = _cosh_sinh(y, scale)[0 if name == 'cosh' else 1]
    elif name in ('cos', 'sin'):
        value = _cos_sin(y, scale)[0 if name == 'cos' else 1]
    else:
        raise DomainError(f'unknown prefactor {prefactor!r}')
    return (value * sign).round_to(digits)


def _arccosh(x, scale:int) -> FixNum:
    q = ex.as_rational(x)
    if q < 1:
        raise DomainError(f'arccosh needs x >= 1, got {q}')
    if q == 1:
        return FixNum(0, scale, 0)
    return _ln(_sqrt(q * q - 1, scale) + q, scale)


def arccosh_fp(x, digits:int) -> FixNum:
    """arccosh x = ln(x + sqrt(x^2 - 1)), exact 0 at x = 1"""
    return _arccosh(x, _working_scale(digits)).round_to(digits)


def _arcsinh(x, scale:int) -> FixNum:
    q = ex.as_rational(x)
    if q == 0:
        return FixNum(0, scale, 0)
    if q < 0:
        return -_arcsinh(-q, scale)
    return _ln(_sqrt(q * q + 1, scale) + q, scale)


def arcsinh_fp(x, digits:int) -> FixNum:
    """arcsinh x = ln(x + sqrt(x^2 + 1)), odd"""
    return _arcsinh(x, _working_scale(digits)).round_to(digits)


def _pow(y, alpha, scale:int) -> FixNum:
    alpha = ex.as_rational(alpha)
    if alpha == 0:
        return FixNum(10 ** scale, scale, 0)
    if alpha.denominator == 1 and alpha > 0:
        base = _as_fixnum(y, scale)
        result = base
        for _ in range(alpha.numerator - 1):
            result = result * base
        return result
    return _exp(_ln(y, scale) * alpha, scale)


def pow_fp(y, alpha, digits:int) -> FixNum:
    """y^alpha for y > 0 and a Rational alpha, exp(alpha ln y) unless alpha is a positive integer"""
    return _pow(y, alpha, _working_scale(digits)).round_to(digits)


def check_oracle_consistency(digits:int = 30) -> CheckReport:
    """
    Monotone refinement, reflections and round trips of the oracle functions.
    A case passes when the two certified intervals overlap.
    """
    report = CheckReport('oracle_consistency')
    fine = guarded_digits(digits, digits)

    def overlap(case, a:FixNum, b:FixNum):
        report.record(case, a.overlaps(b), True, lhs_value=a, rhs_value=b)

    overlap('pi_refinement', pi_ref(fine).round_to(digits), pi_ref(digits))
    points = [Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(7, 10), Fraction(-7, 10),
              Fraction(9, 10), Fraction(1, 3)]
    for x in points:
        overlap(('arcsin_refinement', ex.rat_to_str(x)), arcsin_fp(x, fine).round_to(digits), arcsin_fp(x, digits))
        overlap(('arcsin_odd', ex.rat_to_str(x)), arcsin_fp(x, digits) + arcsin_fp(-x, digits),
                FixNum(0, digits, 0))
        overlap(('arccos_reflection', ex.rat_to_str(x)), arccos_fp(x, digits) + arccos_fp(-x, digits),
                pi_ref(digits))
    overlap('arccos_half', arccos_fp(Fraction(1, 2), digits) * 3, pi_ref(digits))
    overlap('arcsin_sqrt2_half', arcsin_fp(sqrt_fp(Fraction(1, 2), guarded_digits(digits, 5)), digits) * 4,
            pi_ref(digits))
    for x in (Fraction(5, 4), Fraction(3, 2), Fraction(2)):
        scale = _working_scale(digits)
        y = _arccosh(x, scale)
        overlap(('cosh_arccosh', ex.rat_to_str(x)), _cosh_sinh(y, scale)[0].round_to(digits),
                FixNum.from_rational(x, digits))
    for x in (Fraction(1, 2), Fraction(3), Fraction(7, 10)):
        overlap(('exp_ln', ex.rat_to_str(x)), exp_fp(ln_fp(x, guarded_digits(digits, 5)), digits),
                FixNum.from_rational(x, digits))
    return report


""" Series comparison """

@dataclass
class Comparison:
    """
    Truncated series against the direct oracle value at one point

    Attributes
    spec : SeriesSpec
    x : Fraction
    series_value : FixNum, rounded exact partial sum
    direct_value : FixNum, oracle composition
    residual : Fraction, |series_value - direct_value|
    tail : Fraction or None, tail estimate of the series
    passed : bool, residual <= tail + combined rounding error
    notes : list of str
    """
    spec: SeriesSpec
    x: Fraction
    series_value: FixNum
    direct_value: FixNum
    residual: Fraction
    tail: Fraction
    passed: bool
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {'expr': self.spec.label,
                'terms': self.spec.M,
                'x': ex.rat_to_str(self.x),
                'series_value': self.series_value.to_string(),
                'direct_value': self.direct_value.to_string(),
                'residual': FixNum.from_rational(self.residual, self.series_value.scale).to_string(),
                'tail': None if self.tail is None else FixNum.from_rational(self.tail, self.series_value.scale).to_string(),
                'passed': self.passed,
                'notes': list(self.notes)}


def _direct(spec:SeriesSpec, x:Fraction, scale:int) -> FixNum:
    one = FixNum(10 ** scale, scale, 0)
    family = spec.family
    if family in ('arcsin-pow', 'arcsinh-pow'):
        if x == 0:
            return one
        inner = _arcsin(x, scale) if family == 'arcsin-pow' else _arcsinh(x, scale)
        return _pow(inner * (1 / x), spec.k, scale)
    if family == 'shifted-hyp':
        raise DomainError('the pi-plus-i-arccosh form is complex valued on the real line, '
                          'compare the shifted family instead')
    if family == 'shifted':
        if x == -1:
            return one
        if not -1 < x <= 1:
            raise DomainError(f'direct evaluation of the shifted form needs -1 <= x <= 1, got {ex.rat_to_str(x)}')
        base = _pi(scale) - _arccos(x, scale)
        return _pow(base * base * Fraction(1, 2 * (1 + x)), spec.k, scale)
    if family == 'trig':
        outer, inner_name = TRIG_TAGS[spec.tag][:2]
        if not -1 <= x <= 1:
            raise DomainError(f'{spec.tag} needs -1 <= x <= 1, got {ex.rat_to_str(x)}')
        inner = _arcsin(x, scale) if inner_name == 'arcsin' else _arccos(x, scale)
        y = inner * spec.alpha
        pair = _cosh_sinh(y, scale) if outer in ('cosh', 'sinh') else _cos_sin(y, scale)
        return pair[0 if outer in ('cosh', 'cos') else 1]
    # ratio families around 1
    if family == 'arccosh-ratio' and not -1 < x < 1:
        raise DomainError(f'arccosh ratio is compared inside (-1, 1) only, got {ex.rat_to_str(x)}')
    if x == 1:
        return one
    if not -1 < x < 1:
        raise DomainError(f'direct evaluation of {family} needs -1 < x <= 1, got {ex.rat_to_str(x)}')
    base = _arccos(x, scale)
    ratio = base * base * Fraction(1, 2 * (1 - x))
    return _pow(ratio, spec.alpha if family == 'alpha-ratio' else spec.k, scale)


def direct_value(spec:SeriesSpec, x, digits:int) -> FixNum:
    """
    Value of the function a SeriesSpec expands, composed from the oracle functions

    (arccosh x)^2/(2(x-1)) equals (arccos x)^2/(2(1-x)) on (-1, 1) and is evaluated that way.
    """
    return _direct(spec, ex.as_rational(x), _working_scale(digits)).round_to(digits)


def compare(spec:SeriesSpec, x, digits:int, series=None) -> Comparison:
    """
    Evaluate the truncated series of `spec` at x and compare it with the oracle

    Parameters
    spec : SeriesSpec
    x : Rational inside the convergence region and the real domain of the function
    digits : int, decimal places of both values
    series : CoeffSeries, optional prebuilt build_series(spec)

    Returns
    comparison : Comparison
    """
    x = ex.as_rational(x)
    series = series if series is not None else build_series(spec)
    approx, tail = eval_with_tail(series, x, digits)
    direct = direct_value(spec, x, digits)
    residual = abs(approx.to_rational() - direct.to_rational())
    notes = []
    if tail is None:
        notes.append('tail estimate unavailable (term ratio >= 1), compared with tail 0')
    bound = (tail or 0) + Fraction(approx.err + direct.err, 10 ** digits)
    return Comparison(spec, x, approx, direct, residual, tail, residual <= bound, notes)


def check_numeric_residuals(points=DEFAULT_POINTS, digits:int = 30, specs=DEFAULT_SPECS) -> CheckReport:
    """every spec at every point: residual within tail estimate plus rounding error"""
    report = CheckReport('numeric_residuals')
    for spec in specs:
        series = build_series(spec)
        for x in points:
            result = compare(spec, x, digits, series)
            report.record((spec.label, ex.rat_to_str(x)), result.passed, True,
                          residual=result.to_dict()['residual'], tail=result.to_dict()['tail'])
            report.notes.extend(f'{spec.label} at {ex.rat_to_str(x)}: {note}' for note in result.notes)
    return report
