#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: exact_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Exact arithmetic primitives consumed by every other module:
    factorials, double factorials, rising and falling factorials,
    binomial coefficients with rational upper index and rational powers.
    Rationals are fractions.Fraction, always kept in lowest terms.

License:
"""


""" Imports """
# Import python libraries
import math
import re
from fractions import Fraction

# Import external packages

# Import local modules
from invtrig_series.module.errors import DomainError


""" Variable definitions """

Rational = Fraction

_RATIONAL_PATTERN = re.compile(r'^\s*[+-]?(\d+\s*/\s*\d+|\d+(\.\d*)?|\.\d+)\s*$')


""" Function definitions """

def as_rational(value) -> Fraction:
    """
    Convert int, Fraction or canonical text into a Rational. Floats are refused,
    they would silently bring rounding into the exact path.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError('boolean is not a rational number')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise DomainError(f'cannot use {type(value).__name__} as an exact rational')


def parse_rational(text:str) -> Fraction:
    """
    Parse the canonical text form "p/q", "p" or a terminating decimal "0.7"

    Parameters
    text : str, text to parse

    Returns
    q : Fraction
    """
    if not _RATIONAL_PATTERN.match(text):
        raise DomainError(f'not a rational number: {text!r}')
    try:
        return Fraction(text.replace(' ', ''))
    except ZeroDivisionError:
        raise DomainError(f'zero denominator in {text!r}') from None


def rat_to_str(q) -> str:
    """
    Canonical text form: "p/q" in lowest terms, "p" when q = 1, sign on the numerator only
    """
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f'{q.numerator}/{q.denominator}'


def factorial(n:int) -> int:
    """n! for n >= 0"""
    if n < 0:
        raise DomainError(f'factorial of negative integer {n}')
    return math.factorial(n)


def double_factorial(n:int) -> int:
    """
    n!! = n(n-2)(n-4)... with the conventions (-1)!! = 0!! = 1

    Parameters
    n : int, n >= -1

    Returns
    n!! : int
    """
    if n < -1:
        raise DomainError(f'double factorial undefined for n = {n} < -1')
    result = 1
    for i in range(n, 1, -2):
        result *= i
    return result


def rising(beta, n:int) -> Fraction:
    """
    Rising factorial (beta)_n = beta(beta+1)...(beta+n-1), (beta)_0 = 1
    """
    if n < 0:
        raise DomainError(f'rising factorial needs n >= 0, got {n}')
    beta = as_rational(beta)
    result = Fraction(1)
    for i in range(n):
        result *= beta + i
    return result


def falling(beta, n:int) -> Fraction:
    """
    Falling factorial <beta>_n = beta(beta-1)...(beta-n+1), <beta>_0 = 1
    """
    if n < 0:
        raise DomainError(f'falling factorial needs n >= 0, got {n}')
    beta = as_rational(beta)
    result = Fraction(1)
    for i in range(n):
        result *= beta - i
    return result


def binom(z, n:int) -> Fraction:
    """
    Binomial coefficient <z>_n / n! with rational upper index and natural lower index.
    For natural z it is the ordinary binomial coefficient, 0 when z < n.
    The remaining branches of the extended (gamma based) binomial coefficient are not needed.

    Parameters
    z : Rational, upper index
    n : int, lower index n >= 0

    Returns
    binom : Fraction
    """
    if n < 0:
        raise DomainError(f'binomial lower index must be natural, got {n}')
    z = as_rational(z)
    if z.denominator == 1 and z >= 0:
        return Fraction(math.comb(z.numerator, n))
    return falling(z, n) / math.factorial(n)


def binom_int(n:int, k:int) -> int:
    """Ordinary binomial coefficient of integers, 0 outside 0 <= k <= n"""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def central_binom(n:int) -> int:
    """binom(2n, n)"""
    return math.comb(2 * n, n)


def pow_rat(q, n:int) -> Fraction:
    """
    q^n with 0^0 = 1. Negative exponents are allowed for q != 0.
    """
    q = as_rational(q)
    if n < 0 and q == 0:
        raise DomainError('zero raised to a negative power')
    if n == 0:
        return Fraction(1)
    return q ** n
