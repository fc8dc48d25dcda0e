#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: fixnum.py
Date: 2026-10-18
Version: 1.0
Description:
    Base 10 fixed point number with an explicit error bound.
    value = mantissa * 10^-scale, true value within err units of 10^-scale.
    Every operation widens err so that the bound stays guaranteed.

License:
"""

""" Imports """
# Import python libraries
import math
from dataclasses import dataclass
from fractions import Fraction

# Import local modules
from invtrig_series.module.errors import DomainError


""" Function definitions """

def _ceil_div(a:int, b:int) -> int:
    return -((-a) // b)


def _div_round(num:int, den:int) -> tuple:
    """nearest integer to num/den, den > 0, and whether the division was exact"""
    if den < 0:
        num, den = -num, -den
    m, rest = divmod(num, den)
    if 2 * rest >= den:
        m += 1
    return m, rest == 0


""" Class definitions """

@dataclass(frozen=True)
class FixNum:
    """
    Attributes
    mantissa : int
    scale : int, number of decimal places
    err : int, error bound in units of 10^-scale (ulp)
    """
    mantissa: int
    scale: int
    err: int = 0

    def __post_init__(self):
        if self.scale < 0:
            raise DomainError(f'scale must be natural, got {self.scale}')
        if self.err < 0:
            raise DomainError(f'error bound must be natural, got {self.err}')

    @classmethod
    def from_rational(cls, q, scale:int) -> 'FixNum':
        """nearest fixed point value, err 0 when q is representable"""
        q = Fraction(q)
        m, exact = _div_round(q.numerator * 10 ** scale, q.denominator)
        return cls(m, scale, 0 if exact else 1)

    @property
    def unit(self) -> int:
        return 10 ** self.scale

    def to_rational(self) -> Fraction:
        return Fraction(self.mantissa, self.unit)

    def lower(self) -> Fraction:
        return Fraction(self.mantissa - self.err, self.unit)

    def upper(self) -> Fraction:
        return Fraction(self.mantissa + self.err, self.unit)

    def magnitude_bound(self) -> int:
        """upper bound of |value| in ulp"""
        return abs(self.mantissa) + self.err

    def contains(self, q) -> bool:
        """True if the exact rational q lies within the error bound"""
        return self.lower() <= Fraction(q) <= self.upper()

    def overlaps(self, other:'FixNum') -> bool:
        """error intervals intersect"""
        return self.lower() <= other.upper() and other.lower() <= self.upper()

    def _coerce(self, other) -> 'FixNum':
        if isinstance(other, FixNum):
            if other.scale != self.scale:
                raise DomainError(f'scale mismatch {self.scale} != {other.scale}')
            return other
        return FixNum.from_rational(other, self.scale)

    def __add__(self, other) -> 'FixNum':
        other = self._coerce(other)
        return FixNum(self.mantissa + other.mantissa, self.scale, self.err + other.err)

    __radd__ = __add__

    def __neg__(self) -> 'FixNum':
        return FixNum(-self.mantissa, self.scale, self.err)

    def __sub__(self, other) -> 'FixNum':
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> 'FixNum':
        return self._coerce(other) - self

    def __abs__(self) -> 'FixNum':
        return FixNum(abs(self.mantissa), self.scale, self.err)

    def __mul__(self, other) -> 'FixNum':
        if isinstance(other, int) and not isinstance(other, bool):
            return FixNum(self.mantissa * other, self.scale, self.err * abs(other))
        if isinstance(other, Fraction):
            m, exact = _div_round(self.mantissa * other.numerator, other.denominator)
            err = _ceil_div(self.err * abs(other.numerator), other.denominator) + (0 if exact else 1)
            return FixNum(m, self.scale, err)
        other = self._coerce(other)
        unit = self.unit
        m, exact = _div_round(self.mantissa * other.mantissa, unit)
        spread = abs(self.mantissa) * other.err + abs(other.mantissa) * self.err + self.err * other.err
        return FixNum(m, self.scale, _ceil_div(spread, unit) + (0 if exact else 1))

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'FixNum':
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError('FixNum division by zero')
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        b = abs(other.mantissa)
        if b <= other.err:
            raise ZeroDivisionError('FixNum divisor interval contains zero')
        unit = self.unit
        m, exact = _div_round(self.mantissa * unit, other.mantissa)
        spread = unit * (self.err * b + abs(self.mantissa) * other.err)
        return FixNum(m, self.scale, _ceil_div(spread, b * (b - other.err)) + (0 if exact else 1))

    def __rtruediv__(self, other) -> 'FixNum':
        return self._coerce(other) / self

    def round_to(self, digits:int) -> 'FixNum':
        """
        Change the scale to `digits` places. Going down truncates toward -inf
        and adds one ulp of the new scale.
        """
        if digits >= self.scale:
            factor = 10 ** (digits - self.scale)
            return FixNum(self.mantissa * factor, digits, self.err * factor)
        factor = 10 ** (self.scale - digits)
        m, rest = divmod(self.mantissa, factor)
        err = _ceil_div(self.err, factor) + (1 if rest or self.err else 0)
        return FixNum(m, digits, err)

    @property
    def certified_digits(self) -> int:
        """decimal places whose uncertainty stays below two units of the last place"""
        if self.err == 0:
            return self.scale
        return max(0, self.scale - len(str(self.err)))

    def to_string(self, mark_uncertain:bool = False) -> str:
        """
        Certified digits only, truncated. With mark_uncertain the next digit
        follows in parentheses, e.g. 3.141592653(5).
        """
        sign = '-' if self.mantissa < 0 else ''
        a = abs(self.mantissa)
        d = self.certified_digits
        shown = a // 10 ** (self.scale - d)
        int_part, frac = divmod(shown, 10 ** d)
        text = f'{sign}{int_part}.{frac:0{d}d}' if d > 0 else f'{sign}{int_part}'
        if mark_uncertain and self.scale > d:
            text += f'({(a // 10 ** (self.scale - d - 1)) % 10})'
        return text

    def __str__(self) -> str:
        return self.to_string()

    def __float__(self) -> float:
        return self.mantissa / self.unit

    def to_dict(self) -> dict:
        return {'value': self.to_string(), 'mantissa': str(self.mantissa),
                'scale': self.scale, 'err_ulp': str(self.err)}


def isqrt_fixnum(x:FixNum) -> FixNum:
    """square root at the same scale with a conservative error bound"""
    if x.mantissa + x.err < 0:
        raise DomainError('square root of a negative number')
    a = max(x.mantissa, 0)
    unit = x.unit
    s = math.isqrt(a * unit)
    if a <= x.err:
        # interval touches zero: sqrt is only Hoelder continuous there
        return FixNum(s, x.scale, math.isqrt(2 * x.err * unit) + 2)
    return FixNum(s, x.scale, _ceil_div(x.err * unit, s) + 2 if x.err else 1)
