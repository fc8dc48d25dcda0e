#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: coeff_series.py
Date: 2026-10-18
Version: 1.0
Description:
    Truncated power series with exact rational coefficients.
    Plain list helpers (series_mul, series_pow) are used by the oracles,
    CoeffSeries tags a coefficient list with its expansion point and variable.

License:
"""

""" Imports """
# Import python libraries
from dataclasses import dataclass, field, replace
from fractions import Fraction

# Import local modules
from invtrig_series.module.errors import DomainError
from invtrig_series.exact_utility import rat_to_str


""" Variable definitions """

# expansion point -> variable name used in text and JSON output
CENTERS = {'zero': 'x', 'one': 'x-1', 'minus_one': 'x+1'}
CENTER_VALUE = {'zero': Fraction(0), 'one': Fraction(1), 'minus_one': Fraction(-1)}
PARITIES = ('even', 'all')


""" Function definitions """

def series_mul(a:list, b:list, order:int) -> list:
    """
    Cauchy product of two coefficient lists truncated after degree `order`
    """
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[:order + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[:order + 1 - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def series_pow(a:list, k:int, order:int) -> list:
    """
    k-th power of a truncated series by binary powering, k >= 0
    """
    if k < 0:
        raise DomainError(f'series power needs k >= 0, got {k}')
    result = [Fraction(1)] + [Fraction(0)] * order
    base = [Fraction(c) for c in a[:order + 1]] + [Fraction(0)] * max(0, order + 1 - len(a))
    while k:
        if k & 1:
            result = series_mul(result, base, order)
        k >>= 1
        if k:
            base = series_mul(base, base, order)
    return result


""" Class definitions """

@dataclass(frozen=True)
class CoeffSeries:
    """
    Truncated Taylor expansion sum_n coeffs[n] * v^n, v = x - center

    Attributes
    center : str, 'zero', 'one' or 'minus_one'
    coeffs : tuple of Fraction, coeffs[n] is the coefficient of v^n
    parity : str, 'even' when only even powers can be non-zero, otherwise 'all'
    meta : dict, free form description (expression, k, alpha, sign factors ...)
    """
    center: str
    coeffs: tuple
    parity: str = 'all'
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.center not in CENTERS:
            raise DomainError(f'unknown expansion point {self.center!r}')
        if self.parity not in PARITIES:
            raise DomainError(f'unknown parity {self.parity!r}')
        object.__setattr__(self, 'coeffs', tuple(Fraction(c) for c in self.coeffs))
        if self.parity == 'even' and any(c for c in self.coeffs[1::2]):
            raise DomainError('even series with non-zero odd coefficient')

    @property
    def variable(self) -> str:
        return CENTERS[self.center]

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n:int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __mul__(self, other:'CoeffSeries') -> 'CoeffSeries':
        if self.center != other.center:
            raise DomainError('cannot multiply series around different points')
        order = min(self.truncation_order, other.truncation_order)
        parity = 'even' if self.parity == other.parity == 'even' else 'all'
        return CoeffSeries(self.center, series_mul(list(self.coeffs), list(other.coeffs), order), parity)

    def power(self, k:int) -> 'CoeffSeries':
        """k-th power truncated at the same order"""
        return CoeffSeries(self.center, series_pow(list(self.coeffs), k, self.truncation_order),
                           self.parity, dict(self.meta, power=k))

    def truncate(self, order:int) -> 'CoeffSeries':
        return replace(self, coeffs=self.coeffs[:order + 1])

    def scale_variable(self, c) -> 'CoeffSeries':
        """substitute v -> c*v, e.g. c = 2 turns a series in 2(x-1) into one in (x-1)"""
        c = Fraction(c)
        return replace(self, coeffs=tuple(a * c ** n for n, a in enumerate(self.coeffs)))

    def terms(self, x) -> list:
        """individual exact terms coeffs[n] * (x - center)^n"""
        v = Fraction(x) - CENTER_VALUE[self.center]
        out = []
        power = Fraction(1)
        for a in self.coeffs:
            out.append(a * power)
            power *= v
        return out

    def evaluate(self, x) -> Fraction:
        """exact partial sum at x (Horner)"""
        v = Fraction(x) - CENTER_VALUE[self.center]
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * v + a
        return acc

    def to_dict(self) -> dict:
        return {'center': self.center,
                'variable': self.variable,
                'parity': self.parity,
                'truncation_order': self.truncation_order,
                'coeffs': [rat_to_str(c) for c in self.coeffs],
                'meta': {key: (rat_to_str(v) if isinstance(v, Fraction) else v)
                         for key, v in self.meta.items()}}
