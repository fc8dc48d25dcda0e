#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: int_polynomial.py
Date: 2026-10-18
Version: 1.0
Description:
    Dense univariate polynomial with arbitrary precision integer coefficients,
    used for the products of shifted squares written as polynomials in beta = alpha^2.

License:
"""

""" Imports """
# Import python libraries
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest

# Import local modules
from invtrig_series.module.errors import InconsistencyError


""" Class definitions """

@dataclass(frozen=True)
class IntPolynomial:
    """
    sum_j coeffs[j] * beta^j, trailing zeros trimmed, the zero polynomial has no coefficients
    """
    coeffs: tuple = ()

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def from_rationals(cls, values) -> 'IntPolynomial':
        """build from exact rationals that must all be integers"""
        coeffs = []
        for j, v in enumerate(values):
            v = Fraction(v)
            if v.denominator != 1:
                raise InconsistencyError(f'coefficient of beta^{j} is not an integer: {v}')
            coeffs.append(v.numerator)
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial"""
        return len(self.coeffs) - 1

    def __getitem__(self, j:int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __add__(self, other:'IntPolynomial') -> 'IntPolynomial':
        return IntPolynomial(tuple(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    def __mul__(self, other:'IntPolynomial') -> 'IntPolynomial':
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def evaluate(self, beta) -> Fraction:
        """exact value at a rational beta (Horner)"""
        beta = Fraction(beta)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * beta + c
        return acc

    def __str__(self) -> str:
        # low to high, decimal strings
        return ' '.join(str(c) for c in self.coeffs) if self.coeffs else '0'

    def to_list(self) -> list:
        return [str(c) for c in self.coeffs]
