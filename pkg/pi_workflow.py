#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: pi_workflow.py
Date: 2026-10-18
Version: 1.0
Description:
    This script showcases the pi series representations: partial sums against
    the oracle constants, the convergence table of the classical series and
    the empirical rate L(k) of the (pi^2/8)^k series.

License:
"""

""" Imports """
# Import python libraries
from fractions import Fraction

# Import local modules
from invtrig_series import pi_utility


""" Constant Variable definitions """

terms = 60
digits = 30
L_terms = 200           # M of the root estimate
k_values = [1, 2, 3]


""" Main """

## ---------------------------------------- PARTIAL SUMS -----------------------------------------------
tags = [pi_utility.PiSeriesTag('sq8'),
        pi_utility.PiSeriesTag('pow8', k=2),
        pi_utility.PiSeriesTag('sqrt2pow', k=1),
        pi_utility.PiSeriesTag('alpha9', alpha=Fraction(1, 2))]

for tag in tags:
    print(f'{tag.label:<22} target {tag.target_text:<18} residual',
          pi_utility.residual(tag, terms, digits).to_string(mark_uncertain=True))


## ---------------------------------------- CLASSICAL SERIES -------------------------------------------
df = pi_utility.convergence_table(range(10, 101, 10), digits)
print(df.to_string())


## ---------------------------------------- L(k) ESTIMATES ---------------------------------------------
# estimates only, the limit is not known for k >= 2
for k in k_values:
    estimate = pi_utility.empirical_L(k, L_terms, digits)
    print(f'L({k}) root estimate', estimate['root'], 'last ratio', float(estimate['ratio']))
