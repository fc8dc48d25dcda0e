#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: verify_workflow.py
Date: 2026-10-18
Version: 1.0
Description:
    This script showcases the typical verification workflow: the exact identity
    suites, one series compared with the oracle and the summary written to csv.

License:
"""

""" Imports """
# Import python libraries
from fractions import Fraction

# Import local modules
from invtrig_series import oracle_utility
from invtrig_series import series_utility
from invtrig_series import verify_utility


""" Constant Variable definitions """

max_n = 12              # sweep size of the identity checks
digits = 30             # decimal places of the numeric checks
jobs = 2                # joblib workers
seed = 0
summary_csv = 'verify_summary.csv'
save_summary = False


""" Main """

## ---------------------------------------- IDENTITY SUITES --------------------------------------------
reports = verify_utility.run_suite('all', max_n, seed, digits, jobs)
summary = verify_utility.summary_table(reports)
print(summary.to_string(index=False))

for violation in verify_utility.counterexamples(reports):
    print('counterexample:', violation)

if save_summary:
    summary.to_csv(summary_csv, index=False)


## ---------------------------------------- ONE SERIES AGAINST THE ORACLE ------------------------------
spec = series_utility.SeriesSpec('arccos-ratio', 40, k=1)
result = oracle_utility.compare(spec, Fraction(1, 2), digits)
print('series:  ', result.series_value)
print('direct:  ', result.direct_value)
print('residual:', result.to_dict()['residual'], 'tail:', result.to_dict()['tail'])
print('passed:  ', result.passed)
