#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: verify_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Verification suites. Each suite is a list of identity checks returning CheckReports;
    the checks run through joblib, reports are merged and ordered by name and case key,
    so the result does not depend on the number of jobs.

License:
"""


""" Imports """
# Import python libraries
import sys
from fractions import Fraction

# Import external packages
import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

# Import local modules
from invtrig_series import bell_utility, oracle_utility, pi_utility, prodexpand_utility
from invtrig_series import qfunc_utility, series_utility, stirling_utility
from invtrig_series.module.errors import DomainError
from invtrig_series.module.report import CheckReport


""" Variable definitions """

SUITES = ('stirling', 'q', 'bell', 'products', 'series', 'pi', 'oracle', 'all')
DEFAULT_MAX_N = 12
BELL_INSTANCES = 200
BINOM_POINTS = (Fraction(-3, 2), Fraction(0), Fraction(1, 3), Fraction(2), Fraction(7))


""" Function definitions """

def suite_tasks(suite:str, max_n:int = DEFAULT_MAX_N, seed:int = 0, digits:int = 30) -> list:
    """
    Checks of one suite as (name, function, kwargs) triples

    Parameters
    suite : str, one of SUITES
    max_n : int, size of the sweeps; slower checks are capped
    seed : int, seed of the randomized Bell instances
    digits : int, precision of the numeric checks
    """
    if suite not in SUITES:
        raise DomainError(f'unknown suite {suite!r}, use one of {SUITES}')
    if max_n < 1:
        raise DomainError(f'max_n must be positive, got {max_n}')
    if suite == 'all':
        return [task for name in SUITES[:-1] for task in suite_tasks(name, max_n, seed, digits)]
    if suite == 'stirling':
        return [('stirling_oracle', stirling_utility.check_triangle, {'n_max': max_n}),
                ('stirling_binom', stirling_utility.check_binom_sweep,
                 {'n_max': max_n, 'points': list(BINOM_POINTS)})]
    if suite == 'q':
        return [('q_closed_forms', qfunc_utility.check_q_closed_forms, {'k_max': max_n}),
                ('q_decomposition', qfunc_utility.check_q_decomposition,
                 {'j_max': min(max_n, 8), 'm_max': min(max_n, 8)}),
                ('q_sum_zero', qfunc_utility.check_q_sum_zero, {'k_max': min(max_n, 12)})]
    if suite == 'bell':
        return [('bell_three_way', bell_utility.check_three_way,
                 {'instances': BELL_INSTANCES, 'seed': seed, 'n_max': min(max_n, 18)}),
                ('bell_special', bell_utility.check_scaling_sweep, {'n_max': min(max_n, 10), 'seed': seed}),
                ('bell_arccos', bell_utility.check_bell_arccos, {'m_max': min(max_n, 20)}),
                ('bell_envelope', bell_utility.check_envelope_identity, {'k_max': max_n}),
                ('bell_ward', bell_utility.check_ward_identity, {'n_max': max_n})]
    if suite == 'products':
        return [('prod_equivalence', prodexpand_utility.check_product_equivalence, {'k_max': max_n}),
                ('prod_lemma', prodexpand_utility.check_lemma_identities, {'k_max': max_n})]
    if suite == 'series':
        return [('series_product', series_utility.check_product_consistency, {'k_max': min(max_n, 8), 'M': 20}),
                ('series_recovery', series_utility.check_recovery, {'m_max': max_n}),
                ('series_alpha_natural', series_utility.check_alpha_natural,
                 {'k_max': min(max_n, 8), 'n_max': min(max_n, 15)}),
                ('series_derivatives', series_utility.check_derivatives,
                 {'k_max': min(max_n, 6), 'm_max': min(max_n, 12)}),
                ('series_odd_powers', series_utility.check_odd_powers, {'k_max': min(max_n, 3)}),
                ('numeric_residuals', oracle_utility.check_numeric_residuals, {'digits': digits})]
    if suite == 'pi':
        return [('pi_series', pi_utility.check_pi_series, {'digits': digits})]
    return [('oracle_consistency', oracle_utility.check_oracle_consistency, {'digits': digits})]


def _run_task(name:str, func, kwargs:dict) -> CheckReport:
    report = func(**kwargs)
    report.name = name
    return report


def run_suite(suite:str, max_n:int = DEFAULT_MAX_N, seed:int = 0, digits:int = 30,
              jobs:int = 1, quiet:bool = False) -> list:
    """
    Run every check of a suite

    Parameters
    jobs : int, joblib workers, each process keeps its own Stirling table
    quiet : bool, no progress bar

    Returns
    reports : list of CheckReport sorted by name
    """
    tasks = suite_tasks(suite, max_n, seed, digits)
    results = Parallel(n_jobs=jobs, return_as='generator')(
        delayed(_run_task)(name, func, kwargs) for name, func, kwargs in tasks)
    reports = []
    for report in tqdm(results, total=len(tasks), desc=f'verify {suite}', disable=quiet):
        reports.append(report)
        if not quiet:
            status = 'ok' if report.passed else f'{len(report.violations)} violations'
            tqdm.write(f'{report.name}: {report.checked} cases, {status}', file=sys.stderr)
    return sorted(reports, key=lambda r: r.name)


def summary_table(reports:list) -> pd.DataFrame:
    """one row per check: checked cases, violations, passed"""
    rows = [{'check': r.name, 'checked': r.checked, 'violations': len(r.violations), 'passed': r.passed}
            for r in reports]
    return pd.DataFrame(rows, columns=['check', 'checked', 'violations', 'passed'])


def counterexamples(reports:list) -> list:
    """all violations in canonical order"""
    found = [v for r in reports for v in r.violations]
    return sorted(found, key=lambda v: (v['check'], v['case']))
