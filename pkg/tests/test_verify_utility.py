#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: test_verify_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Verification suites: task lists, deterministic merge across workers, summaries.

License:
"""

""" Imports """
# Import python libraries

# Import external packages
import pytest

# Import local modules
from invtrig_series import verify_utility as vu
from invtrig_series.module.errors import DomainError
from invtrig_series.module.report import CheckReport


""" Tests """

def test_suite_tasks():
    names = [name for name, _, _ in vu.suite_tasks('all', 6)]
    assert len(names) == len(set(names))
    assert {'stirling_oracle', 'q_sum_zero', 'bell_three_way', 'prod_lemma', 'series_odd_powers',
            'pi_series', 'oracle_consistency', 'numeric_residuals'} <= set(names)
    assert [name for name, _, _ in vu.suite_tasks('q', 6)] == ['q_closed_forms', 'q_decomposition', 'q_sum_zero']
    with pytest.raises(DomainError):
        vu.suite_tasks('everything')
    with pytest.raises(DomainError):
        vu.suite_tasks('q', 0)


def test_q_suite_passes():
    reports = vu.run_suite('q', 10, quiet=True)
    assert [r.name for r in reports] == sorted(r.name for r in reports)
    assert all(r.passed for r in reports)
    assert vu.counterexamples(reports) == []


def test_jobs_do_not_change_results():
    single = vu.run_suite('stirling', 8, quiet=True)
    parallel = vu.run_suite('stirling', 8, jobs=2, quiet=True)
    assert [r.to_dict() for r in single] == [r.to_dict() for r in parallel]


def test_progress_lines(capsys):
    vu.run_suite('products', 4)
    err = capsys.readouterr().err
    assert 'prod_equivalence' in err and 'cases, ok' in err


def test_summary_and_counterexamples():
    good = CheckReport('a_check')
    good.record(1, 1, 1)
    bad = CheckReport('b_check')
    bad.record((2, 'x'), 1, 2)
    bad.record(1, 3, 4)
    df = vu.summary_table([good, bad])
    assert list(df.columns) == ['check', 'checked', 'violations', 'passed']
    assert df['violations'].tolist() == [0, 2]
    assert df['passed'].tolist() == [True, False]
    cases = [v['case'] for v in vu.counterexamples([bad, good])]
    assert cases == ['0001', '0002,x']
