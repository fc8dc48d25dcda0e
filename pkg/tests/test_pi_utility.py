#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: test_pi_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Partial sums of the pi^2 series, residuals against the oracle and the
    convergence diagnostics.

License:
"""

""" Imports """
# Import python libraries
from fractions import Fraction

# Import external packages
import numpy as np
import pytest

# Import local modules
from invtrig_series import oracle_utility as oracle
from invtrig_series import pi_utility as pu
from invtrig_series.module.errors import DomainError, PrecisionInfeasible


""" Tests """

def test_known_partial_sums(table):
    sq8 = pu.PiSeriesTag('sq8')
    assert pu.partial_sum(sq8, 1, table) == 1
    assert pu.partial_sum(sq8, 2, table) == Fraction(7, 6)
    assert pu.term(sq8, 2, table) == Fraction(1, 6)
    assert pu.alpha9_partial(1, 1, table) == Fraction(13, 12)
    assert pu.alpha9_partial(0, 5, table) == 1


def test_power_series_is_shifted_sq8(table):
    pow8 = pu.PiSeriesTag('pow8', 1)
    for M in (1, 4, 9):
        assert pu.partial_sum(pow8, M, table) == pu.partial_sum(pu.PiSeriesTag('sq8'), M + 1, table)


@pytest.mark.parametrize('tag, M, bound', [
    (pu.PiSeriesTag('sq8'), 60, Fraction(1, 10 ** 15)),
    (pu.PiSeriesTag('pow8', 2), 60, Fraction(1, 10 ** 12)),
    (pu.PiSeriesTag('sqrt2pow', 3), 60, Fraction(1, 10 ** 12)),
    (pu.PiSeriesTag('classic-central'), 40, Fraction(1, 10 ** 20)),
    (pu.PiSeriesTag('alpha9', alpha=Fraction(3, 2)), 40, Fraction(1, 10 ** 15)),
])
def test_residuals(table, tag, M, bound):
    assert pu.residual(tag, M, 30, table).upper() < bound


def test_alpha_half_is_pi_over_three(table):
    tag = pu.PiSeriesTag('alpha9', alpha='1/2')
    assert tag.target(20).overlaps(oracle.pi_ref(20) / 3)
    assert pu.residual(tag, 40, 20, table).upper() < Fraction(1, 10 ** 10)


@pytest.mark.parametrize('tag', [
    pu.PiSeriesTag('classic-basel'),
    pu.PiSeriesTag('sqrt2pow', k=3),
    pu.PiSeriesTag('alpha9', alpha=Fraction(1, 2)),
])
def test_target_at_precision_limit(tag, monkeypatch):
    reference = tag.target(50)
    monkeypatch.setenv(oracle.MAX_DIGITS_ENV, '50')
    at_limit = tag.target(50)
    assert at_limit.scale == 50
    assert at_limit.overlaps(reference)
    assert tag.target(45).overlaps(reference)
    with pytest.raises(PrecisionInfeasible):
        tag.target(51)



def test_classic_residuals_decrease(table):
    df = pu.convergence_table([10, 20, 40], 20, table)
    assert list(df.columns) == ['sq8', 'classic-basel', 'classic-odd', 'classic-alt', 'classic-central']
    assert df.index.name == 'M'
    for column in df.columns:
        assert df[column].is_monotonic_decreasing
    # tail of the Basel series is about 1/M
    assert 0.02 < df.loc[40, 'classic-basel'] < 0.03


def test_ratio_diagnostics(table):
    diag = pu.ratio_diagnostics(pu.PiSeriesTag('classic-central'), 50, table)
    assert diag.shape == (50, 2)
    assert abs(diag[-1, 0] - 0.25) < 0.02
    assert abs(pu.ratio_diagnostics(pu.PiSeriesTag('sq8'), 100, table)[-1, 0] - 0.5) < 0.05
    assert np.isnan(pu.ratio_diagnostics(pu.PiSeriesTag('alpha9', alpha=0), 3, table)).all()


def test_empirical_rate(table):
    estimate = pu.empirical_L(1, 200, table=table)
    assert abs(float(estimate['root']) - 0.5) < 0.05
    assert abs(float(estimate['ratio']) - 0.5) < 0.01
    assert estimate['ratios'].shape == (10,)
    assert estimate['authoritative'] is False
    with pytest.raises(DomainError):
        pu.empirical_L(1, 9, table=table)


def test_tags():
    assert pu.PiSeriesTag('pow8', 2).label == 'pow8(k=2)'
    assert pu.PiSeriesTag('pow8', 2).target_text == '(pi^2/8)^2'
    assert pu.PiSeriesTag('classic-odd').target_text == 'pi^2/8'
    assert pu.PiSeriesTag('alpha9', alpha='2/3').label == 'alpha9(alpha=2/3)'
    with pytest.raises(DomainError):
        pu.PiSeriesTag('tan')
    with pytest.raises(DomainError):
        pu.PiSeriesTag('sqrt2pow', 0)
    with pytest.raises(DomainError):
        pu.PiSeriesTag('alpha9')
    with pytest.raises(DomainError):
        pu.partial_sum(pu.PiSeriesTag('sq8'), 0)
    with pytest.raises(DomainError):
        pu.term(pu.PiSeriesTag('sq8'), -1)
    with pytest.raises(DomainError):
        pu.residual(pu.PiSeriesTag('sq8'), 10, 5)


def test_pi_report(table):
    report = pu.check_pi_series(30, table)
    assert report.passed, report.violations
    assert report.notes


def test_root_limits(table):
    for kind, limit in pu.RATIO_LIMITS.items():
        root = pu.ratio_diagnostics(pu.PiSeriesTag(kind), pu.LIMIT_TERMS, table)[-1, 1]
        assert abs(root - float(limit)) < 0.05
    # the polynomial factor of the Basel summands still shows at 100 terms
    root = pu.ratio_diagnostics(pu.PiSeriesTag('classic-basel'), 100, table)[-1, 1]
    assert 0.9 < root < 0.92


def test_pi_report_flags_wrong_root(table, monkeypatch):
    diagnostics = pu.ratio_diagnostics

    def roots_off(tag, M, table=None):
        diag = diagnostics(tag, M, table)
        if tag.kind == 'sq8':
            diag[-1, 1] = 0.9
        return diag

    monkeypatch.setattr(pu, 'ratio_diagnostics', roots_off)
    report = pu.check_pi_series(30, table)
    assert [v['case'] for v in report.violations] == ['sq8,root_limit']
