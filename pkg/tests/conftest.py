#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: conftest.py
Date: 2026-10-18
Version: 1.0
Description:
    Shared fixtures: one Stirling table for the session and a seeded generator.

License:
"""

""" Imports """
# Import python libraries
import random

# Import external packages
import pytest

# Import local modules
from invtrig_series.module.stirling_table import StirlingTable


""" Fixtures """

@pytest.fixture(scope='session')
def table():
    return StirlingTable(60)


@pytest.fixture
def rng():
    return random.Random(2026)
