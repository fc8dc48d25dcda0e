#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: errors.py
Date: 2026-10-18
Version: 1.0
Description: 
    Exception classes raised by the invtrig_series package.
    Identity checks never raise on a mathematical failure, they return a CheckReport.

License: 
"""


class InvtrigSeriesError(Exception):
    """Base class of every error raised by invtrig_series"""


class DomainError(InvtrigSeriesError, ValueError):
    """Argument outside the domain of the requested quantity"""


class InconsistencyError(InvtrigSeriesError, ArithmeticError):
    """Two independent computational routes returned different values"""


class NotExpandable(InvtrigSeriesError):
    """The function has no Taylor series at the requested point"""


class PrecisionInfeasible(InvtrigSeriesError, ValueError):
    """Requested number of digits exceeds the configured oracle limit"""
