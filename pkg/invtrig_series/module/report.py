#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: report.py
Date: 2026-10-18
Version: 1.0
Description: 
    CheckReport collects the outcome of an identity sweep: number of checked cases
    and the list of violations. Violations are plain dicts so they serialize to JSON directly.

License: 
"""

""" Imports """
# Import python libraries
from dataclasses import dataclass, field


""" Class definitions """

@dataclass
class CheckReport:
    """
    Outcome of one identity sweep

    Attributes
    name : str, identity or suite name
    checked : int, number of evaluated cases
    violations : list of dict, one dict per failed case, each with a 'case' key
    notes : list of str, edge cases worth reporting that are not violations
    """
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, case, lhs, rhs, **extra) -> bool:
        """
        Count one case and store it as a violation when both sides differ.
        Sides are compared exactly and stored in canonical text form.

        Returns
        ok : bool, True if lhs == rhs
        """
        self.checked += 1
        if lhs == rhs:
            return True
        entry = {'check': self.name, 'case': _case_key(case), 'lhs': str(lhs), 'rhs': str(rhs)}
        entry.update({key: str(value) for key, value in extra.items()})
        self.violations.append(entry)
        return False

    def __add__(self, other: 'CheckReport') -> 'CheckReport':
        merged = CheckReport(self.name if self.name == other.name else f'{self.name}+{other.name}')
        merged.checked = self.checked + other.checked
        merged.violations = sorted(self.violations + other.violations,
                                   key=lambda v: (v['check'], v['case']))
        merged.notes = self.notes + other.notes
        return merged

    def to_dict(self) -> dict:
        return {'name': self.name,
                'passed': self.passed,
                'checked': self.checked,
                'violations': sorted(self.violations, key=lambda v: (v['check'], v['case'])),
                'notes': list(self.notes)}


def _case_key(case) -> str:
    # zero padded so that lexicographic order equals numeric order
    if isinstance(case, tuple):
        return ','.join(f'{c:04d}' if isinstance(c, int) else str(c) for c in case)
    if isinstance(case, int):
        return f'{case:04d}'
    return str(case)
