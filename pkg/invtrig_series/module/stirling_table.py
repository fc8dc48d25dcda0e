#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: stirling_table.py
Date: 2026-10-18
Version: 1.0
Description:
    Triangular cache of the signed Stirling numbers of the first kind s(n,k),
    grown by the recurrence s(n+1,k) = s(n,k-1) - n*s(n,k).

License:
"""

""" Imports """
# Import python libraries
import threading

# Import local modules
from invtrig_series.module.errors import DomainError


""" Class definitions """

class StirlingTable:
    """
    Lazily extended triangle rows[n][k] = s(n,k), 0 <= k <= n <= max_n.
    Extension is amortized: a request beyond max_n grows the table up to n once.
    Reads and growth are guarded by a lock, so one instance may be shared by threads.
    """
    def __init__(self, max_n = 0):
        self._rows = [[1]]
        self._lock = threading.Lock()
        if max_n > 0:
            self.extend(max_n)

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def extend(self, n:int):
        """Grow the triangle so that row n exists"""
        if n <= self.max_n:
            return
        with self._lock:
            rows = self._rows
            for m in range(len(rows) - 1, n):
                prev = rows[m]
                row = [0] * (m + 2)
                for k in range(1, m + 2):
                    left = prev[k - 1]
                    right = prev[k] if k <= m else 0
                    row[k] = left - m * right
                rows.append(row)

    def s(self, n:int, k:int) -> int:
        """signed s(n,k); zero for k > n is refused, k < 0 too"""
        if n < 0 or k < 0:
            raise DomainError(f's({n},{k}) needs natural arguments')
        if k > n:
            raise DomainError(f's({n},{k}) needs k <= n')
        self.extend(n)
        return self._rows[n][k]

    def s_or_zero(self, n:int, k:int) -> int:
        """s(n,k) with the usual zero extension outside 0 <= k <= n"""
        if n < 0 or k < 0 or k > n:
            return 0
        self.extend(n)
        return self._rows[n][k]

    def row(self, n:int) -> list:
        """copy of row n"""
        if n < 0:
            raise DomainError(f'row index must be natural, got {n}')
        self.extend(n)
        return list(self._rows[n])


_DEFAULT_TABLE = StirlingTable()


def default_table() -> StirlingTable:
    """process wide table shared by the utility functions"""
    return _DEFAULT_TABLE
