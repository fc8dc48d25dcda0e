#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: bell_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Partial Bell polynomials B_{n,k}(x_1, ..., x_{n-k+1}) evaluated at rational sequences.
    Three independent routes (partition sum, convolution recurrence, generating function),
    the special values, Faa di Bruno composition and the Bell values attached to
    the derivatives of (arccos x)^2 / (2(1-x)) at x = 1.

License:
"""


""" Imports """
# Import python libraries
import random
from fractions import Fraction

# Import external packages

# Import local modules
from invtrig_series import exact_utility as ex
from invtrig_series.qfunc_utility import q, q_weighted_sum
from invtrig_series.module.coeff_series import series_pow
from invtrig_series.module.errors import DomainError, InconsistencyError
from invtrig_series.module.report import CheckReport
from invtrig_series.module.stirling_table import StirlingTable


""" Function definitions """

def _check_args(n:int, k:int, args:list) -> list:
    if k < 1 or k > n:
        raise DomainError(f'B_{{{n},{k}}} needs 1 <= k <= n')
    if len(args) < n - k + 1:
        raise DomainError(f'B_{{{n},{k}}} needs {n - k + 1} arguments, got {len(args)}')
    return [ex.as_rational(x) for x in args[:n - k + 1]]


def bell_partitions(n:int, k:int):
    """
    Multi-indices (l_1, ..., l_{n-k+1}) of natural numbers with
    sum_i i*l_i = n and sum_i l_i = k, in lexicographic order

    Yields
    l : tuple of int
    """
    size = n - k + 1
    if k < 0 or size < 1:
        return

    def _fill(i:int, rest_n:int, rest_k:int, prefix:list):
        if i > size:
            if rest_n == 0 and rest_k == 0:
                yield tuple(prefix)
            return
        # remaining parts have size >= i, so l_i parts of size i leave at least i*(rest_k - l_i)
        for l in range(min(rest_k, rest_n // i) + 1):
            left_n = rest_n - i * l
            left_k = rest_k - l
            if left_n < i * left_k or (left_k == 0 and left_n > 0) or left_n > size * left_k:
                continue
            prefix.append(l)
            yield from _fill(i + 1, left_n, left_k, prefix)
            prefix.pop()

    yield from _fill(1, n, k, [])


def bell(n:int, k:int, args:list) -> Fraction:
    """
    Partial Bell polynomial from its partition sum
        B_{n,k} = sum n! / prod_i (l_i! (i!)^l_i) * prod_i x_i^l_i

    Parameters
    n : int, n >= 1
    k : int, 1 <= k <= n
    args : list of Rational, at least n-k+1 values x_1, x_2, ...

    Returns
    B_{n,k}(x) : Fraction
    """
    x = _check_args(n, k, args)
    total = Fraction(0)
    for l in bell_partitions(n, k):
        weight = 1
        term = Fraction(1)
        for i, li in enumerate(l, start=1):
            if li:
                weight *= ex.factorial(li) * ex.factorial(i) ** li
                term *= x[i - 1] ** li
        total += term * Fraction(ex.factorial(n), weight)
    return total


def bell_rec(n:int, k:int, args:list) -> Fraction:
    """
    Partial Bell polynomial from the convolution recurrence
        B_{n,k} = sum_{i=1}^{n-k+1} binom(n-1,i-1) x_i B_{n-i,k-1},  B_{0,0} = 1
    """
    x = _check_args(n, k, args)
    memo = {}

    def _b(nn:int, kk:int) -> Fraction:
        if kk == 0:
            return Fraction(1) if nn == 0 else Fraction(0)
        if kk > nn:
            return Fraction(0)
        if (nn, kk) not in memo:
            memo[(nn, kk)] = sum((ex.binom_int(nn - 1, i - 1) * x[i - 1] * _b(nn - i, kk - 1)
                                  for i in range(1, nn - kk + 2)), Fraction(0))
        return memo[(nn, kk)]

    return _b(n, k)


def bell_genfun(n:int, k:int, args:list) -> Fraction:
    """
    n!/k! times the coefficient of t^n in (sum_m x_m t^m/m!)^k
    """
    x = _check_args(n, k, args)
    egf = [Fraction(0)] + [x[m - 1] / ex.factorial(m) if m <= len(x) else Fraction(0)
                           for m in range(1, n + 1)]
    return series_pow(egf, k, n)[n] * ex.factorial(n) / ex.factorial(k)


def bell_genfun_check(n:int, k:int, args:list) -> bool:
    """True iff the generating function route equals the partition sum"""
    return bell_genfun(n, k, args) == bell(n, k, args)


def quadratic_bell(n:int, k:int, alpha) -> Fraction:
    """
    Closed form of B_{n,k}(alpha, 1, 0, ..., 0)
        (n-k)!/2^(n-k) binom(n,k) binom(k,n-k) alpha^(2k-n)
    """
    alpha = ex.as_rational(alpha)
    if 2 * k - n < 0 and alpha == 0:
        raise DomainError(f'alpha = 0 with negative exponent 2k-n = {2 * k - n}')
    return (Fraction(ex.factorial(n - k), 2 ** (n - k)) * ex.binom_int(n, k) * ex.binom_int(k, n - k)
            * ex.pow_rat(alpha, 2 * k - n))


def double_factorial_bell(n:int, k:int) -> int:
    """closed form of B_{n,k}((-1)!!, 1!!, 3!!, ...) = [2(n-k)-1]!! binom(2n-k-1, 2(n-k))"""
    return ex.double_factorial(2 * (n - k) - 1) * ex.binom_int(2 * n - k - 1, 2 * (n - k))


def check_special_values(n:int, k:int, alpha, beta, args:list = None) -> CheckReport:
    """
    Scaling law, quadratic case and double factorial case of B_{n,k}

    Parameters
    n, k : int, 1 <= k <= n
    alpha, beta : Rational, scaling parameters, alpha also feeds the quadratic case
    args : list of Rational, arguments of the scaling law, default a fixed mixed sign sequence

    Returns
    report : CheckReport
    """
    if k < 1 or k > n:
        raise DomainError(f'B_{{{n},{k}}} needs 1 <= k <= n')
    alpha = ex.as_rational(alpha)
    beta = ex.as_rational(beta)
    size = n - k + 1
    if args is None:
        args = [Fraction((-1) ** i * i, i + 2) for i in range(1, size + 1)]
    args = [ex.as_rational(a) for a in args[:size]]
    report = CheckReport('bell_special')

    scaled = [alpha * beta ** i * a for i, a in enumerate(args, start=1)]
    report.record((n, k, 'scaling'), bell(n, k, scaled),
                  alpha ** k * beta ** n * bell(n, k, args))

    if 2 * k - n < 0 and alpha == 0:
        report.notes.append(f'quadratic case skipped at n={n}, k={k}: alpha = 0 with 2k-n < 0')
    else:
        quad_args = ([alpha, Fraction(1)] + [Fraction(0)] * size)[:size]
        report.record((n, k, 'quadratic'), bell(n, k, quad_args), quadratic_bell(n, k, alpha))

    dfact_args = [Fraction(ex.double_factorial(2 * i - 3)) for i in range(1, size + 1)]
    report.record((n, k, 'double_factorial'), bell(n, k, dfact_args), double_factorial_bell(n, k))
    return report


def faa_di_bruno(n:int, outer_derivs:list, inner_derivs:list) -> Fraction:
    """
    n-th derivative of f(h(t)) at t0
        sum_{k=1}^{n} f^(k)(h(t0)) B_{n,k}(h'(t0), ..., h^(n-k+1)(t0))

    Parameters
    n : int, n >= 0
    outer_derivs : list of Rational, f^(0), f^(1), ... at h(t0). f^(0) only enters for n = 0,
        so a list of exactly n entries (n >= 1) is read as f^(1), ..., f^(n)
    inner_derivs : list of Rational, h', h'', ... at t0, at least n entries

    Returns
    derivative : Fraction
    """
    if n < 0:
        raise DomainError(f'derivative order must be natural, got {n}')
    if len(outer_derivs) < max(n, 1) or len(inner_derivs) < n:
        raise DomainError(f'order {n} needs {max(n, 1)} outer and {n} inner derivatives, '
                          f'got {len(outer_derivs)} and {len(inner_derivs)}')
    if n == 0:
        return ex.as_rational(outer_derivs[0])
    shift = 1 if len(outer_derivs) == n else 0
    return sum((ex.as_rational(outer_derivs[k - shift]) * bell_rec(n, k, inner_derivs)
                for k in range(1, n + 1)), Fraction(0))



def bell_arccos_args(length:int, table:StirlingTable = None) -> list:
    """
    t_i = (2i)!!/(2i+2)! Q(2,2i), i = 1..length: -1/12, 2/45, -3/70, ...
    Half the derivatives of (arccos x)^2/(2(1-x)) at x = 1.
    """
    return [Fraction(ex.double_factorial(2 * i) * q(2, 2 * i, table), ex.factorial(2 * i + 2))
            for i in range(1, length + 1)]


def bell_arccos(m:int, k:int, table:StirlingTable = None) -> Fraction:
    """
    B_{m,k} at the derivatives of (arccos x)^2/(2(1-x)) at x -> 1-, by two routes:
    2^k B_{m,k}(t_1, t_2, ...) and
    (-2)^k [2(m-k)]!! binom(m,k) sum_j (-1)^j (2j)! binom(k,j) Q(2j,2m)/(2j+2m)!

    Raises InconsistencyError when the routes differ.
    """
    if k < 1 or k > m:
        raise DomainError(f'bell_arccos needs 1 <= k <= m, got m={m}, k={k}')
    scaled = 2 ** k * bell(m, k, bell_arccos_args(m - k + 1, table))
    closed = ((-2) ** k * ex.double_factorial(2 * (m - k)) * ex.binom_int(m, k)
              * q_weighted_sum(k, m, table))
    if scaled != closed:
        raise InconsistencyError(f'bell_arccos({m},{k}): Bell route {ex.rat_to_str(scaled)} '
                                 f'!= closed form {ex.rat_to_str(closed)}')
    return scaled


def random_rational(rng:random.Random, bound:int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def check_three_way(instances:int, seed:int = 0, n_max:int = 18) -> CheckReport:
    """
    Partition sum, recurrence and generating function on random rational instances

    Parameters
    instances : int, number of random (n, k, args) draws
    seed : int, seed of random.Random
    n_max : int, largest n drawn
    """
    rng = random.Random(seed)
    report = CheckReport('bell_three_way')
    for i in range(instances):
        n = rng.randint(1, n_max)
        k = rng.randint(1, n)
        args = [random_rational(rng) for _ in range(n - k + 1)]
        value = bell(n, k, args)
        report.record((i, n, k, 'rec'), bell_rec(n, k, args), value)
        report.record((i, n, k, 'genfun'), bell_genfun(n, k, args), value)
    return report


def check_scaling_sweep(n_max:int, seed:int = 0) -> CheckReport:
    """check_special_values for every 1 <= k <= n <= n_max with random alpha, beta"""
    rng = random.Random(seed)
    report = CheckReport('bell_special')
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            alpha = random_rational(rng)
            beta = random_rational(rng)
            args = [random_rational(rng) for _ in range(n - k + 1)]
            report = report + check_special_values(n, k, alpha, beta, args)
    return report


def check_bell_arccos(m_max:int, table:StirlingTable = None) -> CheckReport:
    """both bell_arccos routes for all 1 <= k <= m <= m_max"""
    report = CheckReport('bell_arccos')
    for m in range(1, m_max + 1):
        for k in range(1, m + 1):
            try:
                bell_arccos(m, k, table)
                report.record((m, k), True, True)
            except InconsistencyError as err:
                report.record((m, k), False, True, error=err)
    return report


def envelope_sum(k:int) -> int:
    """sum_{j=0}^{k} (-1)^j <2k>_j [2(k-j)-1]!! binom(2k-j-1, 2(k-j))"""
    total = 0
    for j in range(k + 1):
        total += ((-1) ** j * ex.falling(2 * k, j) * ex.double_factorial(2 * (k - j) - 1)
                  * ex.binom_int(2 * k - j - 1, 2 * (k - j)))
    return total


def check_envelope_identity(k_max:int) -> CheckReport:
    """envelope_sum(k) = (-1)^k (2k)!! for 1 <= k <= k_max"""
    report = CheckReport('bell_envelope')
    for k in range(1, k_max + 1):
        report.record(k, envelope_sum(k), (-1) ** k * ex.double_factorial(2 * k))
    return report


def check_ward_identity(n_max:int) -> CheckReport:
    """sum_{k=0}^{n} k! [2(n-k)-1]!! binom(2n-k-1, 2(n-k)) = (2n-1)!! for 1 <= n <= n_max"""
    report = CheckReport('bell_ward')
    for n in range(1, n_max + 1):
        lhs = sum(ex.factorial(k) * double_factorial_bell(n, k) for k in range(n + 1))
        report.record(n, lhs, ex.double_factorial(2 * n - 1))
    return report
