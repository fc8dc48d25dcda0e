#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: cli_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Command line interface: one subcommand per part of the package plus the
    verification suites and diagnostics. Output as text, json or csv; json always
    carries "schema": "1" and every number as a decimal string.

    Exit codes: 0 success, 1 usage, 2 domain error, 3 verification failure,
    4 internal inconsistency.

License:
"""


""" Imports """
# Import python libraries
import argparse
import json
import sys
from fractions import Fraction

# Import external packages
import pandas as pd

# Import local modules
from invtrig_series import __version__
from invtrig_series import exact_utility as ex
from invtrig_series import bell_utility, oracle_utility, pi_utility, prodexpand_utility
from invtrig_series import qfunc_utility, series_utility, stirling_utility, verify_utility
from invtrig_series.module.errors import DomainError, InconsistencyError, NotExpandable, PrecisionInfeasible
from invtrig_series.module.fixnum import FixNum


""" Variable definitions """

SCHEMA_VERSION = '1'
EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY, EXIT_INCONSISTENT = 0, 1, 2, 3, 4

SERIES_EXTRA = ('arcsin-stirling', 'even-pow', 'deriv', 'maclaurin', 'odd-pow')
PI_REPRS = ('sq8', 'pow8', 'sqrt2', 'alpha9') + pi_utility.CLASSIC_KINDS
ORACLE_FUNCS = ('pi', 'sqrt', 'ln', 'exp', 'arcsin', 'arccos', 'arccosh', 'arcsinh')
# tol loop of the series command stops here
MAX_TOL_TERMS = 4096


""" Class definitions """

class ArgumentParser(argparse.ArgumentParser):
    """argparse parser that reports usage errors with exit code 1 and takes no abbreviated flags"""
    def __init__(self, *args, **kwargs):
        kwargs.setdefault('allow_abbrev', False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


""" Function definitions """

def _rational(text:str) -> Fraction:
    try:
        return ex.parse_rational(text)
    except DomainError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _rational_list(text:str) -> list:
    return [_rational(part) for part in text.split(',') if part.strip()]


def _strings(values) -> list:
    return [ex.rat_to_str(v) if isinstance(v, Fraction) else str(v) for v in values]


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('text', 'json', 'csv'), default='text')
    common.add_argument('--digits', type=int, default=30, help='decimal places of numeric output')
    common.add_argument('--seed', type=int, default=0, help='seed of randomized sweeps')
    common.add_argument('--jobs', type=int, default=1, help='joblib workers of verify')
    common.add_argument('--out', help='write output to this file instead of stdout')
    common.add_argument('--quiet', action='store_true', help='no progress output on stderr')

    parser = ArgumentParser(prog='invtrig', description='Exact series of powers of inverse trigonometric '
                            'functions, pi representations and their verification.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('stirling', parents=[common], help='signed Stirling numbers of the first kind')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int)
    p.add_argument('--triangle', action='store_true', help='all rows 0..n')

    p = sub.add_parser('q', parents=[common], help='the Q(k,m) quantity')
    p.add_argument('--k', type=int)
    p.add_argument('--m', type=int)
    p.add_argument('--table', type=int, nargs=2, metavar=('KMAX', 'MMAX'), help='Q table for k <= KMAX, m <= MMAX')
    p.add_argument('--k-max', type=int, default=6)
    p.add_argument('--m-max', type=int, default=8)

    p = sub.add_parser('bell', parents=[common], help='partial Bell polynomials')
    p.add_argument('--n', '--m', type=int, dest='n', help='order n (--m with --preset)')
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--values', '--args', type=_rational_list, dest='values', help='comma separated rationals x1,x2,...')
    p.add_argument('--method', choices=('partition', 'rec', 'genfun', 'all'), default='all')
    p.add_argument('--preset', choices=('arccos',), help='arguments of (arccos x)^2/(2(1-x)) at x = 1')
    p.add_argument('--arccos', action='store_const', const='arccos', dest='preset')

    p = sub.add_parser('prod', parents=[common], help='products of shifted squares and trig compositions')
    p.add_argument('--k', type=int, default=1)
    p.add_argument('--variant', choices=prodexpand_utility.VARIANTS, default='consecutive')
    p.add_argument('--stirling', action='store_true', help='Stirling route instead of direct expansion')
    p.add_argument('--trig', choices=sorted(prodexpand_utility.TRIG_TAGS), help='series coefficients of a composition')
    p.add_argument('--alpha', type=_rational, default=Fraction(1))
    p.add_argument('--terms', type=int, default=8)

    p = sub.add_parser('series', parents=[common], help='truncated expansions')
    p.add_argument('--expr', choices=series_utility.FAMILIES + SERIES_EXTRA, required=True)
    p.add_argument('--k', type=int, default=1)
    p.add_argument('--alpha', type=_rational)
    p.add_argument('--tag', choices=sorted(prodexpand_utility.TRIG_TAGS))
    p.add_argument('--terms', type=int, default=10)
    p.add_argument('--hyperbolic', action='store_true')
    p.add_argument('--form', choices=series_utility.DERIVATIVE_FORMS, default='ratio')
    p.add_argument('--j', type=int, default=0, help='power of x for maclaurin')
    p.add_argument('--eval', type=_rational, dest='x', help='compare with the oracle at this x')
    p.add_argument('--tol', type=_rational, help='series families only: double --terms until the tail estimate is below tol')

    p = sub.add_parser('pi', parents=[common], help='pi series representations')
    p.add_argument('--repr', choices=PI_REPRS, required=True, dest='kind')
    p.add_argument('--k', type=int, default=1)
    p.add_argument('--alpha', type=_rational)
    p.add_argument('--terms', type=int, default=40)

    p = sub.add_parser('verify', parents=[common], help='identity verification suites')
    p.add_argument('suite', choices=verify_utility.SUITES)
    p.add_argument('--max', type=int, default=verify_utility.DEFAULT_MAX_N, dest='max_n')

    p = sub.add_parser('diag', parents=[common], help='diagnostics')
    p.add_argument('what', choices=('L', 'q-rest', 'oracle', 'convergence'))
    p.add_argument('--k', type=int, default=1)
    p.add_argument('--terms', type=int, default=200)
    p.add_argument('--func', choices=ORACLE_FUNCS, default='pi')
    p.add_argument('--x', type=_rational, default=Fraction(1, 2))
    return parser


def cmd_stirling(args) -> tuple:
    if args.triangle:
        rows = [stirling_utility.stirling_row(n) for n in range(args.n + 1)]
        df = pd.DataFrame([[str(v) for v in row] + [''] * (args.n - n) for n, row in enumerate(rows)],
                          index=pd.RangeIndex(args.n + 1, name='n'))
        df.columns.name = 'k'
        return {'n': args.n, 'triangle': [[str(v) for v in row] for row in rows]}, df
    if args.k is not None:
        value = stirling_utility.stirling1(args.n, args.k)
        return {'n': args.n, 'k': args.k, 'value': str(value)}, None
    row = stirling_utility.stirling_row(args.n)
    df = pd.DataFrame({'k': range(args.n + 1), 's': [str(v) for v in row]})
    return {'n': args.n, 'row': [str(v) for v in row]}, df


def cmd_q(args) -> tuple:
    if args.k is not None and args.m is not None:
        return {'k': args.k, 'm': args.m, 'value': ex.rat_to_str(qfunc_utility.q(args.k, args.m))}, None
    k_max, m_max = args.table if args.table else (args.k_max, args.m_max)
    df = qfunc_utility.q_table_text(qfunc_utility.q_table(k_max, m_max))
    return {'k_max': k_max, 'm_max': m_max, 'rows': df.values.tolist()}, df


def cmd_bell(args) -> tuple:
    if args.preset == 'arccos':
        value = bell_utility.bell_arccos(args.n, args.k)
        return {'n': args.n, 'k': args.k, 'arccos': True, 'value': ex.rat_to_str(value),
                'routes_agree': True}, None
    methods = {'partition': bell_utility.bell, 'rec': bell_utility.bell_rec, 'genfun': bell_utility.bell_genfun}
    chosen = list(methods) if args.method == 'all' else [args.method]
    values = {name: methods[name](args.n, args.k, args.values) for name in chosen}
    if len(set(values.values())) > 1:
        raise InconsistencyError(f'Bell routes disagree: {values}')
    payload = {'n': args.n, 'k': args.k, 'args': _strings(args.values),
               'value': ex.rat_to_str(values[chosen[0]]), 'methods': chosen}
    return payload, None


def cmd_prod(args) -> tuple:
    if args.trig:
        rows = []
        for n in range(args.terms + 1):
            coeff = prodexpand_utility.trig_coeff(args.trig, args.alpha, n)
            if isinstance(coeff, prodexpand_utility.TrigCoeff):
                rows.append({'n': n, 'even_coeff': ex.rat_to_str(coeff.even_coeff),
                             'odd_coeff': ex.rat_to_str(coeff.odd_coeff),
                             'prefactor_even': coeff.prefactor_even, 'prefactor_odd': coeff.prefactor_odd})
            else:
                rows.append({'n': n, 'coeff': ex.rat_to_str(coeff)})
        payload = {'tag': args.trig, 'alpha': ex.rat_to_str(args.alpha), 'terms': args.terms, 'coeffs': rows}
        return payload, pd.DataFrame(rows)
    if args.stirling:
        poly = prodexpand_utility.prod_squares_stirling(args.k, args.variant)
    else:
        poly = prodexpand_utility.prod_squares(args.k, args.variant)
    payload = {'k': args.k, 'variant': args.variant, 'route': 'stirling' if args.stirling else 'direct',
               'coeffs': poly.to_list()}
    return payload, pd.DataFrame({'j': range(len(poly.coeffs)), 'coeff': poly.to_list()})


def _series_with_tol(spec, x, tol):
    terms = spec.M
    while True:
        series = series_utility.build_series(spec)
        _, tail = series_utility.eval_with_tail(series, x, 1)
        if tail is not None and tail <= tol:
            return spec, series
        if 2 * terms > MAX_TOL_TERMS:
            raise DomainError(f'tail estimate still above {ex.rat_to_str(tol)} at {terms} terms')
        terms *= 2
        spec = series_utility.SeriesSpec(spec.family, terms, spec.k, spec.alpha, spec.tag)


def cmd_series(args) -> tuple:
    expr = args.expr
    if expr == 'odd-pow':
        series_utility.odd_pow_at_one(args.k)
    if expr == 'deriv':
        values = [series_utility.deriv_at_one(args.k, m, args.form) for m in range(1, args.terms + 1)]
        df = pd.DataFrame({'m': range(1, args.terms + 1), 'derivative': _strings(values)})
        return {'expr': expr, 'k': args.k, 'form': args.form, 'derivatives': _strings(values)}, df
    if expr == 'maclaurin':
        approx, tail = series_utility.maclaurin_even_pow(args.k, args.j, args.terms, args.hyperbolic)
        payload = {'expr': expr, 'k': args.k, 'j': args.j, 'terms': args.terms, 'hyperbolic': args.hyperbolic,
                   'approx': FixNum.from_rational(approx, args.digits).to_string(),
                   'tail': None if tail is None else FixNum.from_rational(tail, args.digits).to_string()}
        return payload, None
    if expr == 'even-pow':
        series = series_utility.even_pow_series(args.k, args.terms, args.hyperbolic)
    elif expr == 'arcsin-stirling':
        series = series_utility.arcsin_pow_stirling(args.k, args.terms)
    else:
        spec = series_utility.SeriesSpec(expr, args.terms, args.k, args.alpha, args.tag)
        if args.tol is not None:
            if args.x is None:
                raise DomainError('--tol needs --eval')
            spec, series = _series_with_tol(spec, args.x, args.tol)
        else:
            series = series_utility.build_series(spec)
    payload = dict(series.to_dict(), expr=expr)
    if args.x is not None and expr in series_utility.FAMILIES:
        payload['comparison'] = oracle_utility.compare(spec, args.x, args.digits, series).to_dict()
    elif args.x is not None:
        value, tail = series_utility.eval_with_tail(series, args.x, args.digits)
        payload['value'] = value.to_string()
        payload['tail'] = None if tail is None else FixNum.from_rational(tail, args.digits).to_string()
    df = pd.DataFrame({'n': range(len(series)), 'coeff': payload['coeffs']})
    return payload, df


def cmd_pi(args) -> tuple:
    kind = 'sqrt2pow' if args.kind == 'sqrt2' else args.kind
    tag = pi_utility.PiSeriesTag(kind, args.k, args.alpha)
    partial = pi_utility.partial_sum(tag, args.terms)
    diag = pi_utility.ratio_diagnostics(tag, args.terms)
    payload = {'repr': tag.label, 'terms': args.terms, 'target_expr': tag.target_text,
               'partial_sum': ex.rat_to_str(partial),
               'partial_decimal': FixNum.from_rational(partial, args.digits).to_string(),
               'target': tag.target(args.digits).to_string(),
               'residual': pi_utility.residual(tag, args.terms, args.digits).to_string(mark_uncertain=True),
               'last_ratio': repr(float(diag[-1, 0])), 'last_root': repr(float(diag[-1, 1]))}
    return payload, None


def cmd_verify(args) -> tuple:
    reports = verify_utility.run_suite(args.suite, args.max_n, args.seed, args.digits, args.jobs, args.quiet)
    payload = {'suite': args.suite, 'max_n': args.max_n, 'seed': args.seed,
               'passed': all(r.passed for r in reports),
               'checks': [r.to_dict() for r in reports],
               'counterexamples': verify_utility.counterexamples(reports)}
    return payload, verify_utility.summary_table(reports)


def _oracle_value(func:str, x:Fraction, digits:int) -> FixNum:
    if func == 'pi':
        return oracle_utility.pi_ref(digits)
    functions = {'sqrt': oracle_utility.sqrt_fp, 'ln': oracle_utility.ln_fp, 'exp': oracle_utility.exp_fp,
                 'arcsin': oracle_utility.arcsin_fp, 'arccos': oracle_utility.arccos_fp,
                 'arccosh': oracle_utility.arccosh_fp, 'arcsinh': oracle_utility.arcsinh_fp}
    return functions[func](x, digits)


def cmd_diag(args) -> tuple:
    if args.what == 'L':
        estimate = pi_utility.empirical_L(args.k, args.terms, args.digits)
        payload = {'k': args.k, 'terms': args.terms, 'root': estimate['root'].to_string(),
                   'ratio': FixNum.from_rational(estimate['ratio'], args.digits).to_string(),
                   'ratios': [repr(float(r)) for r in estimate['ratios']], 'authoritative': False}
        return payload, None
    if args.what == 'q-rest':
        rows = [[ex.rat_to_str(qfunc_utility.q_decomposition_rest(j, m)) for m in range(1, args.terms + 1)]
                for j in range(1, args.k + 1)]
        df = pd.DataFrame(rows, index=pd.RangeIndex(1, args.k + 1, name='j'),
                          columns=pd.RangeIndex(1, args.terms + 1, name='m'))
        return {'j_max': args.k, 'm_max': args.terms, 'rows': rows}, df
    if args.what == 'oracle':
        value = _oracle_value(args.func, args.x, args.digits)
        return dict(value.to_dict(), func=args.func, x=ex.rat_to_str(args.x)), None
    df = pi_utility.convergence_table(range(10, args.terms + 1, 10), args.digits)
    payload = {'M': [str(m) for m in df.index],
               'residuals': {col: [repr(v) for v in df[col]] for col in df.columns}}
    return payload, df


COMMANDS = {'stirling': cmd_stirling, 'q': cmd_q, 'bell': cmd_bell, 'prod': cmd_prod,
            'series': cmd_series, 'pi': cmd_pi, 'verify': cmd_verify, 'diag': cmd_diag}


def render(command:str, payload:dict, df, fmt:str) -> str:
    """text, json or csv rendering of a command result"""
    if fmt == 'json':
        return json.dumps(dict(payload, schema=SCHEMA_VERSION, command=command), indent=2, sort_keys=True) + '\n'
    if fmt == 'csv':
        if df is None:
            df = pd.DataFrame([{key: json.dumps(v) if isinstance(v, (list, dict)) else v
                                for key, v in payload.items()}])
        return df.to_csv(index=df.index.name is not None)
    lines = [f'{key}: {value}' for key, value in payload.items() if not isinstance(value, (list, dict))]
    if df is not None:
        lines.append(df.to_string())
    return '\n'.join(lines) + '\n'


def _check_usage(parser:ArgumentParser, args):
    """flag combinations argparse cannot express, reported as usage errors"""
    if args.command == 'bell':
        if args.n is None:
            parser.error('bell needs --n (or --m with --preset)')
        if args.preset is None and args.values is None:
            parser.error('bell needs --values or --preset arccos')
    if args.command == 'series' and args.tol is not None and args.expr not in series_utility.FAMILIES:
        parser.error(f'--tol is not supported for --expr {args.expr}, '
                     f'use it with one of {", ".join(series_utility.FAMILIES)}')


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_usage(parser, args)
    try:
        payload, df = COMMANDS[args.command](args)
    except (DomainError, NotExpandable, PrecisionInfeasible) as err:
        print(f'{type(err).__name__}: {err}', file=sys.stderr)
        return EXIT_DOMAIN
    except InconsistencyError as err:
        print(f'InconsistencyError: {err}', file=sys.stderr)
        return EXIT_INCONSISTENT
    text = render(args.command, payload, df, args.format)
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    if args.command == 'verify' and not payload['passed']:
        return EXIT_VERIFY
    return EXIT_OK
