#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Filename: test_cli_utility.py
Date: 2026-10-18
Version: 1.0
Description:
    Command line surface: payloads, output formats, schema conformance and exit codes.

License:
"""

""" Imports """
# Import python libraries
import json
from pathlib import Path

# Import external packages
import jsonschema
import pytest

# Import local modules
from invtrig_series import bell_utility, cli_utility, verify_utility
from invtrig_series import exact_utility as ex
from invtrig_series.module.report import CheckReport


""" Variable definitions """

SCHEMA_PATH = Path(__file__).resolve().parents[1] / 'invtrig_series' / 'schema' / 'output_schema_v1.json'


""" Function definitions """

@pytest.fixture(scope='module')
def schema():
    with open(SCHEMA_PATH, encoding='utf-8') as f:
        return json.load(f)


def run_json(capsys, schema, *argv):
    code = cli_utility.main(list(argv) + ['--format', 'json', '--quiet'])
    payload = json.loads(capsys.readouterr().out)
    jsonschema.validate(payload, schema)
    return code, payload


""" Tests """

def test_stirling_row(capsys, schema):
    code, payload = run_json(capsys, schema, 'stirling', '--n', '4')
    assert code == 0
    assert payload['row'] == ['0', '-6', '11', '-6', '1']
    assert payload['schema'] == '1' and payload['command'] == 'stirling'


def test_stirling_text(capsys):
    assert cli_utility.main(['stirling', '--n', '4', '--k', '2']) == 0
    assert 'value: 11' in capsys.readouterr().out


def test_series_coefficients(capsys, schema):
    code, payload = run_json(capsys, schema, 'series', '--expr', 'arccos-ratio', '--terms', '3')
    assert code == 0
    assert payload['coeffs'] == ['1', '-1/6', '2/45', '-1/70']
    assert payload['variable'] == 'x-1'


def test_series_comparison(capsys, schema):
    code, payload = run_json(capsys, schema, 'series', '--expr', 'arcsin-pow', '--k', '2',
                             '--terms', '30', '--eval', '1/2', '--digits', '25')
    assert code == 0
    assert payload['comparison']['passed']
    assert payload['comparison']['x'] == '1/2'


def test_series_tolerance(capsys, schema):
    code, payload = run_json(capsys, schema, 'series', '--expr', 'arcsin-pow', '--terms', '4',
                             '--eval', '1/2', '--tol', '1/10000000000')
    assert code == 0
    assert payload['comparison']['terms'] in (16, 32)
    assert payload['comparison']['passed']


def test_series_tolerance_needs_point(capsys):
    assert cli_utility.main(['series', '--expr', 'arcsin-pow', '--tol', '1/100']) == 2


def test_odd_power_not_expandable(capsys):
    assert cli_utility.main(['series', '--expr', 'odd-pow', '--k', '1']) == 2
    assert 'cannot be expanded' in capsys.readouterr().err


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        cli_utility.main(['stirling', '--bogus'])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        cli_utility.main([])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        cli_utility.main(['bell', '--n', '3', '--k', '1', '--args', '1,x'])
    assert info.value.code == 1


def test_domain_error_exit(capsys):
    assert cli_utility.main(['stirling', '--n', '3', '--k', '5']) == 2
    assert 'DomainError' in capsys.readouterr().err


def test_verify_exit_codes(capsys, schema, monkeypatch):
    code, payload = run_json(capsys, schema, 'verify', 'q', '--max', '6')
    assert code == 0 and payload['passed']
    assert payload['counterexamples'] == []

    def failing(*args, **kwargs):
        report = CheckReport('q_closed_forms')
        report.record(3, 1, 2)
        return [report]

    monkeypatch.setattr(verify_utility, 'run_suite', failing)
    code, payload = run_json(capsys, schema, 'verify', 'q')
    assert code == 3
    assert payload['counterexamples'][0]['case'] == '0003'


def test_inconsistency_exit(capsys, monkeypatch):
    monkeypatch.setattr(bell_utility, 'bell_rec', lambda n, k, args: 0)
    assert cli_utility.main(['bell', '--n', '4', '--k', '2', '--args', '1,2,3']) == 4
    assert 'InconsistencyError' in capsys.readouterr().err


def test_pi_partial_sum(capsys, schema):
    code, payload = run_json(capsys, schema, 'pi', '--repr', 'sq8', '--terms', '2')
    assert code == 0
    assert payload['partial_sum'] == '7/6'
    assert payload['target'].startswith('1.2337005501361698')


def test_bell(capsys, schema):
    _, payload = run_json(capsys, schema, 'bell', '--n', '4', '--k', '2', '--values', '1,2,3')
    assert payload['value'] == '24'
    assert payload['methods'] == ['partition', 'rec', 'genfun']
    _, payload = run_json(capsys, schema, 'bell', '--n', '3', '--k', '2', '--values', '1/2,-1/3')
    assert payload['value'] == '-1/2'
    assert payload['args'] == ['1/2', '-1/3']
    _, payload = run_json(capsys, schema, 'bell', '--preset', 'arccos', '--m', '2', '--k', '2')
    assert payload['value'] == '1/36'
    _, payload = run_json(capsys, schema, 'bell', '--preset', 'arccos', '--m', '2', '--k', '1')
    assert payload['value'] == ex.rat_to_str(bell_utility.bell_arccos(2, 1))


def test_bell_aliases(capsys, schema):
    _, payload = run_json(capsys, schema, 'bell', '--n', '4', '--k', '2', '--args', '1,2,3')
    assert payload['value'] == '24'
    _, payload = run_json(capsys, schema, 'bell', '--n', '2', '--k', '2', '--arccos')
    assert payload['value'] == '1/36'


@pytest.mark.parametrize('argv', [
    ['bell', '--k', '2', '--values', '1,2,3'],
    ['bell', '--n', '4', '--k', '2'],
    ['bell', '--preset', 'sin', '--m', '2', '--k', '1'],
    ['bell', '--n', '4', '--k', '2', '--meth', 'rec', '--values', '1,2,3'],
    ['q', '--tab', '3', '3'],
    ['q', '--table', '3'],
    ['series', '--expr', 'even-pow', '--terms', '4', '--eval', '1/2', '--tol', '1/100'],
    ['series', '--expr', 'arcsin-stirling', '--tol', '1/100'],
])
def test_usage_error_codes(argv):
    with pytest.raises(SystemExit) as info:
        cli_utility.main(argv)
    assert info.value.code == 1


def test_q(capsys, schema):
    _, payload = run_json(capsys, schema, 'q', '--k', '2', '--m', '2')
    assert payload['value'] == '-1'
    assert cli_utility.main(['q', '--table', '3', '3', '--format', 'csv']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'k,0,1,2,3'
    assert len(lines) == 4
    assert cli_utility.main(['q', '--k-max', '3', '--m-max', '2', '--format', 'csv']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'k,0,1,2'
    assert len(lines) == 4
    _, payload = run_json(capsys, schema, 'q', '--table', '2', '4')
    assert (payload['k_max'], payload['m_max']) == (2, 4)



def test_diag(capsys, schema):
    _, payload = run_json(capsys, schema, 'diag', 'oracle', '--func', 'arcsin', '--x', '1/2', '--digits', '20')
    assert payload['value'].startswith('0.5235987755982988')
    assert cli_utility.main(['diag', 'q-rest', '--k', '2', '--terms', '3', '--format', 'csv']) == 0
    assert capsys.readouterr().out.splitlines()[0] == 'j,1,2,3'


def test_out_file(capsys, tmp_path):
    target = tmp_path / 'row.json'
    assert cli_utility.main(['stirling', '--n', '3', '--format', 'json', '--out', str(target)]) == 0
    assert capsys.readouterr().out == ''
    assert json.loads(target.read_text(encoding='utf-8'))['row'] == ['0', '2', '-3', '1']
