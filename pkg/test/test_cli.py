# -*- coding: utf-8 -*-
"""Command line driver."""
import os

import pytest

import mookit.__main__ as cli
from mookit.__main__ import main
from mookit.const.exit_code import ExitCode
from mookit.utilities.exceptions import TransportError

from conftest import corpus, manifest


def test_transform_stdout(capsys):
    assert main(['transform', corpus('running_example')]) == ExitCode.OK
    out = capsys.readouterr().out
    assert out.startswith('entry Main_C_Factory.main;')
    assert 'class X_O_Local implements X_O_Int {' in out
    assert 'interface X_C_Int {' in out


def test_transform_out(tmp_path):
    assert main(['transform', corpus('native'), '--out', str(tmp_path), '--format', 'tree']) == ExitCode.OK
    assert os.path.isfile(tmp_path / 'native.moo')
    assert os.path.isfile(tmp_path / 'native.report.txt')


def test_transform_unknown_protocol():
    assert main(['transform', corpus('sharing'), '--protocols', 'RAF,SOAP']) == ExitCode.FRONTEND


def test_explain(capsys, tmp_path):
    assert main(['explain', corpus('native'), '--out', str(tmp_path)]) == ExitCode.OK
    out = capsys.readouterr().out
    assert out.startswith('native: 4 classes, 2 non-transformable (50.00%)')
    assert os.path.isfile(tmp_path / 'native.report.json')


def test_run(capsys, tmp_path):
    out = tmp_path / 'trace.txt'
    assert main(['run', corpus('running_example'), '--out', str(out)]) == ExitCode.OK
    assert capsys.readouterr().out == '6\n6\n41\n'
    assert out.read_text() == '6\n6\n41\n'


def test_run_dist(capsys):
    assert main(['run-dist', corpus('sharing'), '--manifest', manifest('sharing')]) == ExitCode.OK
    assert capsys.readouterr().out == '12\n12\ntrue\n'


def test_check_equiv(tmp_path):
    assert main(['check-equiv', corpus('bank')]) == ExitCode.OK
    assert main(['check-equiv', corpus('sharing'), '--manifest', manifest('sharing')]) == ExitCode.OK

    assert main(['transform', corpus('sharing'), '--out', str(tmp_path)]) == ExitCode.OK
    assert main(['check-equiv', corpus('sharing'), str(tmp_path / 'sharing.moo')]) == ExitCode.OK


def test_mismatch(tmp_path, capsys):
    assert main(['transform', corpus('running_example'), '--out', str(tmp_path)]) == ExitCode.OK
    capsys.readouterr()
    code = main(['check-equiv', corpus('sharing'), str(tmp_path / 'running_example.moo')])
    assert code == ExitCode.MISMATCH
    out = capsys.readouterr().out
    assert '--- original' in out and '+++ transformed' in out


def test_missing_file(capsys):
    assert main(['run', 'no/such/program.moo']) == ExitCode.FRONTEND
    assert 'no such file' in capsys.readouterr().err
    assert main(['run-dist', corpus('sharing'), '--manifest', 'missing.json']) == ExitCode.FRONTEND


@pytest.mark.parametrize('source', [
    'class A { int f( }',
    'class A { void f() { undefined(); } }',
    'class A_O_Local { }',
])
def test_frontend_errors(tmp_path, source):
    path = tmp_path / 'bad.moo'
    path.write_text(source)
    assert main(['run', str(path)]) == ExitCode.FRONTEND
    assert main(['transform', str(path)]) == ExitCode.FRONTEND


def test_runtime_error(tmp_path, capsys, caplog):
    path = tmp_path / 'null.moo'
    path.write_text('''
        class Box { int v; }
        class Main {
            public static void main() {
                print("before");
                Box b = null;
                print(b.v);
            }
        }
    ''')
    assert main(['run', str(path)]) == ExitCode.RUNTIME
    assert capsys.readouterr().out == 'before\n'
    assert 'NullDereference' in caplog.text


def test_step_budget(tmp_path):
    path = tmp_path / 'loop.moo'
    path.write_text('class Main { public static void main() { while (true) { } } }')
    assert main(['run', str(path), '--step-budget', '100']) == ExitCode.RUNTIME


def test_transport_error(monkeypatch, capsys):
    def broken(*args, **kwargs):
        kwargs['trace'].append('partial')
        raise TransportError('node n2 is unreachable')

    monkeypatch.setattr(cli, 'run_dist', broken)
    code = main(['run-dist', corpus('sharing'), '--manifest', manifest('sharing')])
    assert code == ExitCode.TRANSPORT
    assert capsys.readouterr().out == 'partial\n'


def test_killed_node_exit_code(tmp_path, capsys, monkeypatch):
    path = tmp_path / 'manifest.json'
    # n2 is listed but nothing serves it; the entry gives up connecting.
    path.write_text('{"nodes": {"n1": "127.0.0.1:0", "n2": "127.0.0.1:9"}, "transport": "tcp",'
                    ' "mode": "process", "placement": {"C": "n2"}, "timeout": 2}')
    monkeypatch.setattr('mookit.distrib.deployment.Deployment._spawn', lambda self, names: None)
    code = main(['run-dist', corpus('sharing'), '--manifest', str(path)])
    assert code == ExitCode.TRANSPORT
    assert capsys.readouterr().out.splitlines()[-1].startswith('#TRANSPORT-FAILURE')


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(['--version'])
    assert info.value.code == 0
    assert capsys.readouterr().out.strip()
