# -*- coding: utf-8 -*-
"""Registry points and the node process."""
import pytest

from mookit.distrib.__main__ import get_parser
from mookit.foundation.registry import register_builtin, register_dumper, register_protocol
from mookit.foundation.report import Reporter
from mookit.foundation.transform import Transformer
from mookit.interface import compile_source, explain
from mookit.runtime.builtins import NATIVE_TABLE, NativeClass, Sys
from mookit.runtime.interpreter import DEFAULT_STEP_BUDGET, run_program
from mookit.utilities.exceptions import RegistryError
from mookit.utilities.warnings import ProtocolWarning, ReportWarning

from conftest import corpus


class Dice(NativeClass):
    """Loaded dice."""

    def static_roll(self, interp):  # pylint: disable=unused-argument
        return 6


@pytest.fixture
def registries(monkeypatch):
    """Registries restored after each test."""
    monkeypatch.setattr(Transformer, '__protocol__', Transformer.__protocol__.copy())
    monkeypatch.setattr(Reporter, '__output__', Reporter.__output__.copy())
    monkeypatch.setitem(NATIVE_TABLE, 'Sys', NATIVE_TABLE['Sys'])
    monkeypatch.setitem(NATIVE_TABLE, 'Dice', NativeClass())


def test_register_builtin(registries):
    register_builtin('Dice', Dice)
    assert isinstance(NATIVE_TABLE['Dice'], Dice)

    checked = compile_source('''
        builtin class Dice { static int roll(); }
        class Main { public static void main() { print(Dice.roll()); } }
    ''')
    assert run_program(checked) == ['6']


@pytest.mark.parametrize('name, native', [
    ('Dice', object),
    ('Dice', 'Dice'),
    ('not a name', Dice),
])
def test_register_builtin_rejects(registries, name, native):
    with pytest.raises(RegistryError):
        register_builtin(name, native)


def test_register_builtin_instance(registries):
    register_builtin('Sys', Sys())
    assert isinstance(NATIVE_TABLE['Sys'], Sys)


def test_register_protocol(registries, running_example):
    register_protocol('ALT', 'mookit.distrib.wire', 'RAFCodec')
    family = Transformer(running_example, ['RAF', 'ALT']).family('X')
    assert [decl.name for decl in family.proxies] == [
        'X_O_Proxy_RAF', 'X_C_Proxy_RAF', 'X_O_Proxy_ALT', 'X_C_Proxy_ALT',
    ]

    with pytest.warns(ProtocolWarning):
        register_protocol('ALT', 'mookit.distrib.wire', 'RAFCodec')


@pytest.mark.parametrize('protocol, module, class_', [
    ('not-a-name', 'mookit.distrib.wire', 'RAFCodec'),
    ('ALT', 'mookit.distrib.wire', 'Message'),
])
def test_register_protocol_rejects(registries, protocol, module, class_):
    with pytest.raises(RegistryError):
        register_protocol(protocol, module, class_)


def test_register_dumper(registries, tmp_path):
    register_dumper('text', 'dictdumper', 'Tree', '.text')
    path = Reporter.dump(explain(corpus('native')), str(tmp_path), 'text')
    assert path == str(tmp_path / 'native.report.text')

    with pytest.raises(RegistryError):
        register_dumper('trace', 'mookit.runtime.values', 'Trace', '.txt')


def test_unknown_report_format(registries, tmp_path):
    with pytest.warns(ReportWarning):
        assert Reporter.dump(explain(corpus('native')), str(tmp_path), 'yaml') is None


def test_node_parser():
    args = get_parser().parse_args(['--manifest', 'deploy.json', '--node', 'n2', 'program.moo'])
    assert (args.manifest, args.node, args.source) == ('deploy.json', 'n2', 'program.moo')
    assert args.step_budget == DEFAULT_STEP_BUDGET

    with pytest.raises(SystemExit):
        get_parser().parse_args(['program.moo'])
