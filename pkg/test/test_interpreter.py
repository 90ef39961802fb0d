# -*- coding: utf-8 -*-
"""Reference interpreter."""
import sys

import pytest

from mookit.interface import compile_source, load, run, transform
from mookit.runtime.interpreter import Interpreter, run_program, trace_equal
from mookit.runtime.values import Trace, divide, remainder, render, wrap
from mookit.utilities.exceptions import (FinalFieldWrite, MooRuntimeError, NativeError, NullDereference,
                                         StepBudgetExceeded)

from conftest import corpus

TRACES = {
    'running_example': ['6', '6', '41'],
    'sharing': ['12', '12', 'true'],
    'static_counter': ['one got 1', 'one got 2', 'two got 3', 'two got 4', 'two got 5', 'one got 6', '6'],
    'builtins': ['MiniOO 1.0', '43', 'hi ann;hi bo;', '13', '15', '7', '9', '108301'],
    'native': ['24', 'hello, moo', '110'],
    'linked_list': ['5', '15', '5', '1', '2'],
    'mutual_recursion': ['true', 'false', 'true'],
    'clinit_chain': ['41', '40', '20'],
    'short_circuit': ['0', 'short', '0', 'second failed', '2', '5', '8'],
    'inheritance': ['blob of area 0', 'rect of area 6', 'square of area 16', '10'],
    'clinit_probe': ['14', '14', '7', '1'],
    'checkpoint': ['6', '10'],
    'bank': ['true', 'false', 'true', 'alice: 120', 'bob: 0', '2', '80'],
    'stack': ['6', '55', '0'],
    'strings': ['Ada Lovelace', 'true', 'false', 'n=3true4', 'tab\tquote"end'],
    'overflow': ['-2147483648', '0', '4294967296', '-9223372036854775808', '-3', '-1', '1'],
    'nulls': ['true', '0', '0', 'false', 'true', 'false', 'true', 'true'],
    'final_fields': ['cfg24', 'true', 'false', '3'],
    'visibility': ['16', '6'],
    'callbacks': ['4', 'job0;job1;job2;job0;', '4', '4'],
    'queue_sim': ['2', '19', '0'],
    'statics_mixed': ['none', 'b#2', '2', 'true', '1'],
    'default_entry': ['2', '1'],
}


def main(body, extra=''):
    return compile_source(f'{extra}\nclass Main {{ public static void main() {{ {body} }} }}')


@pytest.mark.parametrize('name, expected', sorted(TRACES.items()))
def test_trace(name, expected):
    assert run(corpus(name)) == expected


@pytest.mark.parametrize('name, expected', sorted(TRACES.items()))
def test_transformed_trace(name, expected):
    assert run(transform(corpus(name)).checked) == expected


def test_fibonacci():
    trace = run(corpus('fibonacci'))
    assert trace[0] == '55'
    assert trace[1] == '12586269025'


def test_dispatch():
    assert run(corpus('dispatch'))[0].startswith('woofmeowmeowyip')


def test_write_trace(tmp_path):
    path = tmp_path / 'trace.txt'
    run(corpus('running_example'), path)
    assert path.read_text() == '6\n6\n41\n'


def test_run_program(running_example):
    trace = run_program(running_example)
    assert isinstance(trace, Trace)
    assert trace == ['6', '6', '41']
    assert str(trace) == '6\n6\n41\n'


def test_trace_equal():
    assert trace_equal(Trace(['a', 'b']), ['a', 'b'])
    assert not trace_equal(Trace(['a']), ['a', 'b'])
    assert not trace_equal(['a', 'c'], ['a', 'b'])


##############################################################################
# Runtime errors.
##############################################################################

def test_null_dereference():
    checked = main('print(1); Box b = null; print(b.v);', 'class Box { int v; }')
    trace = Trace()
    with pytest.raises(NullDereference) as info:
        Interpreter(checked, trace=trace).run()
    assert trace == ['1']
    assert info.value.pos is not None


def test_null_call():
    checked = main('Box b = null; b.f();', 'class Box { void f() { } }')
    with pytest.raises(NullDereference):
        run_program(checked)


def test_step_budget():
    checked = main('int i = 0; while (true) { i = i + 1; }')
    with pytest.raises(StepBudgetExceeded):
        run_program(checked, step_budget=1000)


def test_deep_recursion():
    checked = main('print(Deep.down(0));', 'class Deep { static int down(int n) { return down(n + 1); } }')
    with pytest.raises(MooRuntimeError):
        run_program(checked, step_budget=10**9)


@pytest.mark.parametrize('depth', [150, 1000, 5000])
def test_recursion_within_budget(depth):
    checked = main(f'print(Deep.down({depth}));',
                   'class Deep { static int down(int n) { if (n == 0) return 0; return 1 + down(n - 1); } }')
    assert run_program(checked) == [str(depth)]


def test_recursion_limit_restored():
    limit = sys.getrecursionlimit()
    run_program(main('print(1);'))
    assert sys.getrecursionlimit() == limit


@pytest.mark.parametrize('expr', ['1 / 0', '1 % 0', '5L / 0L'])
def test_division_by_zero(expr):
    checked = main(f'int z = 0; print({expr});')
    with pytest.raises(MooRuntimeError, match='division by zero'):
        run_program(checked)


def test_missing_native():
    checked = main('print(Odd.f());', 'class Odd { static native int f(); }')
    with pytest.raises(NativeError):
        run_program(checked)


def test_final_field_after_seal():
    checked = transform(corpus('final_fields')).checked
    interp = Interpreter(checked)
    obj = interp.instantiate('Config_O_Local')
    interp.invoke(obj, 'set_id', [7])
    interp.seal(obj)
    assert obj.sealed
    with pytest.raises(FinalFieldWrite):
        interp.invoke(obj, 'set_id', [8])
    assert obj.fields['id'] == 7


def test_error_exit_code():
    assert NullDereference.exit_code == 2
    assert StepBudgetExceeded.exit_code == 2


##############################################################################
# Semantics.
##############################################################################

def test_static_init_runs_once():
    checked = main('print(Lazy.v); print(Lazy.v);', '''
        class Lazy {
            static int v;
            static { print("init"); v = 7; }
        }
    ''')
    assert run_program(checked) == ['init', '7', '7']


def test_static_init_is_lazy():
    checked = main('print("first"); print(Lazy.v);', '''
        class Lazy {
            static int v;
            static { print("init"); v = 7; }
        }
    ''')
    assert run_program(checked) == ['first', 'init', '7']


def test_left_to_right():
    checked = main('print(Order.at(1) - Order.at(2));', '''
        class Order {
            static int at(int n) { print(n); return n; }
        }
    ''')
    assert run_program(checked) == ['1', '2', '-1']


def test_defaults():
    checked = main('Holder h = new Holder(); print(h.i); print(h.b); print(h.s + "|"); print(h.o == null);',
                   'class Holder { int i; bool b; string s; Holder o; }')
    assert run_program(checked) == ['0', 'false', '|', 'true']


@pytest.mark.parametrize('value, type_, expected', [
    (2**31, 'int', -2**31),
    (-2**31 - 1, 'int', 2**31 - 1),
    (2**31, 'long', 2**31),
    (2**63, 'long', -2**63),
    (-1, 'int', -1),
])
def test_wrap(value, type_, expected):
    assert wrap(value, type_) == expected


@pytest.mark.parametrize('left, right, quotient, rest', [
    (7, 2, 3, 1),
    (-7, 2, -3, -1),
    (7, -2, -3, 1),
    (-7, -2, 3, -1),
])
def test_truncating_division(left, right, quotient, rest):
    assert divide(left, right) == quotient
    assert remainder(left, right) == rest


def test_render():
    assert render(True) == 'true'
    assert render(False) == 'false'
    assert render(None) == 'null'
    assert render(-3) == '-3'
    assert render('x') == 'x'


def test_load_then_run():
    checked = load(corpus('visibility'))
    assert Interpreter(checked).run() == ['16', '6']
