# -*- coding: utf-8 -*-
"""Front end: static checking."""
import pytest

from mookit.interface import compile_source
from mookit.lang import ast
from mookit.runtime.interpreter import run_program
from mookit.utilities.exceptions import (ArityError, CheckError, DuplicateDeclaration, ReservedName,
                                         TypeMismatch, UnresolvedName, VisibilityError)

from conftest import PROGRAMS


def _main(body: 'str', extra: 'str' = '') -> 'str':
    return f'{extra}\nclass Main {{ public static void main() {{ {body} }} }}'


def test_resolution(running_example):
    decl = running_example.program.lookup('X')
    (ret,) = decl.method('m').body.stmts
    call = ret.value
    assert isinstance(call, ast.Call)
    assert call.owner == 'Y' and call.type == 'int'
    assert isinstance(call.target, ast.FieldGet) and call.target.owner == 'X'
    assert isinstance(call.target.target, ast.This)

    clinit = decl.static_init.stmts[0]
    assert isinstance(clinit.target, ast.StaticGet) and clinit.target.owner == 'X'
    (arg,) = clinit.value.args
    assert isinstance(arg, ast.StaticGet) and arg.owner == 'Y' and arg.type == 'long'


def test_source_kept(running_example):
    assert running_example.source.lookup('X') is not None
    assert not running_example.generated
    assert running_example.table.is_class('Z')


def test_widening():
    compile_source(_main('long x = 1; x = x + 2; print(x);'))
    with pytest.raises(TypeMismatch):
        compile_source(_main('int x = 1L;'))


def test_null_comparison():
    compile_source(_main('A a = new A(); print(a == null); print(null != a);', 'class A { }'))
    with pytest.raises(TypeMismatch):
        compile_source(_main('A a = new A(); A b = a; print(a == b);', 'class A { }'))


@pytest.mark.parametrize('source, error', [
    (_main('Nope n = null;'), UnresolvedName),
    (_main('int x = y;'), UnresolvedName),
    (_main('int x = true;'), TypeMismatch),
    (_main('print(new A());', 'class A { }'), TypeMismatch),
    (_main('if (1) { }'), TypeMismatch),
    (_main('int x = 1; int x = 2;'), DuplicateDeclaration),
    (_main('1 + 2;'), TypeMismatch),
    (_main('int x = 2147483648;'), TypeMismatch),
    (_main('int x = -2147483649;'), TypeMismatch),
    (_main('long x = -9223372036854775809L;'), TypeMismatch),
    (_main('int x = 1 - 2147483648;'), TypeMismatch),
    (_main('A.f(1);', 'class A { static void f() { } }'), ArityError),
    (_main('new A(1);', 'class A { }'), ArityError),
    (_main('int v = new A().v;', 'class A { private int v; }'), VisibilityError),
    (_main('new A().f();', 'class A { private void f() { } }'), VisibilityError),
    (_main('int v = new A().v;', 'class A { protected int v; }'), VisibilityError),
    (_main('', 'class A { int f() { if (true) { return 1; } } }'), TypeMismatch),
    (_main('', 'class A { void f() { return 1; } }'), TypeMismatch),
    (_main('', 'class A { static int v; static int f() { return this.v; } }'), CheckError),
    (_main('', 'class A { final int v; void f() { v = 1; } }'), CheckError),
    (_main('', 'class A { static final int v; static void f() { v = 1; } }'), CheckError),
    (_main('', 'class A { void f() { super(); } }'), CheckError),
    (_main('', 'class A { int v; } class B extends A { int v; }'), DuplicateDeclaration),
    (_main('', 'class A { int f() { return 1; } } class B extends A { long f() { return 1L; } }'), TypeMismatch),
    (_main('', 'class A extends B { } class B extends A { }'), CheckError),
    (_main('', 'class A extends Nope { }'), UnresolvedName),
    (_main('', 'builtin class Sys { } class A extends Sys { }'), CheckError),
    (_main('', 'builtin class Sys { static int f() { return 1; } }'), CheckError),
    (_main('', 'builtin class Sys { static native int f(); }'), CheckError),
    (_main('', 'class A { native int f() { return 1; } }'), CheckError),
    (_main('', 'class A { int f(); }'), CheckError),
    (_main('', 'class A_O_Int { }'), ReservedName),
    (_main('', 'class A { int get_v() { return 1; } }'), ReservedName),
    (_main('', 'class A { int $v; }'), ReservedName),
    (_main('', 'class A implements B { } interface B { }'), ReservedName),
    (_main('A a = @policy_create("A");', 'class A { }'), ReservedName),
])
def test_rejected(source, error):
    with pytest.raises(error):
        compile_source(source)


@pytest.mark.parametrize('source', [
    'entry Main.main;\nclass Main { static void main(int x) { } }',
    'entry Main.main;\nclass Main { private static void main() { } }',
    'entry Main.run;\nclass Main { static void main() { } }',
])
def test_entry_rules(source):
    with pytest.raises(CheckError):
        compile_source(source)


def test_protected_from_subclass():
    compile_source(_main('print(new B().f());',
                         'class A { protected int v; } class B extends A { int f() { return v; } }'))


def test_final_in_constructor_and_static_init():
    compile_source(_main('print(new A(3).v + A.K);',
                         'class A { final int v; static final int K; static { K = 1; } A(int v) { this.v = v; } }'))


def test_most_negative_literals():
    checked = compile_source(_main('int i = -2147483648; long l = -9223372036854775808L; print(i); print(l);'))
    (local, _, _, _) = checked.program.lookup('Main').method('main', static=True).body.stmts
    assert isinstance(local.init, ast.Unary) and local.init.type == 'int'
    assert run_program(checked) == ['-2147483648', '-9223372036854775808']


def test_error_position():
    with pytest.raises(TypeMismatch) as info:
        compile_source('class Main {\n  public static void main() {\n    int x = true;\n  }\n}\n')
    assert info.value.pos[0] == 3


@pytest.mark.parametrize('path', PROGRAMS)
def test_corpus_checks(path):
    with open(path, 'rb') as file:
        checked = compile_source(file.read())
    assert not checked.generated
