# -*- coding: utf-8 -*-
"""Front end: pretty printing."""
import pytest

from mookit.interface import compile_source, transform
from mookit.lang import ast
from mookit.lang.parser import parse_program
from mookit.lang.printer import pretty_print, print_expr

from conftest import PROGRAMS, corpus


@pytest.mark.parametrize('path', PROGRAMS)
def test_source_roundtrip(path):
    with open(path, 'rb') as file:
        program = parse_program(file.read())
    assert parse_program(pretty_print(program)) == program


def test_resolved_roundtrip(running_example):
    text = pretty_print(running_example.program)
    again = compile_source(text)
    assert again.program == running_example.program


@pytest.mark.parametrize('name', ['running_example', 'static_counter', 'clinit_chain'])
def test_transformed_roundtrip(name):
    # generated trees hold resolved StaticCall/StaticGet nodes, which the
    # parser reads back as member access on a bare name until checking
    result = transform(corpus(name))
    text = pretty_print(result.program)
    assert pretty_print(parse_program(text)) == text
    assert compile_source(text, generated=True).program == result.checked.program


def test_static_access_reparses_unresolved():
    expr = ast.StaticCall('X_C_Factory', 'discover', ())
    assert print_expr(expr) == 'X_C_Factory.discover()'
    program = parse_program('class A { void f() { X_C_Factory.discover(); } }')
    (stmt,) = program.classes[0].method('f').body.stmts
    assert stmt.expr == ast.Call(ast.Var('X_C_Factory'), 'discover', ())


@pytest.mark.parametrize('expr, text', [
    (ast.Binary('*', ast.Binary('+', ast.Var('a'), ast.Var('b')), ast.Var('c')), '(a + b) * c'),
    (ast.Binary('-', ast.Var('a'), ast.Binary('-', ast.Var('b'), ast.Var('c'))), 'a - (b - c)'),
    (ast.Binary('-', ast.Binary('-', ast.Var('a'), ast.Var('b')), ast.Var('c')), 'a - b - c'),
    (ast.Unary('!', ast.Binary('&&', ast.Var('p'), ast.Var('q'))), '!(p && q)'),
    (ast.Literal(5, 'long'), '5L'),
    (ast.Literal('a"b\n', 'string'), '"a\\"b\\n"'),
    (ast.Literal(None, 'null'), 'null'),
    (ast.Call(ast.New('A', ()), 'f', (ast.Literal(1, 'int'),)), 'new A().f(1)'),
    (ast.Intrinsic('policy_create', (ast.Literal('A', 'string'),)), '@policy_create("A")'),
])
def test_expressions(expr, text):
    assert print_expr(expr) == text
