# -*- coding: utf-8 -*-
"""Front end: parsing."""
import pytest

from mookit.lang import ast
from mookit.lang.parser import decode_source, parse_program
from mookit.utilities.exceptions import DuplicateDeclaration, ParseError

from conftest import PROGRAMS, corpus

SOURCE = '''
entry Main.main;

// a comment
class Point extends Base {
    private final int x;
    static long count;

    static {
        count = 0L;
    }

    Point(int x) {
        super();
        this.x = x;
    }

    public int get() {
        return x * 2 + -1;
    }

    public static native string name();
}
'''


def test_program_shape():
    program = parse_program(SOURCE)
    assert program.entry == ('Main', 'main')
    (point,) = program.classes
    assert point.name == 'Point'
    assert point.superclass == 'Base'
    assert [field.name for field in point.fields] == ['x']
    assert point.fields[0].visibility == 'private' and point.fields[0].is_final
    assert [field.name for field in point.static_fields] == ['count']
    assert point.static_init is not None
    assert point.constructor(1) is not None
    assert point.method('get').visibility == 'public'
    native = point.method('name', static=True)
    assert native.is_native and native.body is None


def test_literals_and_precedence():
    program = parse_program('class A { int f() { return 1 + 2 * 3; } long g() { return 7L; } }')
    body = program.classes[0].method('f').body
    (ret,) = body.stmts
    assert ret.value == ast.Binary('+', ast.Literal(1, 'int'),
                                   ast.Binary('*', ast.Literal(2, 'int'), ast.Literal(3, 'int')))
    (ret,) = program.classes[0].method('g').body.stmts
    assert ret.value == ast.Literal(7, 'long')


def test_postfix_chain():
    program = parse_program('class A { void f() { new B().c.d(1).e(); } }')
    (stmt,) = program.classes[0].method('f').body.stmts
    expr = stmt.expr
    assert isinstance(expr, ast.Call) and expr.name == 'e'
    assert isinstance(expr.target, ast.Call) and expr.target.name == 'd'
    assert isinstance(expr.target.target, ast.FieldGet) and expr.target.target.name == 'c'
    assert isinstance(expr.target.target.target, ast.New)


def test_string_escapes():
    program = parse_program(r'class A { string f() { return "a\tb\"c\\"; } }')
    (ret,) = program.classes[0].method('f').body.stmts
    assert ret.value.value == 'a\tb"c\\'


def test_default_entry():
    program = parse_program(open(corpus('default_entry'), encoding='utf-8').read())
    assert program.entry == ('App', 'main')
    assert parse_program('class A { }').entry is None


def test_syntax_error_position():
    with pytest.raises(ParseError) as info:
        parse_program('class A {\n    int f( {\n}\n')
    assert info.value.pos is not None
    assert info.value.pos[0] == 2


@pytest.mark.parametrize('source', [
    'class A { } class A { }',
    'class A { int x; int x; }',
    'class A { int x; void x() { } }',
    'class A { void f() { } void f() { } }',
])
def test_duplicates(source):
    with pytest.raises(DuplicateDeclaration):
        parse_program(source)


def test_overload_by_arity():
    program = parse_program('class A { void f() { } void f(int a) { } }')
    assert program.classes[0].method('f', arity=1) is not None


def test_decode_source():
    text = 'class A { string s() { return "café"; } }'
    assert decode_source(text.encode('utf-8')) == text
    with pytest.raises(ParseError):
        decode_source('class A { } // café'.encode('utf-16'))


@pytest.mark.parametrize('path', PROGRAMS)
def test_corpus_parses(path):
    with open(path, 'rb') as file:
        program = parse_program(file.read())
    assert program.classes
    assert program.entry is not None


def test_positional_fields_precede_position():
    value = ast.Literal(1, 'int')
    assert ast.Return(value).value == value
    assert ast.Return(value).pos is None
    assert ast.LocalDecl('int', 'x', value).init == value
    assert ast.If(value, ast.Block(()), ast.Block(())).orelse == ast.Block(())
    assert ast.MethodDecl('f', (), 'int', 'private').visibility == 'private'
    assert ast.ClassDecl.__fields__[-1] == 'pos'
    assert ast.FieldGet.__fields__ == ('target', 'name', 'owner', 'type', 'pos')


def test_statements_with_optional_parts():
    program = parse_program('class A { static int f() { int y = 2; if (y > 1) return 1; else { } return y; } }')
    local, cond, ret = program.classes[0].method('f', static=True).body.stmts
    assert local.init == ast.Literal(2, 'int')
    assert cond.orelse == ast.Block(())
    assert ret.value == ast.Var('y')
    assert ret.pos is not None
