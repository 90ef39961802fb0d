# -*- coding: utf-8 -*-
"""Transformation engine."""
import os

import pytest

from mookit.const.rule import Rule
from mookit.foundation.transform import HANDLE, Transformer, transform_program
from mookit.foundation.transformable import Justification, compute_transformable_set
from mookit.interface import compile_source, load, transform
from mookit.lang import ast
from mookit.lang.checker import check_program
from mookit.lang.parser import parse_program
from mookit.lang.printer import pretty_print
from mookit.runtime.interpreter import run_program
from mookit.utilities.exceptions import TransformError, UnknownProtocol

from conftest import PROGRAMS, corpus

RUNNING_EXAMPLE_FAMILY = '''
class X_O_Local implements X_O_Int {
    private Y_O_Int y;
    public X_O_Local() { }
    public Y_O_Int get_y() {
        return y;
    }
    public void set_y(Y_O_Int y) {
        this.y = y;
    }
    public int m(long j) {
        return get_y().n(j);
    }
}

class X_C_Local implements X_C_Int {
    private Z_O_Int z;
    public static X_C_Int me;
    static {
        me = new X_C_Local();
    }
    public X_C_Local() { }
    public Z_O_Int get_z() {
        return z;
    }
    public void set_z(Z_O_Int z) {
        this.z = z;
    }
    public int p(int i) {
        return get_z().q(i);
    }
    public static X_C_Int get_me() {
        return me;
    }
}

class X_O_Factory {
    public static X_O_Int make() {
        return @policy_create("X");
    }
    public static void init(X_O_Int that, Y_O_Int y) {
        that.set_y(y);
    }
}

class X_C_Factory {
    public static X_C_Int discover() {
        return @policy_discover("X");
    }
    public static void clinit(X_C_Int that) {
        Z_O_Int $t0 = Z_O_Factory.make();
        Z_O_Factory.init($t0, Y_C_Factory.discover().get_K());
        that.set_z($t0);
    }
}

class X_O_Proxy_RAF implements X_O_Int {
    public ref $handle;
    public X_O_Proxy_RAF() { }
    public Y_O_Int get_y() {
        return @remote_invoke(this.$handle, "get_y");
    }
    public void set_y(Y_O_Int y) {
        @remote_invoke(this.$handle, "set_y", y);
    }
    public int m(long j) {
        return @remote_invoke(this.$handle, "m", j);
    }
}

class X_C_Proxy_RAF implements X_C_Int {
    public ref $handle;
    public X_C_Proxy_RAF() { }
    public Z_O_Int get_z() {
        return @remote_invoke(this.$handle, "get_z");
    }
    public void set_z(Z_O_Int z) {
        @remote_invoke(this.$handle, "set_z", z);
    }
    public int p(int i) {
        return @remote_invoke(this.$handle, "p", i);
    }
}

interface X_O_Int {
    Y_O_Int get_y();
    void set_y(Y_O_Int y);
    int m(long j);
}

interface X_C_Int {
    Z_O_Int get_z();
    void set_z(Z_O_Int z);
    int p(int i);
}
'''


def printed(classes, interfaces=()):
    """Program text of some declarations, parsed back."""
    return parse_program(pretty_print(ast.Program(tuple(classes), tuple(interfaces))))


def test_running_example_family(running_example):
    family = Transformer(running_example, ['RAF']).family('X')
    actual = printed(family.classes, family.interfaces)
    expected = parse_program(RUNNING_EXAMPLE_FAMILY)
    assert actual.classes == expected.classes
    assert actual.interfaces == expected.interfaces


def test_family_names(running_example):
    family = Transformer(running_example, ['RAF']).family('Y')
    assert family.instance_interface.name == 'Y_O_Int'
    assert family.static_interface.name == 'Y_C_Int'
    assert [decl.name for decl in family.classes] == [
        'Y_O_Local', 'Y_C_Local', 'Y_O_Factory', 'Y_C_Factory', 'Y_O_Proxy_RAF', 'Y_C_Proxy_RAF',
    ]
    # Y's static initialiser becomes clinit, its constant an accessor pair.
    factory = family.class_factory
    assert [method.name for method in factory.static_methods] == ['discover', 'clinit']
    assert [method.name for method in family.static_interface.methods] == ['get_K', 'set_K']


def test_no_protocols(running_example):
    family = Transformer(running_example).family('X')
    assert family.proxies == ()


def test_members_made_public():
    checked = compile_source('''
        class Safe {
            protected int n;
            private int hidden() { return n; }
            protected static int count() { return 1; }
            public int shown() { return hidden(); }
        }
    ''')
    family = Transformer(checked).family('Safe')
    local, static = family.classes[0], family.classes[1]
    assert {method.visibility for method in local.methods} == {'public'}
    assert {method.visibility for method in static.methods} == {'public'}
    assert {field.visibility for field in local.fields} == {'private'}
    assert 'hidden' in {method.name for method in family.instance_interface.methods}


def test_entry_trampoline(running_example):
    program = transform_program(running_example, ['RAF'])
    assert program.entry == ('Main_C_Factory', 'main')
    factory = next(decl for decl in program.classes if decl.name == 'Main_C_Factory')
    main = factory.method('main', static=True)
    assert main.ret == 'void'
    assert main.body.stmts == (
        ast.ExprStmt(ast.Call(ast.StaticCall('Main_C_Factory', 'discover', ()), 'main', ())),
    )


def test_program_shape(running_example):
    program = transform_program(running_example, ['RAF'])
    names = [decl.name for decl in program.classes]
    assert 'X' not in names and 'Main' not in names
    assert len(names) == 4 * 6
    assert [iface.name for iface in program.interfaces] == [
        'Y_O_Int', 'Y_C_Int', 'Z_O_Int', 'Z_C_Int', 'X_O_Int', 'X_C_Int', 'Main_O_Int', 'Main_C_Int',
    ]
    for decl in program.classes:
        if '_Proxy_' in decl.name:
            assert decl.fields == (ast.FieldDecl(HANDLE, 'ref', visibility='public'),)


def test_self_reference():
    result = transform(corpus('linked_list'))
    iface = next(item for item in result.program.interfaces if item.name == 'Link_O_Int')
    get_next = next(method for method in iface.methods if method.name == 'get_next')
    assert get_next.ret == 'Link_O_Int'
    assert get_next.params == ()
    set_next = next(method for method in iface.methods if method.name == 'set_next')
    assert set_next.params == (ast.Param('next', 'Link_O_Int'),)


def test_inheritance_interfaces():
    result = transform(corpus('inheritance'))
    table = result.checked.table
    for decl in result.program.classes:
        if decl.name.endswith('_O_Local') and decl.superclass is not None:
            assert decl.superclass.endswith('_O_Local')
            base = decl.superclass[:-len('_O_Local')]
            assert f'{base}_O_Int' in table.implemented(decl.name)


@pytest.mark.parametrize('path', PROGRAMS)
def test_output_checks(path):
    result = transform(path)
    assert result.checked.generated
    again = check_program(parse_program(pretty_print(result.program)), generated=True)
    assert again.program == result.checked.program


def test_native_partition():
    result = transform(corpus('native'))
    names = {decl.name for decl in result.program.classes}
    # Pinned classes are emitted as written.
    assert {'Native', 'Helper'} <= names
    assert 'Calc_O_Local' in names and 'Calc' not in names
    calc = next(decl for decl in result.program.classes if decl.name == 'Calc_O_Local')
    text = pretty_print(ast.Program((calc,)))
    assert 'Native.twice(' in text


def test_write_output(tmp_path):
    result = transform(corpus('running_example'), tmp_path)
    assert result.program_file == os.path.join(str(tmp_path), 'running_example.moo')
    assert result.report_file == os.path.join(str(tmp_path), 'running_example.report.json')
    assert load(result.program_file).program == result.checked.program
    assert os.path.isfile(result.report_file)


PINNED_BASE = '''
entry Main.main;

class Base {
    int v;
    native int probe();
    int base() { return v + 1; }
}

class Derived extends Base {
    Helper helper;
    Derived() { helper = new Helper(); }
    int twice() { return helper.dup(base()); }
}

class Helper {
    int dup(int x) { return x * 2; }
}

class Main {
    public static void main() {
        Derived d = new Derived();
        print(d.twice());
    }
}
'''


def test_subclass_of_pinned_class():
    checked = compile_source(PINNED_BASE)
    # the analysis alone keeps Derived transformable
    assert compute_transformable_set(checked).is_transformable('Derived')

    tset = Transformer(checked).tset
    assert tset.non_transformable == {'Base', 'Derived', 'Helper'}
    assert tset.transformable == {'Main'}
    assert tset.reasons['Derived'] == (Justification(Rule.SUBCLASS_RULE, 'Derived extends Base'),)
    assert tset.reasons['Helper'] == (Justification(Rule.REFERENCED_BY_RULE, 'referenced by Derived'),)

    program = transform_program(checked)
    names = {decl.name for decl in program.classes}
    assert {'Base', 'Derived', 'Helper', 'Main_O_Local'} <= names
    assert run_program(checked) == ['2']
    assert run_program(check_program(program, generated=True)) == ['2']


##############################################################################
# Rejected programs.
##############################################################################

def test_extends_native_class():
    checked = compile_source('''
        class Base { native int probe(); }
        class Derived extends Base { }
    ''')
    tset = compute_transformable_set(checked)
    with pytest.raises(TransformError):
        # an explicit partition that keeps Derived transformable
        Transformer(checked, tset=tset).run()


def test_that_shadowing():
    checked = compile_source('''
        class A {
            int v;
            A(int that) { v = that; }
        }
    ''')
    with pytest.raises(TransformError):
        transform_program(checked)

    checked = compile_source('''
        class B {
            static int v;
            static { int that = 1; v = that; }
        }
    ''')
    with pytest.raises(TransformError):
        transform_program(checked)


def test_already_transformed(tmp_path):
    result = transform(corpus('running_example'), tmp_path)
    with pytest.raises(TransformError):
        transform(result.program_file)


def test_unknown_protocol(running_example):
    with pytest.raises(UnknownProtocol):
        Transformer(running_example, ['SOAP'])
    with pytest.raises(UnknownProtocol):
        Transformer(running_example).generate_proxies('X', ['SOAP'])
    with pytest.raises(UnknownProtocol):
        transform(corpus('running_example'), protocols=['SOAP'])


def test_family_parts(running_example):
    transformer = Transformer(running_example, ['RAF'])
    family = transformer.family('Z')
    assert transformer.extract_instance_interface('Z') == family.instance_interface
    assert transformer.extract_static_interface('Z') == family.static_interface
    assert transformer.generate_local_impls('Z') == (family.local_object, family.local_static)
    assert transformer.generate_factories('Z') == (family.object_factory, family.class_factory)

    local = family.local_object
    assert [field.visibility for field in local.fields] == ['private']
    assert [method.name for method in family.instance_interface.methods] == ['get_k', 'set_k', 'q']
    assert family.static_interface.methods == ()
    # only the parameterless constructor survives
    assert [ctor.params for ctor in local.constructors] == [()]
