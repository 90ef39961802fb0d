# -*- coding: utf-8 -*-
"""Transformability analysis."""
import random

import pytest

from mookit.const.rule import Rule
from mookit.foundation.report import make_report, render_report
from mookit.foundation.transformable import compute_transformable_set, references
from mookit.interface import compile_source, explain, load

from conftest import corpus

FIXTURE = '''
builtin class Sys { static string version(); }

class Leaf { int v; }

class Base {
    Leaf leaf;
}

class Pinned extends Base {
    native int probe();
}

class User {
    Pinned pinned;
    int go() { return pinned.probe(); }
}

class Free {
    Leaf leaf;
    string name() { return Sys.version(); }
}
'''


def rules(tset, name):
    return {why.rule for why in tset.reasons[name]}


def test_fixture_partition():
    tset = compute_transformable_set(compile_source(FIXTURE))
    assert tset.non_transformable == {'Sys', 'Pinned', 'Base', 'Leaf'}
    assert tset.transformable == {'User', 'Free'}
    assert tset.order == ('Sys', 'Leaf', 'Base', 'Pinned', 'User', 'Free')
    assert rules(tset, 'Sys') == {Rule.BUILTIN}
    assert rules(tset, 'Pinned') == {Rule.NATIVE_METHOD}
    assert rules(tset, 'Base') == {Rule.SUPERCLASS_RULE}
    assert rules(tset, 'Leaf') == {Rule.REFERENCED_BY_RULE}
    assert tset.percentage == pytest.approx(100.0 * 4 / 6)


def test_reference_rule_is_one_way():
    tset = compute_transformable_set(compile_source(FIXTURE))
    # User and Free refer to excluded classes and stay transformable.
    assert tset.is_transformable('User')
    assert tset.is_transformable('Free')


def test_references_in_bodies():
    checked = compile_source('''
        class A { static int k; }
        class B { }
        class C { }
        class D {
            void f() {
                B b = null;
                C c = new C();
                print(A.k);
            }
        }
    ''')
    decl = checked.table.classes['D']
    assert references(decl, {'A', 'B', 'C', 'D'}) == ['B', 'C', 'A']


def test_native_corpus():
    tset = compute_transformable_set(load(corpus('native')))
    assert tset.non_transformable == {'Native', 'Helper'}
    assert tset.transformable == {'Calc', 'Main'}
    assert rules(tset, 'Native') == {Rule.NATIVE_METHOD}
    assert rules(tset, 'Helper') == {Rule.REFERENCED_BY_RULE}


def test_running_example_fully_transformable(running_example):
    tset = compute_transformable_set(running_example)
    assert tset.non_transformable == frozenset()
    assert tset.percentage == 0.0


def test_report():
    report = explain(corpus('native'))
    assert report.program == 'native'
    assert report.total == 4
    assert report.non_transformable == ('Helper', 'Native')
    assert report.transformable == ('Calc', 'Main')
    assert report.percentage == 50.0
    assert report.reasons['Native'] == (('native-method', 'Native.twice'), ('native-method', 'Native.greet'))
    assert report.reasons['Helper'] == (('referenced-by-rule', 'referenced by Native'),)

    text = render_report(report)
    assert text.startswith('native: 4 classes, 2 non-transformable (50.00%)')
    assert '  Native (native-method: Native.twice; native-method: Native.greet)' in text


def test_report_defaults():
    tset = compute_transformable_set(compile_source(FIXTURE))
    report = make_report(tset)
    assert report.program == '<program>'
    assert report.total == 6


##############################################################################
# Random graphs against a brute-force closure.
##############################################################################

def random_program(rng, size):
    natives = set()
    supers = {}
    fields = {}
    lines = []
    for index in range(size):
        head = f'class C{index}'
        if index and rng.random() < 0.3:
            supers[index] = rng.randrange(index)
            head += f' extends C{supers[index]}'
        fields[index] = sorted({rng.randrange(size) for _ in range(rng.randrange(3))})
        body = [f'    C{target} f{index}x{target};' for target in fields[index]]
        if rng.random() < 0.15:
            natives.add(index)
            body.append(f'    native int probe{index}();')
        lines.append(head + ' {')
        lines.extend(body)
        lines.append('}')
    return '\n'.join(lines) + '\n', natives, supers, fields


def brute_force(size, natives, supers, fields):
    excluded = set(natives)
    changed = True
    while changed:
        changed = False
        for index in range(size):
            if index not in excluded:
                continue
            edges = set(fields[index]) - {index}
            if index in supers:
                edges.add(supers[index])
            for other in edges - excluded:
                excluded.add(other)
                changed = True
    return {f'C{index}' for index in excluded}


@pytest.mark.parametrize('seed', range(100))
def test_random_closure(seed):
    rng = random.Random(seed)
    size = rng.randrange(1, 12)
    source, natives, supers, fields = random_program(rng, size)
    tset = compute_transformable_set(compile_source(source))

    expected = brute_force(size, natives, supers, fields)
    assert tset.non_transformable == expected
    assert tset.transformable == {f'C{index}' for index in range(size)} - expected
    assert tset.percentage == pytest.approx(100.0 * len(expected) / size)
    for name in expected:
        assert tset.reasons[name]
