# -*- coding: utf-8 -*-
"""Transformability Analysis
===============================

:mod:`mookit.foundation.transformable` computes which classes of a
checked program may be substituted by interfaces, factories and
proxies, and records why the others may not.

The non-transformable set is the least fixpoint of

* seed: builtin classes, and classes declaring a native method;
* a superclass of a non-transformable class is non-transformable;
* a class referenced by a non-transformable class (field types,
  method signatures, bodies) is non-transformable.

The reference rule runs in the stated direction only: merely
referencing a non-transformable class does not exclude a class.

The transformer adds a fourth rule (``pin_subclasses``): a class
extending a non-transformable class is non-transformable as well.

"""
import collections
from typing import TYPE_CHECKING

from mookit.const.rule import Rule
from mookit.corekit.infoclass import Info
from mookit.lang import ast
from mookit.utilities.logging import logger

if TYPE_CHECKING:
    from typing import Iterable, Iterator, Optional

    from mookit.lang.checker import CheckedProgram

__all__ = ['compute_transformable_set', 'references', 'TransformableSet', 'Justification']


class Justification(Info):
    """Reason a class is not transformable."""

    #: Exclusion rule.
    rule: 'Rule'
    #: Offending member or edge.
    detail: 'str'

    if TYPE_CHECKING:
        def __init__(self, rule: 'Rule', detail: 'str') -> 'None': ...  # pylint: disable=unused-argument,super-init-not-called,multiple-statements


class TransformableSet(Info):
    """Partition of the classes of a program."""

    #: Transformable class names.
    transformable: 'frozenset[str]'
    #: Non-transformable class names.
    non_transformable: 'frozenset[str]'
    #: Justifications per non-transformable class.
    reasons: 'dict[str, tuple[Justification, ...]]'
    #: Class names in declaration order.
    order: 'tuple[str, ...]' = ()

    if TYPE_CHECKING:
        def __init__(self, transformable: 'frozenset[str]', non_transformable: 'frozenset[str]', reasons: 'dict[str, tuple[Justification, ...]]', order: 'tuple[str, ...]' = ()) -> 'None': ...  # pylint: disable=unused-argument,super-init-not-called,multiple-statements,line-too-long

    def __hash__(self) -> 'int':
        return hash((self.transformable, self.non_transformable))

    def is_transformable(self, name: 'str') -> 'bool':
        """Check if class ``name`` is transformable."""
        return name in self.transformable

    @property
    def percentage(self) -> 'float':
        """Percentage of non-transformable classes."""
        total = len(self.transformable) + len(self.non_transformable)
        return 100.0 * len(self.non_transformable) / total if total else 0.0


def _type_names(types: 'Iterable[Optional[str]]', classes: 'set[str]') -> 'Iterator[str]':
    for type_ in types:
        if type_ in classes:
            yield type_  # type: ignore[misc]


def _walk(node: 'object') -> 'Iterator[ast.Node]':
    """Yield every syntax node below ``node`` (inclusive)."""
    if isinstance(node, ast.Node):
        yield node
        for key in node.__fields__:
            if key != 'pos':
                yield from _walk(node[key])
    elif isinstance(node, tuple):
        for item in node:
            yield from _walk(item)


def references(decl: 'ast.ClassDecl', classes: 'set[str]') -> 'list[str]':
    """Classes referenced by a class declaration, in order of appearance.

    Args:
        decl: Resolved class declaration.
        classes: Names of all declared classes.

    """
    found = []  # type: list[str]

    def add(names: 'Iterable[str]') -> 'None':
        for name in names:
            if name != decl.name and name not in found:
                found.append(name)

    for field in decl.fields + decl.static_fields:
        add(_type_names([field.type], classes))
    for method in decl.methods + decl.static_methods:
        add(_type_names([method.ret] + [param.type for param in method.params], classes))
    for ctor in decl.constructors:
        add(_type_names([param.type for param in ctor.params], classes))

    bodies = [method.body for method in decl.methods + decl.static_methods]
    bodies += [ctor.body for ctor in decl.constructors] + [decl.static_init]
    for node in _walk(tuple(body for body in bodies if body is not None)):
        if isinstance(node, ast.LocalDecl):
            add(_type_names([node.type], classes))
        elif isinstance(node, (ast.New, ast.StaticGet, ast.StaticCall)):
            add(_type_names([node.cls], classes))
    return found


def compute_transformable_set(checked: 'CheckedProgram', *, pin_subclasses: 'bool' = False) -> 'TransformableSet':
    """Partition the classes of a checked program.

    Args:
        checked: Checked program.
        pin_subclasses: Also exclude every class extending a
            non-transformable class (``subclass-rule``). Its local
            implementation could not inherit from a class kept in
            source form, so the transformer closes over this rule too.

    Returns:
        The transformable / non-transformable partition with the
        justification of every excluded class.

    """
    program = checked.program
    names = {decl.name for decl in program.classes}
    decls = {decl.name: decl for decl in program.classes}
    children = collections.defaultdict(list)  # type: collections.defaultdict[str, list[str]]
    for decl in program.classes:
        if decl.superclass is not None:
            children[decl.superclass].append(decl.name)
    reasons = collections.OrderedDict()  # type: collections.OrderedDict[str, list[Justification]]
    queue = collections.deque()  # type: collections.deque[str]

    def exclude(name: 'str', why: 'Justification') -> 'None':
        if name not in reasons:
            reasons[name] = []
            queue.append(name)
        if why not in reasons[name]:
            reasons[name].append(why)

    for decl in program.classes:
        if decl.is_builtin:
            exclude(decl.name, Justification(Rule.BUILTIN, decl.name))
        for method in decl.methods + decl.static_methods:
            if method.is_native:
                exclude(decl.name, Justification(Rule.NATIVE_METHOD, f'{decl.name}.{method.name}'))

    while queue:
        name = queue.popleft()
        decl = decls[name]
        if decl.superclass is not None:
            exclude(decl.superclass, Justification(Rule.SUPERCLASS_RULE, f'{name} extends {decl.superclass}'))
        for ref in references(decl, names):
            exclude(ref, Justification(Rule.REFERENCED_BY_RULE, f'referenced by {name}'))
        if pin_subclasses:
            for child in children[name]:
                exclude(child, Justification(Rule.SUBCLASS_RULE, f'{child} extends {name}'))

    order = tuple(decl.name for decl in program.classes)
    result = TransformableSet(
        transformable=frozenset(name for name in order if name not in reasons),
        non_transformable=frozenset(reasons),
        reasons={name: tuple(reasons[name]) for name in order if name in reasons},
        order=order,
    )
    logger.info('transformable: %d of %d classes', len(result.transformable), len(order))
    return result
