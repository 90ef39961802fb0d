# -*- coding: utf-8 -*-
"""Class Table
=================

:mod:`mookit.lang.table` contains :class:`ClassTable`, the
hierarchy index over a :class:`~mookit.lang.ast.Program` shared
by the checker, the transformation engine and the interpreter.

"""
from typing import TYPE_CHECKING

from mookit.lang.reserved import is_primitive

if TYPE_CHECKING:
    from typing import Iterator, Optional, Union

    from mookit.lang.ast import ClassDecl, FieldDecl, InterfaceDecl, MethodDecl, Program

__all__ = ['ClassTable', 'WILDCARD', 'NULL']

#: Type of runtime intrinsics whose result type is decided at runtime.
WILDCARD = '*'
#: Type of the ``null`` literal.
NULL = 'null'


class ClassTable:
    """Hierarchy index of a program.

    Args:
        program: Indexed program.

    """

    def __init__(self, program: 'Program') -> 'None':
        #: Indexed program.
        self.program = program
        #: Class declarations by name.
        self.classes = {decl.name: decl for decl in program.classes}  # type: dict[str, ClassDecl]
        #: Interface declarations by name.
        self.interfaces = {decl.name: decl for decl in program.interfaces}  # type: dict[str, InterfaceDecl]

    ##########################################################################
    # Properties.
    ##########################################################################

    def is_class(self, name: 'str') -> 'bool':
        """Check if ``name`` is a declared class."""
        return name in self.classes

    def is_interface(self, name: 'str') -> 'bool':
        """Check if ``name`` is a declared interface."""
        return name in self.interfaces

    def is_type(self, name: 'str') -> 'bool':
        """Check if ``name`` is a valid (non-void) type."""
        return is_primitive(name) or name == 'ref' or name in self.classes or name in self.interfaces

    ##########################################################################
    # Hierarchy.
    ##########################################################################

    def ancestry(self, name: 'str') -> 'list[ClassDecl]':
        """Class ``name`` followed by its superclasses, nearest first."""
        chain = []  # type: list[ClassDecl]
        seen = set()  # type: set[str]
        current = self.classes.get(name)
        while current is not None and current.name not in seen:
            chain.append(current)
            seen.add(current.name)
            current = self.classes.get(current.superclass) if current.superclass else None
        return chain

    def is_subclass(self, name: 'str', base: 'str') -> 'bool':
        """Check if class ``name`` is ``base`` or derives from it."""
        return any(decl.name == base for decl in self.ancestry(name))

    def super_interfaces(self, name: 'str') -> 'list[str]':
        """Interface ``name`` and all interfaces it extends, breadth first."""
        order = []  # type: list[str]
        queue = [name]
        while queue:
            current = queue.pop(0)
            if current in order or current not in self.interfaces:
                continue
            order.append(current)
            queue.extend(self.interfaces[current].extends)
        return order

    def implemented(self, name: 'str') -> 'list[str]':
        """All interfaces implemented by class ``name`` and its superclasses."""
        order = []  # type: list[str]
        for decl in self.ancestry(name):
            for iface in decl.interfaces:
                for item in self.super_interfaces(iface):
                    if item not in order:
                        order.append(item)
        return order

    def is_subtype(self, src: 'str', dst: 'str') -> 'bool':
        """Check if a value of type ``src`` is assignable to type ``dst``."""
        if src == dst:
            return dst != 'void'
        if src == WILDCARD:
            return dst != 'void'
        if src == 'int' and dst == 'long':
            return True
        if src == NULL:
            return not is_primitive(dst) and dst != 'void'
        if src in self.classes:
            return self.is_subclass(src, dst) or dst in self.implemented(src)
        if src in self.interfaces:
            return dst in self.super_interfaces(src)
        return False

    ##########################################################################
    # Members.
    ##########################################################################

    def find_field(self, cls: 'str', name: 'str',
                   static: 'bool' = False) -> 'Optional[tuple[ClassDecl, FieldDecl]]':
        """Find a field visible through class ``cls`` (declared there or inherited)."""
        for decl in self.ancestry(cls):
            field = decl.field(name, static)
            if field is not None:
                return decl, field
        return None

    def find_method(self, type_: 'str', name: 'str', arity: 'Optional[int]' = None,
                    static: 'bool' = False) -> 'Optional[tuple[str, MethodDecl]]':
        """Find a method through class or interface ``type_``.

        Returns:
            Declaring class or interface name and the declaration.

        """
        if type_ in self.interfaces:
            if static:
                return None
            for iface in self.super_interfaces(type_):
                for method in self.interfaces[iface].methods:
                    if method.name == name and (arity is None or method.arity == arity):
                        return iface, method
            return None
        for decl in self.ancestry(type_):
            method = decl.method(name, static, arity)
            if method is not None:
                return decl.name, method
        return None

    def instance_fields(self, cls: 'str') -> 'list[tuple[str, FieldDecl]]':
        """All instance fields of class ``cls``, root class first."""
        return [(decl.name, field) for decl in reversed(self.ancestry(cls)) for field in decl.fields]

    def interface_methods(self, name: 'str') -> 'list[MethodDecl]':
        """All method signatures of interface ``name`` including inherited ones."""
        methods = []  # type: list[MethodDecl]
        seen = set()  # type: set[tuple[str, int]]
        for iface in self.super_interfaces(name):
            for method in self.interfaces[iface].methods:
                if (method.name, method.arity) not in seen:
                    seen.add((method.name, method.arity))
                    methods.append(method)
        return methods

    def subclasses(self, name: 'str') -> 'Iterator[ClassDecl]':
        """Direct subclasses of class ``name``."""
        for decl in self.program.classes:
            if decl.superclass == name:
                yield decl

    def lookup(self, name: 'str') -> 'Optional[Union[ClassDecl, InterfaceDecl]]':
        """Find a class or interface by name."""
        return self.classes.get(name) or self.interfaces.get(name)
