# -*- coding: utf-8 -*-
# pylint: disable=unused-argument,super-init-not-called,multiple-statements,line-too-long,redefined-builtin
"""Syntax Tree
=================

:mod:`mookit.lang.ast` contains the data models of MiniOO
programs. All nodes are immutable :class:`~mookit.corekit.infoclass.Info`
records; structural equality ignores source positions.

Types are represented by their names, i.e. ``int``, ``long``,
``bool``, ``string``, ``void``, ``ref`` or a class/interface name.

"""
from typing import TYPE_CHECKING

from mookit.corekit.infoclass import Info

if TYPE_CHECKING:
    from typing import Any, Optional, Union

    Pos = Optional[tuple[int, int]]
    Expr_ = Union['Literal', 'This', 'Var', 'Unary', 'Binary', 'FieldGet', 'StaticGet',
                  'Call', 'StaticCall', 'New', 'Intrinsic']
    Stmt_ = Union['Block', 'LocalDecl', 'Assign', 'ExprStmt', 'Print', 'Return',
                  'If', 'While', 'SuperCall']

__all__ = [
    'Node',
    'Program', 'ClassDecl', 'InterfaceDecl', 'FieldDecl', 'Param', 'MethodDecl', 'CtorDecl',
    'Stmt', 'Block', 'LocalDecl', 'Assign', 'ExprStmt', 'Print', 'Return', 'If', 'While', 'SuperCall',
    'Expr', 'Literal', 'This', 'Var', 'Unary', 'Binary', 'FieldGet', 'StaticGet',
    'Call', 'StaticCall', 'New', 'Intrinsic',
]


class Node(Info):
    """Base class of syntax tree nodes."""

    #: Source position (line, column).
    pos: 'Pos' = None

    __excluded__ = frozenset({'pos'})


###############################################################################
# Declarations
###############################################################################


class Program(Node):
    """A MiniOO program."""

    #: Class declarations in source order.
    classes: 'tuple[ClassDecl, ...]'
    #: Interface declarations in source order.
    interfaces: 'tuple[InterfaceDecl, ...]' = ()
    #: Entry point as (class name, method name).
    entry: 'Optional[tuple[str, str]]' = None

    if TYPE_CHECKING:
        def __init__(self, classes: 'tuple[ClassDecl, ...]', interfaces: 'tuple[InterfaceDecl, ...]' = (), entry: 'Optional[tuple[str, str]]' = None, pos: 'Pos' = None) -> 'None': ...

    def lookup(self, name: 'str') -> 'Optional[Union[ClassDecl, InterfaceDecl]]':
        """Find a class or interface by name."""
        for decl in self.classes:
            if decl.name == name:
                return decl
        for iface in self.interfaces:
            if iface.name == name:
                return iface
        return None


class FieldDecl(Node):
    """Field declaration."""

    #: Field name.
    name: 'str'
    #: Field type.
    type: 'str'
    #: Visibility, one of ``public``, ``protected`` and ``private``.
    visibility: 'str' = 'public'
    #: Static flag.
    is_static: 'bool' = False
    #: Final flag.
    is_final: 'bool' = False

    if TYPE_CHECKING:
        def __init__(self, name: 'str', type: 'str', visibility: 'str' = 'public', is_static: 'bool' = False, is_final: 'bool' = False, pos: 'Pos' = None) -> 'None': ...


class Param(Node):
    """Formal parameter."""

    #: Parameter name.
    name: 'str'
    #: Parameter type.
    type: 'str'


class MethodDecl(Node):
    """Method declaration (also used for interface signatures)."""

    #: Method name.
    name: 'str'
    #: Formal parameters.
    params: 'tuple[Param, ...]'
    #: Return type (``void`` for none).
    ret: 'str'
    #: Visibility.
    visibility: 'str' = 'public'
    #: Static flag.
    is_static: 'bool' = False
    #: Native flag.
    is_native: 'bool' = False
    #: Body, absent for native, builtin and interface methods.
    body: 'Optional[Block]' = None

    if TYPE_CHECKING:
        def __init__(self, name: 'str', params: 'tuple[Param, ...]', ret: 'str', visibility: 'str' = 'public', is_static: 'bool' = False, is_native: 'bool' = False, body: 'Optional[Block]' = None, pos: 'Pos' = None) -> 'None': ...

    @property
    def arity(self) -> 'int':
        """Number of parameters."""
        return len(self.params)


class CtorDecl(Node):
    """Constructor declaration."""

    #: Formal parameters.
    params: 'tuple[Param, ...]'
    #: Visibility.
    visibility: 'str' = 'public'
    #: Body, absent for builtin classes.
    body: 'Optional[Block]' = None

    @property
    def arity(self) -> 'int':
        """Number of parameters."""
        return len(self.params)


class ClassDecl(Node):
    """Class declaration."""

    #: Class name.
    name: 'str'
    #: Superclass name.
    superclass: 'Optional[str]' = None
    #: Implemented interfaces (generated classes only).
    interfaces: 'tuple[str, ...]' = ()
    #: Builtin (natively implemented) flag.
    is_builtin: 'bool' = False
    #: Instance fields.
    fields: 'tuple[FieldDecl, ...]' = ()
    #: Instance methods.
    methods: 'tuple[MethodDecl, ...]' = ()
    #: Constructors.
    constructors: 'tuple[CtorDecl, ...]' = ()
    #: Static fields.
    static_fields: 'tuple[FieldDecl, ...]' = ()
    #: Static methods.
    static_methods: 'tuple[MethodDecl, ...]' = ()
    #: Static initialiser.
    static_init: 'Optional[Block]' = None

    if TYPE_CHECKING:
        def __init__(self, name: 'str', superclass: 'Optional[str]' = None, interfaces: 'tuple[str, ...]' = (), is_builtin: 'bool' = False, fields: 'tuple[FieldDecl, ...]' = (), methods: 'tuple[MethodDecl, ...]' = (), constructors: 'tuple[CtorDecl, ...]' = (), static_fields: 'tuple[FieldDecl, ...]' = (), static_methods: 'tuple[MethodDecl, ...]' = (), static_init: 'Optional[Block]' = None, pos: 'Pos' = None) -> 'None': ...

    def field(self, name: 'str', static: 'bool' = False) -> 'Optional[FieldDecl]':
        """Find a field declared by this class."""
        for decl in (self.static_fields if static else self.fields):
            if decl.name == name:
                return decl
        return None

    def method(self, name: 'str', static: 'bool' = False,
               arity: 'Optional[int]' = None) -> 'Optional[MethodDecl]':
        """Find a method declared by this class."""
        for decl in (self.static_methods if static else self.methods):
            if decl.name == name and (arity is None or decl.arity == arity):
                return decl
        return None

    def constructor(self, arity: 'int') -> 'Optional[CtorDecl]':
        """Find a constructor by arity."""
        for decl in self.constructors:
            if decl.arity == arity:
                return decl
        return None


class InterfaceDecl(Node):
    """Interface declaration (generated code only)."""

    #: Interface name.
    name: 'str'
    #: Extended interfaces.
    extends: 'tuple[str, ...]' = ()
    #: Method signatures.
    methods: 'tuple[MethodDecl, ...]' = ()


###############################################################################
# Statements
###############################################################################


class Stmt(Node):
    """Base class of statements."""


class Block(Stmt):
    """Statement block."""

    #: Statements.
    stmts: 'tuple[Stmt_, ...]'


class LocalDecl(Stmt):
    """Local variable declaration."""

    #: Declared type.
    type: 'str'
    #: Variable name.
    name: 'str'
    #: Initialiser.
    init: 'Optional[Expr_]' = None


class Assign(Stmt):
    """Assignment to a variable, field or static field."""

    #: Assignment target (``Var``, ``FieldGet`` or ``StaticGet``).
    target: 'Expr_'
    #: Assigned value.
    value: 'Expr_'


class ExprStmt(Stmt):
    """Expression evaluated for its effect."""

    expr: 'Expr_'


class Print(Stmt):
    """Append the printed form of a value to the trace."""

    expr: 'Expr_'


class Return(Stmt):
    """Return from a method."""

    value: 'Optional[Expr_]' = None


class If(Stmt):
    """Conditional statement."""

    cond: 'Expr_'
    then: 'Stmt_'
    orelse: 'Optional[Stmt_]' = None


class While(Stmt):
    """Loop statement."""

    cond: 'Expr_'
    body: 'Stmt_'


class SuperCall(Stmt):
    """Superclass constructor invocation."""

    args: 'tuple[Expr_, ...]'


###############################################################################
# Expressions
###############################################################################


class Expr(Node):
    """Base class of expressions."""

    #: Static type, filled in by the checker.
    type: 'Optional[str]' = None


class Literal(Expr):
    """Literal value."""

    #: Python value (:obj:`int`, :obj:`bool`, :obj:`str` or :data:`None`).
    value: 'Any'
    #: Literal kind, one of ``int``, ``long``, ``bool``, ``string`` and ``null``.
    kind: 'str'


class This(Expr):
    """Current object."""


class Var(Expr):
    """Local variable (or unresolved bare name before checking)."""

    name: 'str'


class Unary(Expr):
    """Unary operation."""

    op: 'str'
    operand: 'Expr_'


class Binary(Expr):
    """Binary operation."""

    op: 'str'
    left: 'Expr_'
    right: 'Expr_'


class FieldGet(Expr):
    """Instance field access."""

    #: Object expression.
    target: 'Expr_'
    #: Field name.
    name: 'str'
    #: Declaring class, filled in by the checker.
    owner: 'Optional[str]' = None


class StaticGet(Expr):
    """Static field access."""

    #: Accessed class as written.
    cls: 'str'
    #: Field name.
    name: 'str'
    #: Declaring class, filled in by the checker.
    owner: 'Optional[str]' = None


class Call(Expr):
    """Instance method call (bare call before checking when ``target`` is :data:`None`)."""

    target: 'Optional[Expr_]'
    name: 'str'
    args: 'tuple[Expr_, ...]'
    owner: 'Optional[str]' = None


class StaticCall(Expr):
    """Static method call."""

    cls: 'str'
    name: 'str'
    args: 'tuple[Expr_, ...]'
    owner: 'Optional[str]' = None


class New(Expr):
    """Instance creation."""

    cls: 'str'
    args: 'tuple[Expr_, ...]'


class Intrinsic(Expr):
    """Runtime intrinsic ``@name(args)`` (generated code only)."""

    name: 'str'
    args: 'tuple[Expr_, ...]'
