# -*- coding: utf-8 -*-
"""Pretty Printer
====================

:mod:`mookit.lang.printer` renders a :class:`~mookit.lang.ast.Program`
back into MiniOO source. The output of :func:`pretty_print` reparses
into a structurally identical program; it prints exactly the nodes
in the tree, so a checked tree prints its resolved (explicit) form.

"""
from typing import TYPE_CHECKING

from mookit.lang import ast

if TYPE_CHECKING:
    from typing import Union

    from mookit.lang.ast import Expr_, Stmt_

__all__ = ['pretty_print', 'print_expr', 'Printer']

#: Binding strength of binary operators.
PRECEDENCE = {
    '||': 1, '&&': 2,
    '==': 3, '!=': 3,
    '<': 4, '<=': 4, '>': 4, '>=': 4,
    '+': 5, '-': 5,
    '*': 6, '/': 6, '%': 6,
}

#: Binding strength of unary and postfix expressions.
UNARY = 7
ATOM = 8

_ESCAPES = {'\\': '\\\\', '"': '\\"', '\n': '\\n', '\t': '\\t', '\r': '\\r'}


class Printer:
    """MiniOO source printer.

    Args:
        indent: Indentation unit.

    """

    def __init__(self, indent: 'str' = '    ') -> 'None':
        #: Indentation unit.
        self.indent = indent
        self._lines = []  # type: list[str]

    ##########################################################################
    # Methods.
    ##########################################################################

    def program(self, program: 'ast.Program') -> 'str':
        """Render a whole program."""
        self._lines = []
        if program.entry is not None:
            self._emit(0, f'entry {program.entry[0]}.{program.entry[1]};')
        for decl in program.classes:
            if self._lines:
                self._emit(0, '')
            self._class(decl)
        for iface in program.interfaces:
            if self._lines:
                self._emit(0, '')
            self._interface(iface)
        return '\n'.join(self._lines) + '\n'

    def expr(self, node: 'Expr_') -> 'str':
        """Render an expression."""
        return self._expr(node)[0]

    ##########################################################################
    # Declarations.
    ##########################################################################

    def _emit(self, level: 'int', text: 'str') -> 'None':
        self._lines.append(f'{self.indent * level}{text}' if text else '')

    def _class(self, decl: 'ast.ClassDecl') -> 'None':
        head = f'class {decl.name}'
        if decl.is_builtin:
            head = f'builtin {head}'
        if decl.superclass is not None:
            head += f' extends {decl.superclass}'
        if decl.interfaces:
            head += f' implements {", ".join(decl.interfaces)}'
        self._emit(0, head + ' {')

        for field in decl.fields + decl.static_fields:
            self._emit(1, f'{self._modifiers(field.visibility, field.is_static, field.is_final)}'
                          f'{field.type} {field.name};')
        if decl.static_init is not None:
            self._emit(1, 'static ' + self._block_head(decl.static_init))
            self._block_body(decl.static_init, 1)
        for ctor in decl.constructors:
            sig = f'{ctor.visibility} {decl.name}({self._params(ctor.params)})'
            self._body(sig, ctor.body, 1)
        for method in decl.methods + decl.static_methods:
            sig = (f'{self._modifiers(method.visibility, method.is_static, False, method.is_native)}'
                   f'{method.ret} {method.name}({self._params(method.params)})')
            self._body(sig, method.body, 1)
        self._emit(0, '}')

    def _interface(self, iface: 'ast.InterfaceDecl') -> 'None':
        head = f'interface {iface.name}'
        if iface.extends:
            head += f' extends {", ".join(iface.extends)}'
        self._emit(0, head + ' {')
        for method in iface.methods:
            self._emit(1, f'{method.ret} {method.name}({self._params(method.params)});')
        self._emit(0, '}')

    @staticmethod
    def _modifiers(visibility: 'str', static: 'bool', final: 'bool', native: 'bool' = False) -> 'str':
        words = [visibility]
        if static:
            words.append('static')
        if final:
            words.append('final')
        if native:
            words.append('native')
        return ' '.join(words) + ' '

    @staticmethod
    def _params(params: 'tuple[ast.Param, ...]') -> 'str':
        return ', '.join(f'{param.type} {param.name}' for param in params)

    def _body(self, sig: 'str', body: 'ast.Block | None', level: 'int') -> 'None':
        if body is None:
            self._emit(level, sig + ';')
            return
        self._emit(level, f'{sig} {self._block_head(body)}')
        self._block_body(body, level)

    ##########################################################################
    # Statements.
    ##########################################################################

    @staticmethod
    def _block_head(block: 'ast.Block') -> 'str':
        return '{ }' if not block.stmts else '{'

    def _block_body(self, block: 'ast.Block', level: 'int') -> 'None':
        if not block.stmts:
            return
        for stmt in block.stmts:
            self._stmt(stmt, level + 1)
        self._emit(level, '}')

    def _nested(self, prefix: 'str', stmt: 'Stmt_', level: 'int') -> 'None':
        if isinstance(stmt, ast.Block):
            self._emit(level, f'{prefix} {self._block_head(stmt)}')
            self._block_body(stmt, level)
        else:
            self._emit(level, prefix)
            self._stmt(stmt, level + 1)

    def _stmt(self, stmt: 'Stmt_', level: 'int') -> 'None':  # pylint: disable=too-many-branches
        if isinstance(stmt, ast.Block):
            self._emit(level, self._block_head(stmt))
            self._block_body(stmt, level)
        elif isinstance(stmt, ast.LocalDecl):
            init = '' if stmt.init is None else f' = {self.expr(stmt.init)}'
            self._emit(level, f'{stmt.type} {stmt.name}{init};')
        elif isinstance(stmt, ast.Assign):
            self._emit(level, f'{self.expr(stmt.target)} = {self.expr(stmt.value)};')
        elif isinstance(stmt, ast.ExprStmt):
            self._emit(level, f'{self.expr(stmt.expr)};')
        elif isinstance(stmt, ast.Print):
            self._emit(level, f'print({self.expr(stmt.expr)});')
        elif isinstance(stmt, ast.Return):
            self._emit(level, 'return;' if stmt.value is None else f'return {self.expr(stmt.value)};')
        elif isinstance(stmt, ast.If):
            self._nested(f'if ({self.expr(stmt.cond)})', stmt.then, level)
            if stmt.orelse is not None:
                self._nested('else', stmt.orelse, level)
        elif isinstance(stmt, ast.While):
            self._nested(f'while ({self.expr(stmt.cond)})', stmt.body, level)
        elif isinstance(stmt, ast.SuperCall):
            self._emit(level, f'super({self._args(stmt.args)});')
        else:
            raise TypeError(f'unknown statement {type(stmt).__name__}')

    ##########################################################################
    # Expressions.
    ##########################################################################

    def _args(self, args: 'tuple[Expr_, ...]') -> 'str':
        return ', '.join(self.expr(arg) for arg in args)

    def _operand(self, node: 'Expr_', strength: 'int') -> 'str':
        text, prec = self._expr(node)
        return f'({text})' if prec < strength else text

    def _expr(self, node: 'Expr_') -> 'tuple[str, int]':  # pylint: disable=too-many-return-statements
        if isinstance(node, ast.Literal):
            return self._literal(node), ATOM
        if isinstance(node, ast.This):
            return 'this', ATOM
        if isinstance(node, ast.Var):
            return node.name, ATOM
        if isinstance(node, ast.Unary):
            return f'{node.op}{self._operand(node.operand, UNARY)}', UNARY
        if isinstance(node, ast.Binary):
            prec = PRECEDENCE[node.op]
            left = self._operand(node.left, prec)
            right = self._operand(node.right, prec + 1)
            return f'{left} {node.op} {right}', prec
        if isinstance(node, ast.FieldGet):
            return f'{self._operand(node.target, ATOM)}.{node.name}', ATOM
        if isinstance(node, ast.StaticGet):
            return f'{node.cls}.{node.name}', ATOM
        if isinstance(node, ast.Call):
            if node.target is None:
                return f'{node.name}({self._args(node.args)})', ATOM
            return f'{self._operand(node.target, ATOM)}.{node.name}({self._args(node.args)})', ATOM
        if isinstance(node, ast.StaticCall):
            return f'{node.cls}.{node.name}({self._args(node.args)})', ATOM
        if isinstance(node, ast.New):
            return f'new {node.cls}({self._args(node.args)})', ATOM
        if isinstance(node, ast.Intrinsic):
            return f'@{node.name}({self._args(node.args)})', ATOM
        raise TypeError(f'unknown expression {type(node).__name__}')

    @staticmethod
    def _literal(node: 'ast.Literal') -> 'str':
        if node.kind == 'null':
            return 'null'
        if node.kind == 'bool':
            return 'true' if node.value else 'false'
        if node.kind == 'string':
            return '"' + ''.join(_ESCAPES.get(char, char) for char in node.value) + '"'
        if node.kind == 'long':
            return f'{node.value}L'
        return str(node.value)


def pretty_print(program: 'ast.Program') -> 'str':
    """Render a program as MiniOO source.

    Args:
        program: Program to print.

    Returns:
        Source text; :func:`~mookit.lang.parser.parse_program` of the
        result is structurally equal to ``program``.

    """
    return Printer().program(program)


def print_expr(node: 'Union[Expr_, ast.Expr]') -> 'str':
    """Render a single expression."""
    return Printer().expr(node)  # type: ignore[arg-type]
