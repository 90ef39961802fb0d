# -*- coding: utf-8 -*-
# pylint: disable=too-many-branches,too-many-return-statements,too-many-statements
"""Static Checker
====================

:mod:`mookit.lang.checker` contains :func:`check_program`, which
resolves every name of a parsed :class:`~mookit.lang.ast.Program`,
types every expression and enforces the visibility rules.

The result is a :class:`CheckedProgram` holding the resolved tree:
implicit ``this`` member access becomes explicit (``this.f``,
``this.m(...)``), class qualified access becomes a static node
(:class:`~mookit.lang.ast.StaticGet`, :class:`~mookit.lang.ast.StaticCall`)
recording the declaring class, and expressions carry their types.

Classes whose names carry a generated suffix enjoy the privileges of
generated code (interfaces, ``ref`` types, ``$`` temporaries, runtime
intrinsics, reserved accessor names, overloading by arity) once the
program is checked in *generated* mode.

"""
from typing import TYPE_CHECKING

from mookit.corekit.infoclass import Info
from mookit.lang import ast
from mookit.lang.reserved import (ACCESSOR_PREFIXES, is_generated, is_numeric, is_primitive,
                                  is_reserved_member)
from mookit.lang.table import NULL, WILDCARD, ClassTable
from mookit.utilities.exceptions import (ArityError, CheckError, DuplicateDeclaration,
                                         ReservedName, TypeMismatch, UnresolvedName,
                                         VisibilityError)
from mookit.utilities.logging import logger

if TYPE_CHECKING:
    from typing import Optional, Union

    from mookit.lang.ast import Expr_, Pos, Stmt_

__all__ = ['check_program', 'CheckedProgram', 'Checker', 'INTRINSICS']

#: Runtime intrinsics available to generated code.
INTRINSICS = ('policy_create', 'policy_discover', 'remote_invoke')

#: Types printable by ``print`` and string concatenation.
PRINTABLE = ('int', 'long', 'bool', 'string')

INT_MAX = 2**31 - 1
LONG_MAX = 2**63 - 1


class CheckedProgram(Info):
    """Result of static checking."""

    #: Resolved and typed program.
    program: 'ast.Program'
    #: Program as parsed.
    source: 'ast.Program'
    #: Whether the program was checked in generated mode.
    generated: 'bool' = False

    if TYPE_CHECKING:
        def __init__(self, program: 'ast.Program', source: 'ast.Program', generated: 'bool' = False) -> 'None': ...  # pylint: disable=unused-argument,super-init-not-called,multiple-statements,line-too-long

    @property
    def table(self) -> 'ClassTable':
        """Hierarchy index of the resolved program."""
        return ClassTable(self.program)


class _Context:
    """Per-body checking state."""

    def __init__(self, cls: 'ast.ClassDecl', *, static: 'bool', generated: 'bool',
                 ctor: 'bool' = False, static_init: 'bool' = False,
                 method: 'Optional[str]' = None, ret: 'str' = 'void') -> 'None':
        self.cls = cls
        self.static = static
        self.generated = generated
        self.ctor = ctor
        self.static_init = static_init
        self.method = method
        self.ret = ret
        self.scopes = [{}]  # type: list[dict[str, str]]

    def local(self, name: 'str') -> 'Optional[str]':
        for scope in reversed(self.scopes):
            if name in scope:
                return scope[name]
        return None


class Checker:
    """MiniOO static checker.

    Args:
        program: Parsed program.
        generated: Check in generated mode; :data:`None` selects it
            when the program declares interfaces, which user source
            never does.

    """

    def __init__(self, program: 'ast.Program', generated: 'Optional[bool]' = None) -> 'None':
        self.source = program
        self.generated = bool(program.interfaces) if generated is None else generated
        self.table = ClassTable(program)

    ##########################################################################
    # Methods.
    ##########################################################################

    def run(self) -> 'CheckedProgram':
        """Check the program."""
        self._check_declarations()
        classes = tuple(self._check_class(decl) for decl in self.source.classes)
        program = self.source._replace(classes=classes)
        self._check_entry(program)
        logger.debug('checked %d classes (generated=%s)', len(classes), self.generated)
        return CheckedProgram(program, self.source, self.generated)

    ##########################################################################
    # Declarations.
    ##########################################################################

    def _privileged(self, name: 'str') -> 'bool':
        return self.generated and is_generated(name)

    def _check_type(self, type_: 'str', privileged: 'bool', pos: 'Pos', *, void: 'bool' = False) -> 'None':
        if type_ == 'void' and void:
            return
        if type_ == 'ref' and not privileged:
            raise ReservedName('type ref is reserved for generated code', pos=pos)
        if type_ == 'void' or not self.table.is_type(type_):
            raise UnresolvedName(f'unknown type {type_!r}', pos=pos)

    def _check_name(self, name: 'str', privileged: 'bool', pos: 'Pos') -> 'None':
        if not privileged and is_reserved_member(name):
            raise ReservedName(f'identifier {name!r} is reserved for generated code', pos=pos)

    def _check_declarations(self) -> 'None':
        table = self.table

        for iface in self.source.interfaces:
            if not self._privileged(iface.name):
                raise ReservedName(f'interface {iface.name} is only allowed in generated code', pos=iface.pos)
            for parent in iface.extends:
                if not table.is_interface(parent):
                    raise UnresolvedName(f'unknown interface {parent!r}', pos=iface.pos)
            if iface.name in table.super_interfaces(iface.name)[1:] or any(
                    iface.name in table.super_interfaces(parent) for parent in iface.extends):
                raise CheckError(f'cyclic interface hierarchy at {iface.name}', pos=iface.pos)
            for method in iface.methods:
                self._check_type(method.ret, True, method.pos, void=True)
                for param in method.params:
                    self._check_type(param.type, True, param.pos)

        for decl in self.source.classes:
            privileged = self._privileged(decl.name)
            if not self.generated and is_generated(decl.name):
                raise ReservedName(f'class name {decl.name} carries a reserved suffix', pos=decl.pos)
            if not privileged and is_reserved_member(decl.name):
                raise ReservedName(f'class name {decl.name} is reserved', pos=decl.pos)

            if decl.superclass is not None:
                base = table.classes.get(decl.superclass)
                if base is None:
                    raise UnresolvedName(f'unknown superclass {decl.superclass!r}', pos=decl.pos)
                if base.is_builtin:
                    raise CheckError(f'builtin class {base.name} cannot be extended', pos=decl.pos)
                if decl.name in (item.name for item in table.ancestry(base.name)):
                    raise CheckError(f'cyclic class hierarchy at {decl.name}', pos=decl.pos)
            if decl.interfaces and not privileged:
                raise ReservedName(f'class {decl.name} cannot implement interfaces', pos=decl.pos)
            for iface in decl.interfaces:
                if not table.is_interface(iface):
                    raise UnresolvedName(f'unknown interface {iface!r}', pos=decl.pos)

            self._check_members(decl, privileged)

    def _check_members(self, decl: 'ast.ClassDecl', privileged: 'bool') -> 'None':
        table = self.table
        ancestors = table.ancestry(decl.name)[1:]

        if decl.is_builtin:
            bodies = [m.body for m in decl.methods + decl.static_methods] + [c.body for c in decl.constructors]
            if any(body is not None for body in bodies) or decl.static_init is not None:
                raise CheckError(f'builtin class {decl.name} may only declare signatures', pos=decl.pos)
            if any(m.is_native for m in decl.methods + decl.static_methods):
                raise CheckError(f'builtin class {decl.name} cannot declare native methods', pos=decl.pos)
        else:
            for method in decl.methods + decl.static_methods:
                if method.is_native and method.body is not None:
                    raise CheckError(f'native method {decl.name}.{method.name} has a body', pos=method.pos)
                if not method.is_native and method.body is None:
                    raise CheckError(f'method {decl.name}.{method.name} has no body', pos=method.pos)
            for ctor in decl.constructors:
                if ctor.body is None:
                    raise CheckError(f'constructor of {decl.name} has no body', pos=ctor.pos)

        for static in (False, True):
            fields = decl.static_fields if static else decl.fields
            methods = decl.static_methods if static else decl.methods
            names = {}  # type: dict[str, int]
            for field in fields:
                self._check_name(field.name, privileged, field.pos)
                self._check_type(field.type, privileged, field.pos)
                for base in ancestors:
                    if base.field(field.name, static) is not None:
                        raise DuplicateDeclaration(
                            f'field {decl.name}.{field.name} hides {base.name}.{field.name}', pos=field.pos)
                names[field.name] = 1
            for method in methods:
                self._check_name(method.name, privileged, method.pos)
                if method.name in names and (not privileged or names[method.name] == 1):
                    raise DuplicateDeclaration(f'duplicate member {decl.name}.{method.name}', pos=method.pos)
                names[method.name] = 2
                self._check_type(method.ret, privileged, method.pos, void=True)
                seen = set()  # type: set[str]
                for param in method.params:
                    self._check_name(param.name, privileged, param.pos)
                    self._check_type(param.type, privileged, param.pos)
                    if param.name in seen:
                        raise DuplicateDeclaration(f'duplicate parameter {param.name}', pos=param.pos)
                    seen.add(param.name)
                if not static:
                    self._check_override(decl, method, ancestors, privileged)

        for ctor in decl.constructors:
            seen = set()
            for param in ctor.params:
                self._check_name(param.name, privileged, param.pos)
                self._check_type(param.type, privileged, param.pos)
                if param.name in seen:
                    raise DuplicateDeclaration(f'duplicate parameter {param.name}', pos=param.pos)
                seen.add(param.name)

        for iface in table.implemented(decl.name):
            for sig in table.interface_methods(iface):
                found = table.find_method(decl.name, sig.name, sig.arity)
                if found is None:
                    raise CheckError(f'class {decl.name} does not implement {iface}.{sig.name}', pos=decl.pos)
                if not _same_signature(found[1], sig) or found[1].visibility != 'public':
                    raise TypeMismatch(f'{found[0]}.{sig.name} does not match {iface}.{sig.name}', pos=decl.pos)

    @staticmethod
    def _check_override(decl: 'ast.ClassDecl', method: 'ast.MethodDecl',
                        ancestors: 'list[ast.ClassDecl]', privileged: 'bool') -> 'None':
        for base in ancestors:
            for other in base.methods:
                if other.name != method.name:
                    continue
                if privileged and other.arity != method.arity:
                    continue
                if not _same_signature(other, method):
                    raise TypeMismatch(f'{decl.name}.{method.name} does not match overridden '
                                       f'{base.name}.{other.name}', pos=method.pos)
                return

    def _check_entry(self, program: 'ast.Program') -> 'None':
        if program.entry is None:
            return
        cls, name = program.entry
        decl = self.table.classes.get(cls)
        method = decl.method(name, static=True) if decl is not None else None
        if method is None:
            raise UnresolvedName(f'entry {cls}.{name} is not a static method', pos=program.pos)
        if method.params or method.visibility != 'public':
            raise CheckError(f'entry {cls}.{name} must be public and take no parameters', pos=method.pos)

    ##########################################################################
    # Bodies.
    ##########################################################################

    def _check_class(self, decl: 'ast.ClassDecl') -> 'ast.ClassDecl':
        if decl.is_builtin:
            return decl
        privileged = self._privileged(decl.name)

        methods = []  # type: list[ast.MethodDecl]
        static_methods = []  # type: list[ast.MethodDecl]
        for method in decl.methods + decl.static_methods:
            if method.body is None:
                (static_methods if method.is_static else methods).append(method)
                continue
            ctx = _Context(decl, static=method.is_static, generated=privileged,
                           method=method.name, ret=method.ret)
            for param in method.params:
                ctx.scopes[0][param.name] = param.type
            body = self._block(method.body, ctx)
            if method.ret != 'void' and not _returns(body):
                raise TypeMismatch(f'method {decl.name}.{method.name} may not return a value', pos=method.pos)
            (static_methods if method.is_static else methods).append(method._replace(body=body))

        ctors = []  # type: list[ast.CtorDecl]
        for ctor in decl.constructors:
            ctx = _Context(decl, static=False, generated=privileged, ctor=True)
            for param in ctor.params:
                ctx.scopes[0][param.name] = param.type
            stmts = ctor.body.stmts
            for index, stmt in enumerate(stmts):
                if isinstance(stmt, ast.SuperCall) and index > 0:
                    raise CheckError('super(...) must be the first statement of a constructor', pos=stmt.pos)
            if not (stmts and isinstance(stmts[0], ast.SuperCall)):
                self._super(ast.SuperCall((), pos=ctor.pos), ctx)
            ctors.append(ctor._replace(body=self._block(ctor.body, ctx)))
        if not decl.constructors and decl.superclass is not None:
            self._super(ast.SuperCall((), pos=decl.pos), _Context(decl, static=False, generated=privileged, ctor=True))

        static_init = None
        if decl.static_init is not None:
            ctx = _Context(decl, static=True, generated=privileged, static_init=True)
            static_init = self._block(decl.static_init, ctx)

        return decl._replace(methods=tuple(methods), static_methods=tuple(static_methods),
                             constructors=tuple(ctors), static_init=static_init)

    def _block(self, block: 'ast.Block', ctx: '_Context') -> 'ast.Block':
        ctx.scopes.append({})
        try:
            return block._replace(stmts=tuple(self._stmt(stmt, ctx) for stmt in block.stmts))
        finally:
            ctx.scopes.pop()

    def _nested(self, stmt: 'Stmt_', ctx: '_Context') -> 'Stmt_':
        if isinstance(stmt, ast.Block):
            return self._block(stmt, ctx)
        ctx.scopes.append({})
        try:
            return self._stmt(stmt, ctx)
        finally:
            ctx.scopes.pop()

    def _stmt(self, stmt: 'Stmt_', ctx: '_Context') -> 'Stmt_':
        if isinstance(stmt, ast.Block):
            return self._block(stmt, ctx)

        if isinstance(stmt, ast.LocalDecl):
            self._check_name(stmt.name, ctx.generated, stmt.pos)
            self._check_type(stmt.type, ctx.generated, stmt.pos)
            if ctx.local(stmt.name) is not None:
                raise DuplicateDeclaration(f'variable {stmt.name} is already declared', pos=stmt.pos)
            init = None
            if stmt.init is not None:
                init = self._expr(stmt.init, ctx)
                self._expect(init, stmt.type)
            ctx.scopes[-1][stmt.name] = stmt.type
            return stmt._replace(init=init)

        if isinstance(stmt, ast.Assign):
            target = self._lvalue(stmt.target, ctx)
            value = self._expr(stmt.value, ctx)
            self._expect(value, target.type)
            return stmt._replace(target=target, value=value)

        if isinstance(stmt, ast.ExprStmt):
            expr = self._expr(stmt.expr, ctx)
            if not isinstance(expr, (ast.Call, ast.StaticCall, ast.New, ast.Intrinsic)):
                raise TypeMismatch('expression statement has no effect', pos=stmt.pos)
            return stmt._replace(expr=expr)

        if isinstance(stmt, ast.Print):
            expr = self._expr(stmt.expr, ctx)
            if expr.type not in PRINTABLE:
                raise TypeMismatch(f'cannot print a value of type {expr.type}', pos=stmt.pos)
            return stmt._replace(expr=expr)

        if isinstance(stmt, ast.Return):
            if ctx.ctor or ctx.static_init:
                if stmt.value is not None:
                    raise TypeMismatch('constructor cannot return a value', pos=stmt.pos)
                return stmt
            if stmt.value is None:
                if ctx.ret != 'void':
                    raise TypeMismatch(f'missing return value of type {ctx.ret}', pos=stmt.pos)
                return stmt
            if ctx.ret == 'void':
                raise TypeMismatch('void method cannot return a value', pos=stmt.pos)
            value = self._expr(stmt.value, ctx)
            self._expect(value, ctx.ret)
            return stmt._replace(value=value)

        if isinstance(stmt, ast.If):
            cond = self._condition(stmt.cond, ctx)
            then = self._nested(stmt.then, ctx)
            orelse = self._nested(stmt.orelse, ctx) if stmt.orelse is not None else None
            return stmt._replace(cond=cond, then=then, orelse=orelse)

        if isinstance(stmt, ast.While):
            cond = self._condition(stmt.cond, ctx)
            return stmt._replace(cond=cond, body=self._nested(stmt.body, ctx))

        if isinstance(stmt, ast.SuperCall):
            if not ctx.ctor:
                raise CheckError('super(...) outside of a constructor', pos=stmt.pos)
            return self._super(stmt, ctx)

        raise CheckError(f'unknown statement {type(stmt).__name__}', pos=stmt.pos)

    def _super(self, stmt: 'ast.SuperCall', ctx: '_Context') -> 'ast.SuperCall':
        base = ctx.cls.superclass
        if base is None:
            if stmt.args:
                raise CheckError(f'class {ctx.cls.name} has no superclass', pos=stmt.pos)
            return stmt
        decl = self.table.classes[base]
        args = tuple(self._expr(arg, ctx) for arg in stmt.args)
        ctor = decl.constructor(len(args))
        if ctor is None:
            if decl.constructors or args:
                raise ArityError(f'no constructor {base}/{len(args)}', pos=stmt.pos)
            return stmt._replace(args=args)
        self._visible(ctx, base, ctor.visibility, f'constructor of {base}', stmt.pos)
        self._arguments(args, ctor.params, stmt.pos)
        return stmt._replace(args=args)

    def _condition(self, expr: 'Expr_', ctx: '_Context') -> 'Expr_':
        cond = self._expr(expr, ctx)
        if cond.type != 'bool':
            raise TypeMismatch(f'condition must be bool, not {cond.type}', pos=expr.pos)
        return cond

    ##########################################################################
    # Expressions.
    ##########################################################################

    def _expect(self, expr: 'Expr_', type_: 'str') -> 'None':
        if not self.table.is_subtype(expr.type, type_):
            raise TypeMismatch(f'expected {type_}, got {expr.type}', pos=expr.pos)

    def _arguments(self, args: 'tuple[Expr_, ...]', params: 'tuple[ast.Param, ...]', pos: 'Pos') -> 'None':
        if len(args) != len(params):
            raise ArityError(f'expected {len(params)} arguments, got {len(args)}', pos=pos)
        for arg, param in zip(args, params):
            self._expect(arg, param.type)

    def _visible(self, ctx: '_Context', owner: 'str', visibility: 'str', what: 'str', pos: 'Pos') -> 'None':
        if visibility == 'public':
            return
        if visibility == 'private' and ctx.cls.name == owner:
            return
        if visibility == 'protected' and self.table.is_subclass(ctx.cls.name, owner):
            return
        raise VisibilityError(f'{what} is {visibility}', pos=pos)

    def _is_class_name(self, node: 'Expr_', ctx: '_Context') -> 'bool':
        if not isinstance(node, ast.Var) or ctx.local(node.name) is not None:
            return False
        if self._implicit_field(node.name, ctx) is not None:
            return False
        return self.table.is_class(node.name)

    def _implicit_field(self, name: 'str', ctx: '_Context') -> 'Optional[tuple[bool, ast.ClassDecl, ast.FieldDecl]]':
        if not ctx.static:
            found = self.table.find_field(ctx.cls.name, name)
            if found is not None:
                return (False,) + found
        found = self.table.find_field(ctx.cls.name, name, static=True)
        if found is not None:
            return (True,) + found
        return None

    def _lvalue(self, node: 'Expr_', ctx: '_Context') -> 'Expr_':
        if isinstance(node, ast.Var):
            type_ = ctx.local(node.name)
            if type_ is not None:
                return node._replace(type=type_)
            target = self._expr(node, ctx)
        elif isinstance(node, (ast.FieldGet, ast.StaticGet)):
            target = self._expr(node, ctx)
        else:
            raise TypeMismatch('invalid assignment target', pos=node.pos)

        if isinstance(target, ast.FieldGet):
            decl, field = self.table.find_field(target.owner, target.name)  # type: ignore[misc,arg-type]
            allowed = (ctx.ctor and decl.name == ctx.cls.name and isinstance(target.target, ast.This))
        elif isinstance(target, ast.StaticGet):
            decl, field = self.table.find_field(target.owner, target.name, static=True)  # type: ignore[misc,arg-type]
            allowed = ctx.static_init and decl.name == ctx.cls.name
        else:
            raise TypeMismatch('invalid assignment target', pos=node.pos)
        if field.is_final and not allowed:
            if not (ctx.generated and ctx.method is not None and ctx.method.startswith(ACCESSOR_PREFIXES[1])):
                raise CheckError(f'cannot assign final field {decl.name}.{field.name}', pos=node.pos)
        return target

    def _expr(self, node: 'Expr_', ctx: '_Context') -> 'Expr_':
        if isinstance(node, ast.Literal):
            return self._literal(node)

        if isinstance(node, ast.This):
            if ctx.static:
                raise CheckError('this used in a static context', pos=node.pos)
            return node._replace(type=ctx.cls.name)

        if isinstance(node, ast.Var):
            type_ = ctx.local(node.name)
            if type_ is not None:
                return node._replace(type=type_)
            found = self._implicit_field(node.name, ctx)
            if found is None:
                raise UnresolvedName(f'unresolved name {node.name!r}', pos=node.pos)
            static, decl, field = found
            if static:
                return ast.StaticGet(decl.name, field.name, owner=decl.name, type=field.type, pos=node.pos)
            return ast.FieldGet(ast.This(type=ctx.cls.name, pos=node.pos), field.name,
                                owner=decl.name, type=field.type, pos=node.pos)

        if isinstance(node, ast.Unary):
            if node.op == '-' and isinstance(node.operand, ast.Literal):
                # the magnitude of the most negative value exceeds the maximum by one
                operand = self._literal(node.operand, negated=True)
            else:
                operand = self._expr(node.operand, ctx)
            if node.op == '-' and is_numeric(operand.type):
                return node._replace(operand=operand, type=operand.type)
            if node.op == '!' and operand.type == 'bool':
                return node._replace(operand=operand, type='bool')
            raise TypeMismatch(f'bad operand type {operand.type} for {node.op}', pos=node.pos)

        if isinstance(node, ast.Binary):
            return self._binary(node, ctx)

        if isinstance(node, ast.FieldGet):
            if self._is_class_name(node.target, ctx):
                return self._static_get(ast.StaticGet(node.target.name, node.name, pos=node.pos), ctx)  # type: ignore[union-attr]
            target = self._expr(node.target, ctx)
            if not self.table.is_class(target.type):
                raise TypeMismatch(f'type {target.type} has no fields', pos=node.pos)
            found = self.table.find_field(target.type, node.name)
            if found is None:
                raise UnresolvedName(f'unknown field {target.type}.{node.name}', pos=node.pos)
            decl, field = found
            self._visible(ctx, decl.name, field.visibility, f'field {decl.name}.{field.name}', node.pos)
            return node._replace(target=target, owner=decl.name, type=field.type)

        if isinstance(node, ast.StaticGet):
            return self._static_get(node, ctx)

        if isinstance(node, ast.Call):
            return self._call(node, ctx)

        if isinstance(node, ast.StaticCall):
            return self._static_call(node, ctx)

        if isinstance(node, ast.New):
            decl = self.table.classes.get(node.cls)
            if decl is None:
                raise UnresolvedName(f'unknown class {node.cls!r}', pos=node.pos)
            args = tuple(self._expr(arg, ctx) for arg in node.args)
            ctor = decl.constructor(len(args))
            if ctor is None:
                if decl.constructors or args:
                    raise ArityError(f'no constructor {node.cls}/{len(args)}', pos=node.pos)
            else:
                self._visible(ctx, decl.name, ctor.visibility, f'constructor of {decl.name}', node.pos)
                self._arguments(args, ctor.params, node.pos)
            return node._replace(args=args, type=decl.name)

        if isinstance(node, ast.Intrinsic):
            return self._intrinsic(node, ctx)

        raise CheckError(f'unknown expression {type(node).__name__}', pos=node.pos)

    @staticmethod
    def _literal(node: 'ast.Literal', negated: 'bool' = False) -> 'ast.Literal':
        bound = {'int': INT_MAX, 'long': LONG_MAX}.get(node.kind)
        if bound is not None and node.value > bound + negated:
            raise TypeMismatch(f'{node.kind} literal {"-" if negated else ""}{node.value} out of range', pos=node.pos)
        return node._replace(type=NULL if node.kind == 'null' else node.kind)

    def _static_get(self, node: 'ast.StaticGet', ctx: '_Context') -> 'Expr_':
        if not self.table.is_class(node.cls):
            raise UnresolvedName(f'unknown class {node.cls!r}', pos=node.pos)
        found = self.table.find_field(node.cls, node.name, static=True)
        if found is None:
            raise UnresolvedName(f'unknown static field {node.cls}.{node.name}', pos=node.pos)
        decl, field = found
        self._visible(ctx, decl.name, field.visibility, f'field {decl.name}.{field.name}', node.pos)
        return node._replace(owner=decl.name, type=field.type)

    def _call(self, node: 'ast.Call', ctx: '_Context') -> 'Expr_':
        if node.target is None:
            if not ctx.static and self.table.find_method(ctx.cls.name, node.name) is not None:
                target = ast.This(type=ctx.cls.name, pos=node.pos)  # type: Expr_
                return self._method_call(node._replace(target=target), target, ctx)
            if self.table.find_method(ctx.cls.name, node.name, static=True) is not None:
                return self._static_call(ast.StaticCall(ctx.cls.name, node.name, node.args, pos=node.pos), ctx)
            raise UnresolvedName(f'unresolved method {node.name!r}', pos=node.pos)
        if self._is_class_name(node.target, ctx):
            return self._static_call(ast.StaticCall(node.target.name, node.name, node.args, pos=node.pos), ctx)  # type: ignore[union-attr]
        target = self._expr(node.target, ctx)
        return self._method_call(node, target, ctx)

    def _method_call(self, node: 'ast.Call', target: 'Expr_', ctx: '_Context') -> 'Expr_':
        if not (self.table.is_class(target.type) or self.table.is_interface(target.type)):
            raise TypeMismatch(f'type {target.type} has no methods', pos=node.pos)
        args = tuple(self._expr(arg, ctx) for arg in node.args)
        found = self.table.find_method(target.type, node.name, len(args))
        if found is None:
            if self.table.find_method(target.type, node.name) is not None:
                raise ArityError(f'wrong number of arguments to {target.type}.{node.name}', pos=node.pos)
            raise UnresolvedName(f'unknown method {target.type}.{node.name}', pos=node.pos)
        owner, method = found
        self._visible(ctx, owner, method.visibility, f'method {owner}.{method.name}', node.pos)
        self._arguments(args, method.params, node.pos)
        return node._replace(target=target, args=args, owner=owner, type=method.ret)

    def _static_call(self, node: 'ast.StaticCall', ctx: '_Context') -> 'Expr_':
        if not self.table.is_class(node.cls):
            raise UnresolvedName(f'unknown class {node.cls!r}', pos=node.pos)
        args = tuple(self._expr(arg, ctx) for arg in node.args)
        found = self.table.find_method(node.cls, node.name, len(args), static=True)
        if found is None:
            if self.table.find_method(node.cls, node.name, static=True) is not None:
                raise ArityError(f'wrong number of arguments to {node.cls}.{node.name}', pos=node.pos)
            raise UnresolvedName(f'unknown static method {node.cls}.{node.name}', pos=node.pos)
        owner, method = found
        self._visible(ctx, owner, method.visibility, f'method {owner}.{method.name}', node.pos)
        self._arguments(args, method.params, node.pos)
        return node._replace(args=args, owner=owner, type=method.ret)

    def _intrinsic(self, node: 'ast.Intrinsic', ctx: '_Context') -> 'Expr_':
        if not ctx.generated:
            raise ReservedName(f'intrinsic @{node.name} is reserved for generated code', pos=node.pos)
        args = tuple(self._expr(arg, ctx) for arg in node.args)
        if node.name in ('policy_create', 'policy_discover'):
            if len(args) != 1 or not isinstance(args[0], ast.Literal) or args[0].kind != 'string':
                raise ArityError(f'@{node.name} takes one class name literal', pos=node.pos)
            suffix = '_O_Int' if node.name == 'policy_create' else '_C_Int'
            type_ = f'{args[0].value}{suffix}'
            if not self.table.is_interface(type_):
                raise UnresolvedName(f'unknown interface {type_!r}', pos=node.pos)
            return node._replace(args=args, type=type_)
        if node.name == 'remote_invoke':
            if len(args) < 2 or args[0].type != 'ref' or not (
                    isinstance(args[1], ast.Literal) and args[1].kind == 'string'):
                raise ArityError('@remote_invoke takes a ref handle and a member name literal', pos=node.pos)
            for arg in args[2:]:
                if arg.type == 'void':
                    raise TypeMismatch('void argument to @remote_invoke', pos=arg.pos)
            return node._replace(args=args, type=WILDCARD)
        raise UnresolvedName(f'unknown intrinsic @{node.name}', pos=node.pos)

    def _binary(self, node: 'ast.Binary', ctx: '_Context') -> 'Expr_':
        left = self._expr(node.left, ctx)
        right = self._expr(node.right, ctx)
        op = node.op
        lt, rt = left.type, right.type

        if op == '+' and 'string' in (lt, rt):
            if lt not in PRINTABLE or rt not in PRINTABLE:
                raise TypeMismatch(f'cannot concatenate {lt} and {rt}', pos=node.pos)
            return node._replace(left=left, right=right, type='string')
        if op in ('+', '-', '*', '/', '%'):
            if not (is_numeric(lt) and is_numeric(rt)):
                raise TypeMismatch(f'bad operand types {lt}, {rt} for {op}', pos=node.pos)
            return node._replace(left=left, right=right, type='long' if 'long' in (lt, rt) else 'int')
        if op in ('<', '<=', '>', '>='):
            if not (is_numeric(lt) and is_numeric(rt)):
                raise TypeMismatch(f'bad operand types {lt}, {rt} for {op}', pos=node.pos)
            return node._replace(left=left, right=right, type='bool')
        if op in ('&&', '||'):
            if lt != 'bool' or rt != 'bool':
                raise TypeMismatch(f'bad operand types {lt}, {rt} for {op}', pos=node.pos)
            return node._replace(left=left, right=right, type='bool')
        if op in ('==', '!='):
            if (is_numeric(lt) and is_numeric(rt)) or (lt == rt and lt in ('bool', 'string')):
                return node._replace(left=left, right=right, type='bool')
            if NULL in (lt, rt) and all(not is_primitive(t) for t in (lt, rt)):
                return node._replace(left=left, right=right, type='bool')
            raise TypeMismatch(f'cannot compare {lt} and {rt}', pos=node.pos)
        raise TypeMismatch(f'unknown operator {op}', pos=node.pos)


def _same_signature(one: 'ast.MethodDecl', other: 'ast.MethodDecl') -> 'bool':
    return (one.ret == other.ret
            and tuple(p.type for p in one.params) == tuple(p.type for p in other.params))


def _returns(stmt: 'Union[Stmt_, None]') -> 'bool':
    """Check if a statement returns on every path."""
    if isinstance(stmt, ast.Return):
        return True
    if isinstance(stmt, ast.Block):
        return any(_returns(item) for item in stmt.stmts)
    if isinstance(stmt, ast.If):
        return stmt.orelse is not None and _returns(stmt.then) and _returns(stmt.orelse)
    return False


def check_program(program: 'ast.Program', *, generated: 'Optional[bool]' = None) -> 'CheckedProgram':
    """Check a parsed program.

    Args:
        program: Parsed program.
        generated: Check in generated mode, see :class:`Checker`.

    Returns:
        The resolved, typed program.

    Raises:
        CheckError: On the first violation in declaration order.

    """
    return Checker(program, generated).run()
