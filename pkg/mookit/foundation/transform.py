# -*- coding: utf-8 -*-
# pylint: disable=too-many-return-statements,too-many-branches
"""Transformation Engine
===========================

:mod:`mookit.foundation.transform` contains :class:`Transformer`,
which turns a checked MiniOO program into its componentised form.
For every transformable class ``A`` it emits

* the interfaces ``A_O_Int`` (instance members) and ``A_C_Int``
  (former static members);
* the local implementations ``A_O_Local`` and the singleton
  ``A_C_Local``;
* the factories ``A_O_Factory`` (``make``/``init``) and
  ``A_C_Factory`` (``discover``/``clinit``);
* one ``A_O_Proxy_P`` / ``A_C_Proxy_P`` pair per protocol ``P``.

All code of transformable classes is rewritten to use interface
types only: fields go through accessors, static members through
``discover()``, and allocations through the object factory. Classes
that are not transformable are emitted in their original form.

"""
import collections
from typing import TYPE_CHECKING

from mookit.corekit.infoclass import Info
from mookit.foundation.naming import (class_factory, getter, instance_interface, local_object,
                                      local_static, object_factory, object_proxy, setter,
                                      static_interface, static_proxy, TempFactory)
from mookit.foundation.transformable import compute_transformable_set
from mookit.lang import ast
from mookit.utilities.exceptions import AccessorCollision, TransformError, UnknownProtocol
from mookit.utilities.logging import logger

if TYPE_CHECKING:
    from typing import DefaultDict, Iterable, Optional

    from mookit.foundation.transformable import TransformableSet
    from mookit.lang.ast import Expr_, Stmt_
    from mookit.lang.checker import CheckedProgram

    #: Operand of a sequenced evaluation: new type, setup statements, expression.
    Operand = tuple[Optional[str], list[Stmt_], Expr_]

__all__ = ['transform_program', 'Transformer', 'ClassFamily', 'HANDLE', 'THAT']

#: Field of proxies holding the remote reference.
HANDLE = '$handle'
#: Parameter of ``init``/``clinit`` receiving the object under initialisation.
THAT = 'that'
#: Static singleton of local static implementations.
SINGLETON = 'me'


class ClassFamily(Info):
    """Artifacts generated for one source class."""

    #: Source class name.
    name: 'str'
    #: Instance interface ``A_O_Int``.
    instance_interface: 'ast.InterfaceDecl'
    #: Static interface ``A_C_Int``.
    static_interface: 'ast.InterfaceDecl'
    #: Local instance implementation ``A_O_Local``.
    local_object: 'ast.ClassDecl'
    #: Local static implementation ``A_C_Local``.
    local_static: 'ast.ClassDecl'
    #: Object factory ``A_O_Factory``.
    object_factory: 'ast.ClassDecl'
    #: Class factory ``A_C_Factory``.
    class_factory: 'ast.ClassDecl'
    #: Proxies, ``A_O_Proxy_P`` then ``A_C_Proxy_P`` per protocol.
    proxies: 'tuple[ast.ClassDecl, ...]' = ()

    if TYPE_CHECKING:
        def __init__(self, name: 'str', instance_interface: 'ast.InterfaceDecl', static_interface: 'ast.InterfaceDecl', local_object: 'ast.ClassDecl', local_static: 'ast.ClassDecl', object_factory: 'ast.ClassDecl', class_factory: 'ast.ClassDecl', proxies: 'tuple[ast.ClassDecl, ...]' = ()) -> 'None': ...  # pylint: disable=unused-argument,super-init-not-called,multiple-statements,line-too-long,redefined-outer-name

    @property
    def classes(self) -> 'tuple[ast.ClassDecl, ...]':
        """Generated classes in emission order."""
        return (self.local_object, self.local_static, self.object_factory, self.class_factory) + self.proxies

    @property
    def interfaces(self) -> 'tuple[ast.InterfaceDecl, ...]':
        """Generated interfaces in emission order."""
        return (self.instance_interface, self.static_interface)


def _pure(expr: 'Expr_') -> 'bool':
    """Check if evaluating ``expr`` has no effect and cannot observe one."""
    return isinstance(expr, (ast.Literal, ast.Var, ast.This))


def _method(name: 'str', params: 'Iterable[ast.Param]', ret: 'str', stmts: 'Iterable[Stmt_]',
            *, static: 'bool' = False) -> 'ast.MethodDecl':
    return ast.MethodDecl(name, tuple(params), ret, visibility='public', is_static=static,
                          body=ast.Block(tuple(stmts)))


def _signature(method: 'ast.MethodDecl') -> 'ast.MethodDecl':
    return ast.MethodDecl(method.name, method.params, method.ret)


class _Rewriter:
    """Body rewriter of one transformable class.

    Args:
        transformer: Owning transformer.
        cls: Source class name.
        mode: Body kind, one of ``instance`` (``A_O_Local`` method),
            ``static`` (``A_C_Local`` method), ``init`` (object factory)
            and ``clinit`` (class factory).

    """

    def __init__(self, transformer: 'Transformer', cls: 'str', mode: 'str') -> 'None':
        self.tf = transformer
        self.cls = cls
        self.mode = mode
        self.temps = TempFactory()

    ##########################################################################
    # Methods.
    ##########################################################################

    def body(self, block: 'ast.Block', prologue: 'Iterable[Stmt_]' = ()) -> 'ast.Block':
        """Rewrite a method, constructor or static initialiser body."""
        stmts = list(prologue)
        for stmt in block.stmts:
            stmts.extend(self.stmt(stmt))
        return ast.Block(tuple(stmts))

    def stmt(self, stmt: 'Stmt_') -> 'list[Stmt_]':
        """Rewrite a statement into a statement list."""
        if isinstance(stmt, ast.Block):
            return [self.body(stmt)]

        if isinstance(stmt, ast.LocalDecl):
            if stmt.init is None:
                return [ast.LocalDecl(self.tf.type_of(stmt.type), stmt.name)]
            setup, init = self.expr(stmt.init)
            return setup + [ast.LocalDecl(self.tf.type_of(stmt.type), stmt.name, init)]

        if isinstance(stmt, ast.Assign):
            return self._assign(stmt.target, stmt.value)

        if isinstance(stmt, ast.ExprStmt):
            setup, expr = self.expr(stmt.expr)
            if isinstance(expr, ast.Var):
                return setup
            return setup + [ast.ExprStmt(expr)]

        if isinstance(stmt, ast.Print):
            setup, expr = self.expr(stmt.expr)
            return setup + [ast.Print(expr)]

        if isinstance(stmt, ast.Return):
            if stmt.value is None:
                return [ast.Return()]
            setup, expr = self.expr(stmt.value)
            return setup + [ast.Return(expr)]

        if isinstance(stmt, ast.If):
            setup, cond = self.expr(stmt.cond)
            orelse = None if stmt.orelse is None else self._nested(stmt.orelse)
            return setup + [ast.If(cond, self._nested(stmt.then), orelse=orelse)]

        if isinstance(stmt, ast.While):
            setup, cond = self.expr(stmt.cond)
            body = self._nested(stmt.body)
            if not setup:
                return [ast.While(cond, body)]
            stmts = body.stmts if isinstance(body, ast.Block) else (body,)
            again = tuple(ast.Assign(ast.Var(item.name), item.init)
                          if isinstance(item, ast.LocalDecl) else item for item in setup)
            return setup + [ast.While(cond, ast.Block(stmts + again))]

        if isinstance(stmt, ast.SuperCall):
            base = self.tf.superclass(self.cls)
            setup, args = self._sequence([self.operand(arg) for arg in stmt.args])
            call = ast.StaticCall(object_factory(base), 'init', (ast.Var(THAT),) + tuple(args))  # type: ignore[arg-type]
            return setup + [ast.ExprStmt(call)]

        raise TransformError(f'unknown statement {type(stmt).__name__}')

    def expr(self, node: 'Expr_') -> 'tuple[list[Stmt_], Expr_]':
        """Rewrite an expression into setup statements and a residual expression."""
        if isinstance(node, ast.Literal):
            return [], ast.Literal(node.value, node.kind)

        if isinstance(node, ast.This):
            return [], self._this()

        if isinstance(node, ast.Var):
            return [], ast.Var(node.name)

        if isinstance(node, ast.Unary):
            setup, operand = self.expr(node.operand)
            return setup, ast.Unary(node.op, operand)

        if isinstance(node, ast.Binary):
            if node.op in ('&&', '||'):
                return self._short_circuit(node)
            setup, (left, right) = self._sequence([self.operand(node.left), self.operand(node.right)])
            return setup, ast.Binary(node.op, left, right)

        if isinstance(node, ast.FieldGet):
            setup, target = self.expr(node.target)
            if self.tf.is_transformable(node.owner):  # type: ignore[arg-type]
                return setup, self._invoke(target, getter(node.name), ())
            return setup, ast.FieldGet(target, node.name)

        if isinstance(node, ast.StaticGet):
            if self.tf.is_transformable(node.owner):  # type: ignore[arg-type]
                return [], self._invoke(self._receiver(node.owner), getter(node.name), ())  # type: ignore[arg-type]
            return [], ast.StaticGet(node.cls, node.name)

        if isinstance(node, ast.Call):
            target = self._this() if node.target is None else node.target
            operands = [self.operand(target)] + [self.operand(arg) for arg in node.args]
            setup, (receiver, *args) = self._sequence(operands)
            return setup, self._invoke(receiver, node.name, tuple(args))

        if isinstance(node, ast.StaticCall):
            args_ = [self.operand(arg) for arg in node.args]
            if self.tf.is_transformable(node.owner):  # type: ignore[arg-type]
                receiver = self._receiver(node.owner)  # type: ignore[arg-type]
                operands = [(static_interface(node.owner), [], receiver)] + args_  # type: list[Operand]
                setup, (target, *args) = self._sequence(operands)
                return setup, self._invoke(target, node.name, tuple(args))
            setup, args = self._sequence(args_)
            return setup, ast.StaticCall(node.cls, node.name, tuple(args))

        if isinstance(node, ast.New):
            setup, args = self._sequence([self.operand(arg) for arg in node.args])
            if not self.tf.is_transformable(node.cls):
                return setup, ast.New(node.cls, tuple(args))
            temp = self.temps.fresh()
            factory = object_factory(node.cls)
            setup.append(ast.LocalDecl(instance_interface(node.cls), temp, ast.StaticCall(factory, 'make', ())))
            setup.append(ast.ExprStmt(ast.StaticCall(factory, 'init', (ast.Var(temp),) + tuple(args))))
            return setup, ast.Var(temp)

        raise TransformError(f'cannot rewrite {type(node).__name__}')

    def operand(self, node: 'Expr_') -> 'Operand':
        """Rewrite an operand, keeping its (rewritten) type for spilling."""
        setup, expr = self.expr(node)
        type_ = None if node.type is None else self.tf.type_of(node.type)
        return type_, setup, expr

    ##########################################################################
    # Utilities.
    ##########################################################################

    def _this(self) -> 'Expr_':
        return ast.Var(THAT) if self.mode == 'init' else ast.This()

    def _invoke(self, target: 'Expr_', name: 'str', args: 'tuple[Expr_, ...]') -> 'Expr_':
        """Instance call; calls on the current object are written bare."""
        if isinstance(target, ast.This):
            return ast.Call(None, name, args)
        return ast.Call(target, name, args)

    def _receiver(self, owner: 'str') -> 'Expr_':
        """Object implementing the static members of ``owner``."""
        if owner == self.cls and self.mode == 'static':
            return ast.This()
        if owner == self.cls and self.mode == 'clinit':
            return ast.Var(THAT)
        return ast.StaticCall(class_factory(owner), 'discover', ())

    def _nested(self, stmt: 'Stmt_') -> 'Stmt_':
        stmts = self.stmt(stmt)
        if len(stmts) == 1 and not isinstance(stmts[0], ast.LocalDecl):
            return stmts[0]
        return ast.Block(tuple(stmts))

    def _sequence(self, operands: 'list[Operand]') -> 'tuple[list[Stmt_], list[Expr_]]':
        """Flatten operand setups, spilling impure operands evaluated before a later setup."""
        setup = []  # type: list[Stmt_]
        exprs = []  # type: list[Expr_]
        for index, (type_, stmts, expr) in enumerate(operands):
            setup.extend(stmts)
            if not _pure(expr) and any(item[1] for item in operands[index + 1:]):
                if type_ is None:
                    raise TransformError(f'cannot spill untyped operand {type(expr).__name__}')
                temp = self.temps.fresh()
                setup.append(ast.LocalDecl(type_, temp, expr))
                expr = ast.Var(temp)
            exprs.append(expr)
        return setup, exprs

    def _short_circuit(self, node: 'ast.Binary') -> 'tuple[list[Stmt_], Expr_]':
        setup, left = self.expr(node.left)
        then, right = self.expr(node.right)
        if not then:
            return setup, ast.Binary(node.op, left, right)
        temp = self.temps.fresh()
        cond = ast.Var(temp) if node.op == '&&' else ast.Unary('!', ast.Var(temp))  # type: Expr_
        setup.append(ast.LocalDecl('bool', temp, left))
        setup.append(ast.If(cond, ast.Block(tuple(then) + (ast.Assign(ast.Var(temp), right),))))
        return setup, ast.Var(temp)

    def _assign(self, target: 'Expr_', value: 'Expr_') -> 'list[Stmt_]':
        if isinstance(target, ast.Var):
            setup, expr = self.expr(value)
            return setup + [ast.Assign(ast.Var(target.name), expr)]

        if isinstance(target, ast.FieldGet):
            setup, (obj, val) = self._sequence([self.operand(target.target), self.operand(value)])
            if self.tf.is_transformable(target.owner):  # type: ignore[arg-type]
                return setup + [ast.ExprStmt(self._invoke(obj, setter(target.name), (val,)))]
            return setup + [ast.Assign(ast.FieldGet(obj, target.name), val)]

        if isinstance(target, ast.StaticGet):
            if self.tf.is_transformable(target.owner):  # type: ignore[arg-type]
                receiver = self._receiver(target.owner)  # type: ignore[arg-type]
                operands = [(static_interface(target.owner), [], receiver), self.operand(value)]  # type: list[Operand]
                setup, (obj, val) = self._sequence(operands)
                return setup + [ast.ExprStmt(self._invoke(obj, setter(target.name), (val,)))]
            setup, expr = self.expr(value)
            return setup + [ast.Assign(ast.StaticGet(target.cls, target.name), expr)]

        raise TransformError(f'invalid assignment target {type(target).__name__}')


class Transformer:
    """Componentising transformation of a checked program.

    Args:
        checked: Checked program.
        protocols: Proxy protocols to generate.
        tset: Precomputed transformable set.

    """

    #: DefaultDict[str, tuple[str, str]]: Protocol registry, mapping proxy
    #: protocol names to the module and class name of their wire codec.
    __protocol__ = collections.defaultdict(
        lambda: ('mookit.distrib.wire', 'UnknownCodec'),
        {
            'RAF': ('mookit.distrib.wire', 'RAFCodec'),
        }
    )  # type: DefaultDict[str, tuple[str, str]]

    def __init__(self, checked: 'CheckedProgram', protocols: 'Iterable[str]' = (),
                 tset: 'Optional[TransformableSet]' = None) -> 'None':
        self.checked = checked
        self.protocols = tuple(protocols)
        for protocol in self.protocols:
            if protocol not in self.__protocol__:
                raise UnknownProtocol(f'unknown protocol {protocol!r}')

        #: Transformable set of the program.
        self.tset = compute_transformable_set(checked, pin_subclasses=True) if tset is None else tset
        #: Generated artifacts per source class.
        self.families = collections.OrderedDict()  # type: collections.OrderedDict[str, ClassFamily]

        self._resolved = {decl.name: decl for decl in checked.program.classes}
        self._source = {decl.name: decl for decl in checked.source.classes}
        self._props = {}  # type: dict[str, ast.ClassDecl]

    @classmethod
    def register(cls, protocol: 'str', module: 'str', class_: 'str') -> 'None':
        """Register a new proxy protocol.

        Args:
            protocol: protocol name, used as proxy class suffix
            module: module name of the wire codec
            class\\_: class name of the wire codec

        """
        cls.__protocol__[protocol] = (module, class_)

    ##########################################################################
    # Properties.
    ##########################################################################

    def is_transformable(self, name: 'Optional[str]') -> 'bool':
        """Check if class ``name`` is transformed."""
        return name is not None and self.tset.is_transformable(name)

    def type_of(self, type_: 'str') -> 'str':
        """Type as seen by transformed code."""
        return instance_interface(type_) if self.is_transformable(type_) else type_

    def superclass(self, name: 'str') -> 'str':
        """Superclass of a class that must have one."""
        base = self._resolved[name].superclass
        if base is None:
            raise TransformError(f'class {name} has no superclass')
        return base

    ##########################################################################
    # Methods.
    ##########################################################################

    def propertyize(self, name: 'str') -> 'ast.ClassDecl':
        """Turn fields into accessor properties and publicise members.

        The result keeps the class name; fields are private with
        interface types, accessors precede the rewritten methods, and
        static members are represented by static accessors and methods.
        Constructors and the static initialiser are kept as resolved
        and moved to the factories later.

        """
        if name in self._props:
            return self._props[name]
        decl = self._resolved[name]
        if not self.is_transformable(name):
            raise TransformError(f'class {name} is not transformable')

        result = {}  # type: dict[bool, tuple[list[ast.FieldDecl], list[ast.MethodDecl]]]
        for static in (False, True):
            fields = decl.static_fields if static else decl.fields
            methods = decl.static_methods if static else decl.methods
            mode = 'static' if static else 'instance'

            new_fields = []  # type: list[ast.FieldDecl]
            accessors = []  # type: list[ast.MethodDecl]
            for field in fields:
                type_ = self.type_of(field.type)
                new_fields.append(ast.FieldDecl(field.name, type_, visibility='private', is_final=field.is_final))
                accessors.append(_method(getter(field.name), (), type_,
                                         [ast.Return(ast.Var(field.name))], static=static))
                accessors.append(_method(setter(field.name), (ast.Param(field.name, type_),), 'void',
                                         [ast.Assign(ast.FieldGet(ast.This(), field.name), ast.Var(field.name))],
                                         static=static))

            rewritten = []  # type: list[ast.MethodDecl]
            for method in methods:
                params = tuple(ast.Param(param.name, self.type_of(param.type)) for param in method.params)
                body = _Rewriter(self, name, mode).body(method.body)  # type: ignore[arg-type]
                rewritten.append(_method(method.name, params, self.type_of(method.ret), body.stmts, static=static))

            taken = {method.name for method in methods}
            for accessor in accessors:
                if accessor.name in taken:
                    raise AccessorCollision(f'accessor {name}.{accessor.name} collides with a method')
                taken.add(accessor.name)
            result[static] = (new_fields, accessors + rewritten)

        ctors = tuple(ctor._replace(visibility='public') for ctor in decl.constructors)
        prop = ast.ClassDecl(name, superclass=decl.superclass,
                             fields=tuple(result[False][0]), methods=tuple(result[False][1]),
                             constructors=ctors,
                             static_fields=tuple(result[True][0]), static_methods=tuple(result[True][1]),
                             static_init=decl.static_init)
        self._props[name] = prop
        return prop

    def extract_instance_interface(self, name: 'str') -> 'ast.InterfaceDecl':
        """Build ``A_O_Int`` from the public instance members."""
        prop = self.propertyize(name)
        inherited = set()  # type: set[tuple[str, int]]
        if prop.superclass is not None:
            inherited = {(method.name, method.arity) for method in self._instance_methods(prop.superclass)}
        methods = tuple(_signature(method) for method in prop.methods
                        if (method.name, method.arity) not in inherited)
        extends = () if prop.superclass is None else (instance_interface(prop.superclass),)
        return ast.InterfaceDecl(instance_interface(name), extends=extends, methods=methods)

    def extract_static_interface(self, name: 'str') -> 'ast.InterfaceDecl':
        """Build ``A_C_Int`` with the former static members as instance signatures."""
        prop = self.propertyize(name)
        methods = tuple(_signature(method) for method in prop.static_methods)
        return ast.InterfaceDecl(static_interface(name), methods=methods)

    def generate_local_impls(self, name: 'str') -> 'tuple[ast.ClassDecl, ast.ClassDecl]':
        """Build ``A_O_Local`` and the singleton ``A_C_Local``."""
        prop = self.propertyize(name)
        empty = ast.Block(())

        obj = ast.ClassDecl(
            local_object(name),
            superclass=None if prop.superclass is None else local_object(prop.superclass),
            interfaces=(instance_interface(name),),
            fields=prop.fields,
            methods=prop.methods,
            constructors=(ast.CtorDecl((), visibility='public', body=empty),),
        )

        impl = local_static(name)
        iface = static_interface(name)
        cls = ast.ClassDecl(
            impl,
            interfaces=(iface,),
            fields=prop.static_fields,
            methods=tuple(method._replace(is_static=False) for method in prop.static_methods),
            constructors=(ast.CtorDecl((), visibility='public', body=empty),),
            static_fields=(ast.FieldDecl(SINGLETON, iface, visibility='public', is_static=True),),
            static_methods=(_method(getter(SINGLETON), (), iface,
                                    [ast.Return(ast.Var(SINGLETON))], static=True),),
            static_init=ast.Block((ast.Assign(ast.Var(SINGLETON), ast.New(impl, ())),)),
        )
        return obj, cls

    def generate_factories(self, name: 'str') -> 'tuple[ast.ClassDecl, ast.ClassDecl]':
        """Build ``A_O_Factory`` and ``A_C_Factory``."""
        decl = self._resolved[name]
        that_o = ast.Param(THAT, instance_interface(name))
        that_c = ast.Param(THAT, static_interface(name))
        self._reject_that(decl)

        make = _method('make', (), instance_interface(name),
                       [ast.Return(ast.Intrinsic('policy_create', (ast.Literal(name, 'string'),)))], static=True)
        inits = []  # type: list[ast.MethodDecl]
        implicit = ()  # type: tuple[Stmt_, ...]
        if decl.superclass is not None:
            implicit = (ast.ExprStmt(ast.StaticCall(object_factory(decl.superclass), 'init', (ast.Var(THAT),))),)
        for ctor in decl.constructors:
            rewriter = _Rewriter(self, name, 'init')
            body = ctor.body  # type: ast.Block
            explicit = body.stmts and isinstance(body.stmts[0], ast.SuperCall)
            block = rewriter.body(body, () if explicit else implicit)  # type: ignore[arg-type]
            params = (that_o,) + tuple(ast.Param(param.name, self.type_of(param.type)) for param in ctor.params)
            inits.append(_method('init', params, 'void', block.stmts, static=True))
        if not decl.constructors:
            inits.append(_method('init', (that_o,), 'void', implicit, static=True))
        obj = ast.ClassDecl(object_factory(name), static_methods=(make,) + tuple(inits))

        discover = _method('discover', (), static_interface(name),
                           [ast.Return(ast.Intrinsic('policy_discover', (ast.Literal(name, 'string'),)))], static=True)
        methods = [discover]
        if decl.static_init is not None:
            block = _Rewriter(self, name, 'clinit').body(decl.static_init)
            methods.append(_method('clinit', (that_c,), 'void', block.stmts, static=True))
        entry = self.checked.program.entry
        if entry is not None and entry[0] == name:
            methods.append(self._trampoline(name, entry[1]))
        cls = ast.ClassDecl(class_factory(name), static_methods=tuple(methods))
        return obj, cls

    def generate_proxies(self, name: 'str', protocols: 'Optional[Iterable[str]]' = None) -> 'list[ast.ClassDecl]':
        """Build ``A_O_Proxy_P`` and ``A_C_Proxy_P`` for every protocol ``P``."""
        proxies = []  # type: list[ast.ClassDecl]
        for protocol in (self.protocols if protocols is None else tuple(protocols)):
            if protocol not in self.__protocol__:
                raise UnknownProtocol(f'unknown protocol {protocol!r}')
            proxies.append(self._proxy(object_proxy(name, protocol), instance_interface(name),
                                       self._instance_methods(name)))
            proxies.append(self._proxy(static_proxy(name, protocol), static_interface(name),
                                       list(self.propertyize(name).static_methods)))
        return proxies

    def rewrite_references(self) -> 'ast.Program':
        """Program with every transformable class propertyized and rewritten.

        Non-transformable classes are kept in their source form.

        """
        classes = tuple(self.propertyize(decl.name) if self.is_transformable(decl.name) else self._source[decl.name]
                        for decl in self.checked.program.classes)
        return self.checked.source._replace(classes=classes)

    def run(self) -> 'ast.Program':
        """Transform the whole program."""
        for decl in self.checked.program.classes:
            if not self.is_transformable(decl.name):
                continue
            if decl.superclass is not None and not self.is_transformable(decl.superclass):
                raise TransformError(f'class {decl.name} extends non-transformable class {decl.superclass}')

        classes = []  # type: list[ast.ClassDecl]
        interfaces = []  # type: list[ast.InterfaceDecl]
        for decl in self.checked.program.classes:
            if not self.is_transformable(decl.name):
                classes.append(self._source[decl.name])
                continue
            family = self.family(decl.name)
            classes.extend(family.classes)
            interfaces.extend(family.interfaces)

        entry = self.checked.source.entry
        if entry is not None and self.is_transformable(entry[0]):
            entry = (class_factory(entry[0]), entry[1])
        program = ast.Program(tuple(classes), tuple(interfaces), entry)
        logger.info('transformed %d of %d classes (protocols: %s)', len(self.families),
                    len(self.checked.program.classes), ', '.join(self.protocols) or 'none')
        return program

    def family(self, name: 'str') -> 'ClassFamily':
        """Generate (or fetch) the artifact family of class ``name``."""
        if name not in self.families:
            local_obj, local_cls = self.generate_local_impls(name)
            obj_factory, cls_factory = self.generate_factories(name)
            self.families[name] = ClassFamily(
                name=name,
                instance_interface=self.extract_instance_interface(name),
                static_interface=self.extract_static_interface(name),
                local_object=local_obj,
                local_static=local_cls,
                object_factory=obj_factory,
                class_factory=cls_factory,
                proxies=tuple(self.generate_proxies(name)),
            )
            logger.debug('generated artifact family of %s', name)
        return self.families[name]

    ##########################################################################
    # Utilities.
    ##########################################################################

    def _instance_methods(self, name: 'str') -> 'list[ast.MethodDecl]':
        """Instance methods of ``A_O_Int`` including inherited ones, own first."""
        methods = []  # type: list[ast.MethodDecl]
        seen = set()  # type: set[tuple[str, int]]
        current = name  # type: Optional[str]
        while current is not None:
            prop = self.propertyize(current)
            for method in prop.methods:
                if (method.name, method.arity) not in seen:
                    seen.add((method.name, method.arity))
                    methods.append(method)
            current = prop.superclass
        return methods

    @staticmethod
    def _proxy(name: 'str', iface: 'str', methods: 'list[ast.MethodDecl]') -> 'ast.ClassDecl':
        handle = ast.FieldGet(ast.This(), HANDLE)
        impls = []  # type: list[ast.MethodDecl]
        for method in methods:
            args = (handle, ast.Literal(method.name, 'string')) + tuple(ast.Var(param.name) for param in method.params)
            call = ast.Intrinsic('remote_invoke', args)
            stmt = ast.ExprStmt(call) if method.ret == 'void' else ast.Return(call)  # type: Stmt_
            impls.append(_method(method.name, method.params, method.ret, [stmt]))
        return ast.ClassDecl(
            name,
            interfaces=(iface,),
            fields=(ast.FieldDecl(HANDLE, 'ref', visibility='public'),),
            methods=tuple(impls),
            constructors=(ast.CtorDecl((), visibility='public', body=ast.Block(())),),
        )

    def _trampoline(self, name: 'str', method: 'str') -> 'ast.MethodDecl':
        if method in ('discover', 'clinit'):
            raise TransformError(f'entry method {name}.{method} clashes with the class factory')
        decl = self._resolved[name].method(method, static=True)
        ret = 'void' if decl is None else self.type_of(decl.ret)
        call = ast.Call(ast.StaticCall(class_factory(name), 'discover', ()), method, ())
        stmt = ast.ExprStmt(call) if ret == 'void' else ast.Return(call)  # type: Stmt_
        return _method(method, (), ret, [stmt], static=True)

    def _reject_that(self, decl: 'ast.ClassDecl') -> 'None':
        """Constructor and static initialiser locals must not shadow ``that``."""
        names = [param.name for ctor in decl.constructors for param in ctor.params]
        bodies = [ctor.body for ctor in decl.constructors] + [decl.static_init]
        stack = [body for body in bodies if body is not None]  # type: list[object]
        while stack:
            node = stack.pop()
            if isinstance(node, ast.LocalDecl):
                names.append(node.name)
            if isinstance(node, ast.Node):
                stack.extend(node[key] for key in node.__fields__ if key != 'pos')
            elif isinstance(node, tuple):
                stack.extend(node)
        if THAT in names:
            raise TransformError(f'class {decl.name} declares {THAT!r} in a constructor or static initialiser')


def transform_program(checked: 'CheckedProgram', protocols: 'Iterable[str]' = ()) -> 'ast.Program':
    """Transform a checked program.

    Args:
        checked: Checked program.
        protocols: Proxy protocols to generate, e.g. ``['RAF']``.

    Returns:
        The componentised program; it checks in generated mode.

    Raises:
        TransformError: On name clashes.
        UnknownProtocol: If a protocol is not registered.

    """
    return Transformer(checked, protocols).run()
