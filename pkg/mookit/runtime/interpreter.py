# -*- coding: utf-8 -*-
# pylint: disable=too-many-return-statements,too-many-branches
"""Reference Interpreter
===========================

:mod:`mookit.runtime.interpreter` contains :class:`Interpreter`, a
tree-walking evaluator of checked MiniOO programs, and
:func:`run_program` / :func:`trace_equal`, which make the ordered
print trace the observable of a program run.

Evaluation is strictly left to right. The static initialiser of a
class runs lazily and once, at the first access to a static member
the class declares, before any operand of that access is evaluated;
a re-entrant access during initialisation observes the partial state.

Objects are sealed once construction finishes, i.e. after the
outermost constructor, or after the outermost factory ``init`` /
``clinit`` for generated local implementations. Final fields of a
sealed object cannot be written.

"""
from typing import TYPE_CHECKING

from mookit.foundation.naming import class_factory, local_static
from mookit.lang import ast
from mookit.runtime.builtins import lookup_native
from mookit.runtime.hooks import RuntimeHooks
from mookit.runtime.values import Obj, Trace, default, divide, remainder, render, wrap
from mookit.utilities.decorators import deep_stack
from mookit.utilities.exceptions import (FinalFieldWrite, MooRuntimeError, NullDereference,
                                         StepBudgetExceeded)
from mookit.utilities.logging import logger

if TYPE_CHECKING:
    from typing import Iterable, Optional, Union

    from mookit.lang.ast import Expr_, Pos, Stmt_
    from mookit.lang.checker import CheckedProgram
    from mookit.runtime.values import Value

__all__ = ['run_program', 'trace_equal', 'Interpreter', 'DEFAULT_STEP_BUDGET']

#: Default number of interpreter steps before a run is aborted.
DEFAULT_STEP_BUDGET = 10**7

#: Field of generated proxies holding their remote reference.
PROXY_HANDLE = '$handle'

_RUNNING = 'running'
_DONE = 'done'


class _Return:
    """Return signal of a method body."""

    __slots__ = ('value',)

    def __init__(self, value: 'Value') -> 'None':
        self.value = value


class _Frame:
    """Activation record."""

    __slots__ = ('this', 'locals')

    def __init__(self, this: 'Optional[Obj]' = None, local: 'Optional[dict[str, Value]]' = None) -> 'None':
        self.this = this
        self.locals = {} if local is None else local


class Interpreter:
    """MiniOO interpreter of one address space.

    Args:
        checked: Checked program.
        hooks: Runtime hooks; :class:`~mookit.runtime.hooks.RuntimeHooks`
            realises a single address space.
        step_budget: Maximum number of steps (statements and calls).
        trace: Trace to append printed lines to.

    """

    def __init__(self, checked: 'CheckedProgram', hooks: 'Optional[RuntimeHooks]' = None, *,
                 step_budget: 'int' = DEFAULT_STEP_BUDGET, trace: 'Optional[Trace]' = None) -> 'None':
        #: Checked program.
        self.checked = checked
        #: Resolved program.
        self.program = checked.program
        #: Hierarchy index.
        self.table = checked.table
        #: Runtime hooks.
        self.hooks = RuntimeHooks() if hooks is None else hooks
        #: Step budget.
        self.step_budget = step_budget
        #: Steps taken so far.
        self.steps = 0
        #: Printed lines.
        self.trace = Trace() if trace is None else trace

        #: Static field stores per class.
        self.statics = {}  # type: dict[str, dict[str, Value]]
        self._static_state = {}  # type: dict[str, str]
        self._singletons = {}  # type: dict[str, Obj]

    ##########################################################################
    # Methods.
    ##########################################################################

    @deep_stack
    def run(self) -> 'Trace':
        """Execute the entry method to completion.

        Raises:
            MooRuntimeError: On runtime errors, with source position.

        """
        if self.program.entry is None:
            raise MooRuntimeError('program has no entry method')
        cls, name = self.program.entry
        logger.debug('running %s.%s (budget %d)', cls, name, self.step_budget)
        try:
            self.call_static(cls, name, [])
        except RecursionError:
            raise MooRuntimeError('call stack exhausted') from None
        return self.trace

    def instantiate(self, cls: 'str') -> 'Obj':
        """Create an instance with the parameterless constructor."""
        return self.construct(cls, [])

    def construct(self, cls: 'str', args: 'list[Value]', pos: 'Pos' = None) -> 'Obj':
        """Create an instance of class ``cls``."""
        self._tick(pos)
        decl = self.table.classes.get(cls)
        if decl is None:
            raise MooRuntimeError(f'unknown class {cls}', pos=pos)
        if decl.is_builtin:
            obj = Obj(cls, native=lookup_native(cls).construct(self, *args))
            obj.sealed = True
            return obj
        obj = Obj(cls, {field.name: default(field.type) for _, field in self.table.instance_fields(cls)})
        self._run_ctor(decl, obj, args, pos)
        if not cls.endswith(('_O_Local', '_C_Local')):
            obj.sealed = True
        return obj

    def local_singleton(self, cls: 'str') -> 'Obj':
        """Static implementation of transformed class ``cls`` in this address space.

        The singleton is created through ``A_C_Local.get_me()``; the
        class factory's ``clinit`` runs once, on first discovery. A
        discovery during ``clinit`` returns the partially initialised
        singleton.

        """
        found = self._singletons.get(cls)
        if found is not None:
            return found
        obj = self.call_static(local_static(cls), 'get_me', [])
        if not isinstance(obj, Obj):
            raise MooRuntimeError(f'{local_static(cls)}.get_me returned no object')
        self._singletons[cls] = obj
        factory = class_factory(cls)
        if factory in self.table.classes and self.table.classes[factory].method('clinit', static=True):
            self.call_static(factory, 'clinit', [obj])
        else:
            obj.sealed = True
        return obj

    def invoke(self, obj: 'Obj', name: 'str', args: 'list[Value]', pos: 'Pos' = None) -> 'Value':
        """Invoke instance method ``name`` on ``obj`` (virtual dispatch)."""
        self._tick(pos)
        decl = self.table.classes.get(obj.cls)
        if decl is None:
            raise MooRuntimeError(f'unknown class {obj.cls}', pos=pos)
        if decl.is_builtin:
            return lookup_native(obj.cls).invoke(self, obj, name, args)
        found = self.table.find_method(obj.cls, name, len(args))
        if found is None:
            raise MooRuntimeError(f'no method {obj.cls}.{name}/{len(args)}', pos=pos)
        owner, method = found
        if method.is_native:
            return lookup_native(owner).invoke(self, obj, name, args)
        return self._execute(method, obj, args)

    def call_static(self, cls: 'str', name: 'str', args: 'list[Value]', pos: 'Pos' = None) -> 'Value':
        """Invoke static method ``name`` of class ``cls``."""
        self._tick(pos)
        self.ensure_static(cls, pos)
        decl = self.table.classes.get(cls)
        if decl is None:
            raise MooRuntimeError(f'unknown class {cls}', pos=pos)
        if decl.is_builtin:
            return lookup_native(cls).invoke(self, None, name, args)
        found = self.table.find_method(cls, name, len(args), static=True)
        if found is None:
            raise MooRuntimeError(f'no static method {cls}.{name}/{len(args)}', pos=pos)
        owner, method = found
        if method.is_native:
            return lookup_native(owner).invoke(self, None, name, args)

        that = args[0] if args and self._initialises(cls, name) else None
        if not isinstance(that, Obj):
            return self._execute(method, None, args)
        that.depth += 1
        try:
            result = self._execute(method, None, args)
        finally:
            that.depth -= 1
        if that.depth == 0:
            self.seal(that)
        return result

    def ensure_static(self, cls: 'str', pos: 'Pos' = None) -> 'None':
        """Run the static initialisation of class ``cls`` unless started."""
        if cls in self._static_state:
            return
        decl = self.table.classes.get(cls)
        if decl is None:
            raise MooRuntimeError(f'unknown class {cls}', pos=pos)
        self._static_state[cls] = _RUNNING
        store = {field.name: default(field.type) for field in decl.static_fields}
        if decl.is_builtin:
            store.update(lookup_native(cls).statics)
        self.statics[cls] = store
        if decl.static_init is not None:
            logger.debug('static initialisation of %s', cls)
            self._exec(decl.static_init, _Frame())
        self._static_state[cls] = _DONE

    def seal(self, obj: 'Obj') -> 'None':
        """Finish construction of ``obj``."""
        if PROXY_HANDLE in obj.fields:
            self.hooks.seal(self, obj)
        else:
            obj.sealed = True

    ##########################################################################
    # Utilities.
    ##########################################################################

    def _tick(self, pos: 'Pos') -> 'None':
        self.steps += 1
        if self.steps > self.step_budget:
            raise StepBudgetExceeded(f'step budget of {self.step_budget} exceeded', pos=pos)

    @staticmethod
    def _initialises(cls: 'str', name: 'str') -> 'bool':
        return ((cls.endswith('_O_Factory') and name == 'init')
                or (cls.endswith('_C_Factory') and name == 'clinit'))

    def _execute(self, method: 'ast.MethodDecl', this: 'Optional[Obj]', args: 'list[Value]') -> 'Value':
        frame = _Frame(this, {param.name: value for param, value in zip(method.params, args)})
        signal = self._exec(method.body, frame)  # type: ignore[arg-type]
        return signal.value if signal is not None else None

    def _run_ctor(self, decl: 'ast.ClassDecl', obj: 'Obj', args: 'list[Value]', pos: 'Pos') -> 'None':
        base = None if decl.superclass is None else self.table.classes[decl.superclass]
        ctor = decl.constructor(len(args))
        if ctor is None:
            if decl.constructors or args:
                raise MooRuntimeError(f'no constructor {decl.name}/{len(args)}', pos=pos)
            if base is not None:
                self._run_ctor(base, obj, [], pos)
            return

        frame = _Frame(obj, {param.name: value for param, value in zip(ctor.params, args)})
        stmts = ctor.body.stmts  # type: ignore[union-attr]
        if stmts and isinstance(stmts[0], ast.SuperCall):
            values = [self._eval(arg, frame) for arg in stmts[0].args]
            if base is not None:
                self._run_ctor(base, obj, values, stmts[0].pos)
            stmts = stmts[1:]
        elif base is not None:
            self._run_ctor(base, obj, [], pos)
        self._exec_all(stmts, frame)

    def _exec_all(self, stmts: 'Iterable[Stmt_]', frame: '_Frame') -> 'Optional[_Return]':
        for stmt in stmts:
            signal = self._exec(stmt, frame)
            if signal is not None:
                return signal
        return None

    def _exec(self, stmt: 'Stmt_', frame: '_Frame') -> 'Optional[_Return]':
        self._tick(stmt.pos)

        if isinstance(stmt, ast.Block):
            return self._exec_all(stmt.stmts, frame)

        if isinstance(stmt, ast.LocalDecl):
            frame.locals[stmt.name] = default(stmt.type) if stmt.init is None else self._eval(stmt.init, frame)
            return None

        if isinstance(stmt, ast.Assign):
            self._assign(stmt.target, stmt.value, frame)
            return None

        if isinstance(stmt, ast.ExprStmt):
            self._eval(stmt.expr, frame)
            return None

        if isinstance(stmt, ast.Print):
            self.hooks.emit(self, render(self._eval(stmt.expr, frame)))
            return None

        if isinstance(stmt, ast.Return):
            return _Return(None if stmt.value is None else self._eval(stmt.value, frame))

        if isinstance(stmt, ast.If):
            if self._eval(stmt.cond, frame):
                return self._exec(stmt.then, frame)
            if stmt.orelse is not None:
                return self._exec(stmt.orelse, frame)
            return None

        if isinstance(stmt, ast.While):
            while self._eval(stmt.cond, frame):
                signal = self._exec(stmt.body, frame)
                if signal is not None:
                    return signal
                self._tick(stmt.pos)
            return None

        raise MooRuntimeError(f'unexpected statement {type(stmt).__name__}', pos=stmt.pos)

    def _assign(self, target: 'Expr_', value: 'Expr_', frame: '_Frame') -> 'None':
        if isinstance(target, ast.Var):
            frame.locals[target.name] = self._eval(value, frame)
            return

        if isinstance(target, ast.FieldGet):
            obj = self._object(self._eval(target.target, frame), target.pos)
            result = self._eval(value, frame)
            field = self.table.find_field(target.owner, target.name)  # type: ignore[arg-type]
            if field is not None and field[1].is_final and obj.sealed:
                raise FinalFieldWrite(f'final field {target.owner}.{target.name} written after '
                                      'construction', pos=target.pos)
            obj.fields[target.name] = result
            return

        if isinstance(target, ast.StaticGet):
            owner = target.owner or target.cls
            self.ensure_static(owner, target.pos)
            result = self._eval(value, frame)
            field = self.table.find_field(owner, target.name, static=True)
            if field is not None and field[1].is_final and self._static_state.get(owner) == _DONE:
                raise FinalFieldWrite(f'final field {owner}.{target.name} written after '
                                      'static initialisation', pos=target.pos)
            self.statics[owner][target.name] = result
            return

        raise MooRuntimeError('invalid assignment target', pos=target.pos)

    @staticmethod
    def _object(value: 'Value', pos: 'Pos') -> 'Obj':
        if value is None:
            raise NullDereference('null dereference', pos=pos)
        if not isinstance(value, Obj):
            raise MooRuntimeError(f'value {value!r} is not an object', pos=pos)
        return value

    def _eval(self, node: 'Expr_', frame: '_Frame') -> 'Value':
        if isinstance(node, ast.Literal):
            return node.value

        if isinstance(node, ast.Var):
            try:
                return frame.locals[node.name]
            except KeyError:
                raise MooRuntimeError(f'unbound variable {node.name}', pos=node.pos) from None

        if isinstance(node, ast.This):
            return frame.this

        if isinstance(node, ast.Unary):
            operand = self._eval(node.operand, frame)
            if node.op == '!':
                return not operand
            return wrap(-operand, node.type or 'long')  # type: ignore[operator]

        if isinstance(node, ast.Binary):
            return self._binary(node, frame)

        if isinstance(node, ast.FieldGet):
            obj = self._object(self._eval(node.target, frame), node.pos)
            try:
                return obj.fields[node.name]
            except KeyError:
                raise MooRuntimeError(f'object {obj!r} has no field {node.name}', pos=node.pos) from None

        if isinstance(node, ast.StaticGet):
            owner = node.owner or node.cls
            self.ensure_static(owner, node.pos)
            return self.statics[owner][node.name]

        if isinstance(node, ast.Call):
            obj = self._object(self._eval(node.target, frame), node.pos)  # type: ignore[arg-type]
            args = [self._eval(arg, frame) for arg in node.args]
            return self.invoke(obj, node.name, args, node.pos)

        if isinstance(node, ast.StaticCall):
            owner = node.owner or node.cls
            self.ensure_static(owner, node.pos)
            args = [self._eval(arg, frame) for arg in node.args]
            return self.call_static(owner, node.name, args, node.pos)

        if isinstance(node, ast.New):
            args = [self._eval(arg, frame) for arg in node.args]
            return self.construct(node.cls, args, node.pos)

        if isinstance(node, ast.Intrinsic):
            return self._intrinsic(node, frame)

        raise MooRuntimeError(f'unexpected expression {type(node).__name__}', pos=node.pos)

    def _binary(self, node: 'ast.Binary', frame: '_Frame') -> 'Value':
        op = node.op
        left = self._eval(node.left, frame)
        if op == '&&':
            return bool(left) and bool(self._eval(node.right, frame))
        if op == '||':
            return bool(left) or bool(self._eval(node.right, frame))
        right = self._eval(node.right, frame)

        if op == '==':
            return self._equal(left, right)
        if op == '!=':
            return not self._equal(left, right)
        if node.type == 'string':
            return render(left) + render(right)
        if op in ('<', '<=', '>', '>='):
            return {'<': left < right, '<=': left <= right,  # type: ignore[operator]
                    '>': left > right, '>=': left >= right}[op]  # type: ignore[operator]

        type_ = node.type or 'long'
        if op == '+':
            return wrap(left + right, type_)  # type: ignore[operator]
        if op == '-':
            return wrap(left - right, type_)  # type: ignore[operator]
        if op == '*':
            return wrap(left * right, type_)  # type: ignore[operator]
        if right == 0:
            raise MooRuntimeError('division by zero', pos=node.pos)
        if op == '/':
            return wrap(divide(left, right), type_)  # type: ignore[arg-type]
        if op == '%':
            return wrap(remainder(left, right), type_)  # type: ignore[arg-type]
        raise MooRuntimeError(f'unknown operator {op}', pos=node.pos)

    @staticmethod
    def _equal(left: 'Value', right: 'Value') -> 'bool':
        if isinstance(left, Obj) or isinstance(right, Obj):
            return left is right
        return left == right

    def _intrinsic(self, node: 'ast.Intrinsic', frame: '_Frame') -> 'Value':
        args = [self._eval(arg, frame) for arg in node.args]
        if node.name == 'policy_create':
            return self.hooks.policy_create(self, args[0])  # type: ignore[arg-type]
        if node.name == 'policy_discover':
            return self.hooks.policy_discover(self, args[0])  # type: ignore[arg-type]
        if node.name == 'remote_invoke':
            handle, member = args[0], args[1]
            if handle is None:
                raise NullDereference('proxy is not bound', pos=node.pos)
            typed = [(value, arg.type or 'long') for value, arg in zip(args[2:], node.args[2:])]
            return self.hooks.remote_invoke(self, handle, member, typed)  # type: ignore[arg-type]
        raise MooRuntimeError(f'unknown intrinsic @{node.name}', pos=node.pos)


def run_program(checked: 'CheckedProgram', hooks: 'Optional[RuntimeHooks]' = None, *,
                step_budget: 'int' = DEFAULT_STEP_BUDGET) -> 'Trace':
    """Run a checked program and return its trace.

    Args:
        checked: Checked program.
        hooks: Runtime hooks, local by default.
        step_budget: Maximum number of interpreter steps.

    Raises:
        MooRuntimeError: On runtime errors.

    """
    return Interpreter(checked, hooks, step_budget=step_budget).run()


def trace_equal(one: 'Union[Trace, list[str]]', other: 'Union[Trace, list[str]]') -> 'bool':
    """Check if two traces have the same lines in the same order."""
    return len(one) == len(other) and all(a == b for a, b in zip(one, other))
