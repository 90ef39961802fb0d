# -*- coding: utf-8 -*-
"""Native Class Table
========================

:mod:`mookit.runtime.builtins` contains the natively implemented
classes of MiniOO: ``builtin`` classes, and the ``native`` methods
of user classes. Both the local interpreter and every node of a
distributed deployment share this table.

A native class implements

* ``construct(interp, *args)``, returning the native state of a new
  instance (builtin classes only);
* ``call_<name>(interp, obj, *args)`` for instance methods;
* ``static_<name>(interp, *args)`` for static methods;
* :attr:`NativeClass.statics` for static fields.

"""
from typing import TYPE_CHECKING

from mookit.runtime.values import wrap
from mookit.utilities.exceptions import NativeError

if TYPE_CHECKING:
    from typing import Any, Callable, Optional

    from mookit.runtime.interpreter import Interpreter
    from mookit.runtime.values import Obj, Value

__all__ = [
    'NativeClass', 'NATIVE_TABLE', 'lookup_native',
    'Sys', 'Text', 'Cell', 'MathOps', 'Native',
]


class NativeClass:
    """Base class of native class implementations."""

    #: Static field values.
    statics = {}  # type: dict[str, Value]

    def construct(self, interp: 'Interpreter', *args: 'Value') -> 'Any':  # pylint: disable=unused-argument
        """Create the native state of a new instance."""
        return None

    def method(self, name: 'str', static: 'bool') -> 'Optional[Callable[..., Value]]':
        """Fetch the implementation of a native method."""
        return getattr(self, f'{"static" if static else "call"}_{name}', None)

    def invoke(self, interp: 'Interpreter', obj: 'Optional[Obj]', name: 'str', args: 'list[Value]') -> 'Value':
        """Invoke a native method.

        Args:
            interp: Calling interpreter.
            obj: Receiver, :data:`None` for static methods.
            name: Method name.
            args: Argument values.

        Raises:
            NativeError: If the method has no native implementation, or
                the implementation failed.

        """
        impl = self.method(name, obj is None)
        if impl is None:
            raise NativeError(f'no native implementation of {type(self).__name__}.{name}')
        try:
            if obj is None:
                return impl(interp, *args)
            return impl(interp, obj, *args)
        except NativeError:
            raise
        except (ArithmeticError, LookupError, TypeError, ValueError) as exc:
            raise NativeError(f'{type(self).__name__}.{name}: {exc}') from exc


class Sys(NativeClass):
    """System services."""

    statics = {'K': 42}

    def static_version(self, interp: 'Interpreter') -> 'str':  # pylint: disable=unused-argument
        return 'MiniOO 1.0'

    def static_checkpoint(self, interp: 'Interpreter', number: 'int') -> 'None':
        interp.hooks.checkpoint(interp, number)


class Text(NativeClass):
    """String builder."""

    def construct(self, interp: 'Interpreter', *args: 'Value') -> 'list[str]':
        return []

    def call_append(self, interp: 'Interpreter', obj: 'Obj', text: 'str') -> 'None':  # pylint: disable=unused-argument
        obj.native.append(text)

    def call_length(self, interp: 'Interpreter', obj: 'Obj') -> 'int':  # pylint: disable=unused-argument
        return wrap(sum(len(item) for item in obj.native), 'int')

    def call_value(self, interp: 'Interpreter', obj: 'Obj') -> 'str':  # pylint: disable=unused-argument
        return ''.join(obj.native)


class Cell(NativeClass):
    """Mutable ``int`` box."""

    def construct(self, interp: 'Interpreter', *args: 'Value') -> 'list[int]':
        return [args[0] if args else 0]  # type: ignore[list-item]

    def call_get(self, interp: 'Interpreter', obj: 'Obj') -> 'int':  # pylint: disable=unused-argument
        return obj.native[0]

    def call_put(self, interp: 'Interpreter', obj: 'Obj', value: 'int') -> 'None':  # pylint: disable=unused-argument
        obj.native[0] = value


class MathOps(NativeClass):
    """Integer helpers."""

    def static_abs(self, interp: 'Interpreter', value: 'int') -> 'int':  # pylint: disable=unused-argument
        return wrap(abs(value), 'int')

    def static_max(self, interp: 'Interpreter', left: 'int', right: 'int') -> 'int':  # pylint: disable=unused-argument
        return max(left, right)

    def static_hash(self, interp: 'Interpreter', text: 'str') -> 'int':  # pylint: disable=unused-argument
        code = 0
        for char in text:
            code = wrap(31 * code + ord(char), 'int')
        return code


class Native(NativeClass):
    """Native bodies of the user class ``Native``."""

    def static_twice(self, interp: 'Interpreter', value: 'int') -> 'int':  # pylint: disable=unused-argument
        return wrap(2 * value, 'int')

    def static_greet(self, interp: 'Interpreter', name: 'str') -> 'str':  # pylint: disable=unused-argument
        return f'hello, {name}'

    def call_twice(self, interp: 'Interpreter', obj: 'Obj', value: 'int') -> 'int':  # pylint: disable=unused-argument
        return wrap(2 * value, 'int')


#: Native class table, mapping MiniOO class names to implementations.
NATIVE_TABLE = {
    'Sys': Sys(),
    'Text': Text(),
    'Cell': Cell(),
    'MathOps': MathOps(),
    'Native': Native(),
}  # type: dict[str, NativeClass]


def lookup_native(name: 'str') -> 'NativeClass':
    """Fetch the native implementation of class ``name``.

    Raises:
        NativeError: If the class has no native implementation.

    """
    try:
        return NATIVE_TABLE[name]
    except KeyError:
        raise NativeError(f'no native implementation of class {name}') from None
