# -*- coding: utf-8 -*-
"""Runtime Values
====================

:mod:`mookit.runtime.values` contains the value model of the
interpreter. Primitives are plain Python objects (:obj:`int` for
``int`` and ``long``, :obj:`bool`, :obj:`str`, :data:`None` for
``null``); objects are :class:`Obj` handles, and remote references
are :class:`RemoteRef` records.

"""
import collections.abc
import itertools
from typing import TYPE_CHECKING

from mookit.corekit.infoclass import Info

if TYPE_CHECKING:
    from typing import Any, Iterable, Iterator, Optional, Union

    Value = Union[int, bool, str, None, 'Obj', 'RemoteRef']

__all__ = [
    'Obj', 'RemoteRef', 'Trace',
    'wrap', 'default', 'render', 'divide', 'remainder',
]

#: Bit widths of integral types.
WIDTH = {'int': 32, 'long': 64}


class RemoteRef(Info):
    """Reference to an object exported by a node."""

    #: Owning node identifier.
    node: 'str'
    #: Object identifier within the owning node.
    oid: 'int'
    #: Original class name.
    cls: 'str'

    if TYPE_CHECKING:
        def __init__(self, node: 'str', oid: 'int', cls: 'str') -> 'None': ...  # pylint: disable=unused-argument,super-init-not-called,multiple-statements


class Obj:
    """Object handle.

    Args:
        cls: Runtime class name.
        fields: Initial field store.
        native: Native state of builtin instances.

    """

    _ids = itertools.count(1)

    __slots__ = ('oid', 'cls', 'fields', 'native', 'sealed', 'depth')

    def __init__(self, cls: 'str', fields: 'Optional[dict[str, Value]]' = None,
                 native: 'Any' = None) -> 'None':
        #: Object identifier, unique per process.
        self.oid = next(self._ids)
        #: Runtime class name.
        self.cls = cls
        #: Field store.
        self.fields = {} if fields is None else fields  # type: dict[str, Value]
        #: Native state (builtin classes only).
        self.native = native
        #: Construction finished flag; final fields are read-only afterwards.
        self.sealed = False
        #: Nesting depth of factory initialisation.
        self.depth = 0

    def __repr__(self) -> 'str':
        return f'<{self.cls}#{self.oid}>'


class Trace(collections.abc.Sequence):
    """Append-only sequence of printed lines.

    Args:
        lines: Initial lines.

    """

    def __init__(self, lines: 'Iterable[str]' = ()) -> 'None':
        self._lines = list(lines)

    def append(self, line: 'str') -> 'None':
        """Append a printed line."""
        self._lines.append(line)

    def __getitem__(self, index: 'Any') -> 'Any':
        return self._lines[index]

    def __len__(self) -> 'int':
        return len(self._lines)

    def __iter__(self) -> 'Iterator[str]':
        return iter(self._lines)

    def __eq__(self, other: 'object') -> 'bool':
        if isinstance(other, Trace):
            return self._lines == other._lines
        if isinstance(other, (list, tuple)):
            return self._lines == list(other)
        return NotImplemented

    def __hash__(self) -> 'int':
        return hash(tuple(self._lines))

    def __repr__(self) -> 'str':
        return f'Trace({self._lines!r})'

    def __str__(self) -> 'str':
        return ''.join(f'{line}\n' for line in self._lines)


def wrap(value: 'int', type_: 'str') -> 'int':
    """Wrap an integer to the two's complement range of ``type_``."""
    bits = WIDTH.get(type_, 64)
    mask = (1 << bits) - 1
    value &= mask
    return value - (1 << bits) if value >> (bits - 1) else value


def divide(left: 'int', right: 'int') -> 'int':
    """Integer division truncating toward zero."""
    quotient = abs(left) // abs(right)
    return quotient if (left < 0) == (right < 0) else -quotient


def remainder(left: 'int', right: 'int') -> 'int':
    """Remainder matching :func:`divide` (sign of the dividend)."""
    return left - right * divide(left, right)


def default(type_: 'str') -> 'Value':
    """Default value of a field or uninitialised local."""
    if type_ in WIDTH:
        return 0
    if type_ == 'bool':
        return False
    if type_ == 'string':
        return ''
    return None


def render(value: 'Value') -> 'str':
    """Printed form of a value."""
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if value is None:
        return 'null'
    return str(value)
