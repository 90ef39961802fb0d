# -*- coding: utf-8 -*-
"""Info Class
================

:mod:`mookit.corekit.infoclass` contains :obj:`dict` like class
:class:`~mookit.corekit.infoclass.Info` only, which is originally
designed to work alike :func:`dataclasses.dataclass` as introduced
in :pep:`557`.

Every data model of :mod:`mookit` (syntax tree nodes, wire messages,
reports) is an :class:`Info` subclass: fields are declared as class
annotations, optional fields carry their default as class attribute.

"""
import collections.abc
from typing import TYPE_CHECKING, Generic, TypeVar

from mookit.utilities.exceptions import UnsupportedCall

if TYPE_CHECKING:
    from typing import Any, Iterator, NoReturn

__all__ = ['Info']

VT = TypeVar('VT')

#: Sentinel for fields without default value.
_MISSING = object()


class Info(collections.abc.Mapping, Generic[VT]):
    """Turn dictionaries into :obj:`object` like instances.

    * :class:`Info` objects are *iterable*, and support all read-only
      functions as :obj:`dict` type
    * :class:`Info` objects are **immutable**, thus cannot set or delete
      attributes after initialisation; use :meth:`_replace` to derive
    * :class:`Info` objects compare and hash by type and field values,
      ignoring fields listed in :attr:`__excluded__`

    Important:
        Field names must not shadow the :class:`~collections.abc.Mapping`
        interface (``keys``, ``items``, ``values``, ``get``); such a class
        is rejected at definition time.

    """

    #: Ordered field names: required fields first (base classes first),
    #: then optional fields (most derived class first).
    __fields__: 'tuple[str, ...]' = ()
    #: Field names ignored by comparison and hashing.
    __excluded__: 'frozenset[str]' = frozenset()

    def __init_subclass__(cls, **kwargs: 'Any') -> 'None':
        super().__init_subclass__(**kwargs)

        names = []  # type: list[str]
        for cls_ in reversed(cls.mro()):
            if cls_ is Info or not issubclass(cls_, Info):
                continue
            for key in cls_.__dict__.get('__annotations__', {}):
                if key.startswith('__') or key in names:
                    continue
                if key in dir(collections.abc.Mapping):
                    raise UnsupportedCall(f'{cls.__name__}: field {key!r} shadows mapping interface')
                names.append(key)

        # own optional fields precede inherited ones, so that a base
        # default such as ``Node.pos`` stays last in positional order
        required = [key for key in names if getattr(cls, key, _MISSING) is _MISSING]
        optional = []  # type: list[str]
        for cls_ in cls.mro():
            if cls_ is Info or not issubclass(cls_, Info):
                continue
            for key in cls_.__dict__.get('__annotations__', {}):
                if key in names and key not in required and key not in optional:
                    optional.append(key)
        cls.__fields__ = tuple(required + optional)

        # NOTE: The following code is to make the ``__init__`` method work.
        # It is inspired from the :func:`dataclasses._create_fn` function.
        params = required + [f'{key}=__default_{key}__' for key in optional]
        ns = {f'__default_{key}__': getattr(cls, key) for key in optional}  # type: dict[str, Any]
        init_ = (
            f'def __create_fn__():\n'
            f'    def __init__(self, {", ".join(params)}):\n'
            f'        self.__update__({", ".join(f"{key}={key}" for key in names)})\n'
            f'    return __init__\n'
        ) if names else (
            'def __create_fn__():\n'
            '    def __init__(self):\n'
            '        pass\n'
            '    return __init__\n'
        )
        exec(init_, ns)  # pylint: disable=exec-used # nosec
        cls.__init__ = ns['__create_fn__']()  # type: ignore[misc]
        cls.__init__.__qualname__ = f'{cls.__name__}.__init__'

    def __update__(self, **kwargs: 'Any') -> 'None':
        for (key, value) in kwargs.items():
            self.__dict__[key] = value

    def __str__(self) -> 'str':
        args = ', '.join(f'{key}={self.__dict__[key]}' for key in self.__fields__)
        return f'{type(self).__name__}({args})'

    def __repr__(self) -> 'str':
        temp = []  # type: list[str]
        for key in self.__fields__:
            value = self.__dict__[key]
            if isinstance(value, Info):
                temp.append(f'{key}={type(value).__name__}(...)')
            else:
                temp.append(f'{key}={value!r}')
        args = ', '.join(temp)
        return f'{type(self).__name__}({args})'

    def __len__(self) -> 'int':
        return len(self.__fields__)

    def __iter__(self) -> 'Iterator[str]':
        return iter(self.__fields__)

    def __getitem__(self, key: 'str') -> 'VT':
        if key not in self.__fields__:
            raise KeyError(key)
        return self.__dict__[key]

    def __eq__(self, other: 'object') -> 'bool':
        if type(self) is not type(other):
            return NotImplemented
        return self.__values__() == other.__values__()  # type: ignore[attr-defined]

    def __ne__(self, other: 'object') -> 'bool':
        result = self.__eq__(other)
        if result is NotImplemented:
            return True
        return not result

    def __hash__(self) -> 'int':
        return hash((type(self).__name__,) + self.__values__())

    def __values__(self) -> 'tuple[Any, ...]':
        return tuple(self.__dict__[key] for key in self.__fields__ if key not in self.__excluded__)

    def __setattr__(self, name: 'str', value: 'VT') -> 'NoReturn':
        raise UnsupportedCall("can't set attribute")

    def __delattr__(self, name: 'str') -> 'NoReturn':
        raise UnsupportedCall("can't delete attribute")

    def _replace(self, **changes: 'Any') -> 'Info[VT]':
        """Return a copy with the given fields replaced."""
        values = {key: self.__dict__[key] for key in self.__fields__}
        values.update(changes)
        return type(self)(**values)

    def to_dict(self) -> 'dict[str, VT]':
        """Convert :class:`Info` into :obj:`dict`.

        Nested :class:`Info` objects are converted as well, including
        those held in :obj:`tuple` and :obj:`list` values.

        """
        return {key: _convert(self.__dict__[key]) for key in self.__fields__}


def _convert(value: 'Any') -> 'Any':
    if isinstance(value, Info):
        return value.to_dict()
    if isinstance(value, (tuple, list)):
        return [_convert(item) for item in value]
    return value
