# -*- coding: utf-8 -*-
"""Reserved Names
====================

:mod:`mookit.lang.reserved` contains the identifiers and name
shapes MiniOO reserves for generated code. User source may not
declare them; classes whose names carry a generated suffix may.

"""
import re

__all__ = [
    'ACCESSOR_PREFIXES', 'GENERATED_SUFFIXES', 'TEMP_PREFIX',
    'PRIMITIVES', 'KEYWORDS',
    'is_generated', 'is_reserved_member', 'is_primitive', 'is_numeric',
]

#: Prefixes of synthesised accessors.
ACCESSOR_PREFIXES = ('get_', 'set_')

#: Suffixes of generated classes and interfaces.
GENERATED_SUFFIXES = ('_O_Int', '_C_Int', '_O_Local', '_C_Local', '_O_Factory', '_C_Factory')

#: Prefix of generated temporaries and runtime reserved members.
TEMP_PREFIX = '$'

#: Primitive type names.
PRIMITIVES = frozenset({'int', 'long', 'bool', 'string'})

#: Keywords of the language.
KEYWORDS = frozenset({
    'entry', 'class', 'interface', 'builtin', 'extends', 'implements',
    'public', 'protected', 'private', 'static', 'final', 'native',
    'int', 'long', 'bool', 'string', 'void', 'ref',
    'if', 'else', 'while', 'return', 'print', 'new', 'this', 'super',
    'null', 'true', 'false',
})

#: Proxy class name shape, e.g. ``X_O_Proxy_RAF``.
_PROXY = re.compile(r'_[OC]_Proxy_[A-Za-z0-9]+$')


def is_generated(name: 'str') -> 'bool':
    """Check if a class or interface name carries a generated suffix."""
    return name.endswith(GENERATED_SUFFIXES) or _PROXY.search(name) is not None


def is_reserved_member(name: 'str') -> 'bool':
    """Check if a member or variable name is reserved for generated code."""
    return name.startswith(ACCESSOR_PREFIXES) or name.startswith(TEMP_PREFIX)


def is_primitive(type_: 'str') -> 'bool':
    """Check if a type name denotes a primitive type."""
    return type_ in PRIMITIVES


def is_numeric(type_: 'str') -> 'bool':
    """Check if a type name denotes an integral type."""
    return type_ in ('int', 'long')
