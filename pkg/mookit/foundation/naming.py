# -*- coding: utf-8 -*-
"""Generated Names
=====================

:mod:`mookit.foundation.naming` contains the naming scheme of the
artifacts generated for a class ``A``, and the fresh temporary
generator used when allocations are hoisted.

"""
from mookit.lang.reserved import ACCESSOR_PREFIXES, TEMP_PREFIX

__all__ = [
    'instance_interface', 'static_interface', 'local_object', 'local_static',
    'object_factory', 'class_factory', 'object_proxy', 'static_proxy',
    'getter', 'setter', 'original_class', 'TempFactory',
]


def instance_interface(cls: 'str') -> 'str':
    """Instance interface name, e.g. ``X_O_Int``."""
    return f'{cls}_O_Int'


def static_interface(cls: 'str') -> 'str':
    """Static interface name, e.g. ``X_C_Int``."""
    return f'{cls}_C_Int'


def local_object(cls: 'str') -> 'str':
    """Local instance implementation name, e.g. ``X_O_Local``."""
    return f'{cls}_O_Local'


def local_static(cls: 'str') -> 'str':
    """Local static implementation name, e.g. ``X_C_Local``."""
    return f'{cls}_C_Local'


def object_factory(cls: 'str') -> 'str':
    """Object factory name, e.g. ``X_O_Factory``."""
    return f'{cls}_O_Factory'


def class_factory(cls: 'str') -> 'str':
    """Class factory name, e.g. ``X_C_Factory``."""
    return f'{cls}_C_Factory'


def object_proxy(cls: 'str', protocol: 'str') -> 'str':
    """Instance proxy name, e.g. ``X_O_Proxy_RAF``."""
    return f'{cls}_O_Proxy_{protocol}'


def static_proxy(cls: 'str', protocol: 'str') -> 'str':
    """Static proxy name, e.g. ``X_C_Proxy_RAF``."""
    return f'{cls}_C_Proxy_{protocol}'


def getter(field: 'str') -> 'str':
    """Get accessor name of a field."""
    return f'{ACCESSOR_PREFIXES[0]}{field}'


def setter(field: 'str') -> 'str':
    """Set accessor name of a field."""
    return f'{ACCESSOR_PREFIXES[1]}{field}'


def original_class(name: 'str') -> 'str':
    """Source class name of a generated class or interface name."""
    for marker in ('_O_', '_C_'):
        index = name.rfind(marker)
        if index > 0:
            return name[:index]
    return name


class TempFactory:
    """Fresh temporary generator (``$t0``, ``$t1``, ...)."""

    def __init__(self) -> 'None':
        self.counter = 0

    def fresh(self) -> 'str':
        """Return a fresh temporary name."""
        name = f'{TEMP_PREFIX}t{self.counter}'
        self.counter += 1
        return name
