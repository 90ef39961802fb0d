# -*- coding: utf-8 -*-
"""Registry Management
=========================

This module provides the registry management for :mod:`mookit`, as the module
contains various registry points.

"""
import importlib
from typing import TYPE_CHECKING

from dictdumper import Dumper

from mookit.foundation.report import Reporter
from mookit.foundation.transform import Transformer
from mookit.runtime.builtins import NATIVE_TABLE, NativeClass
from mookit.utilities.exceptions import RegistryError
from mookit.utilities.logging import logger
from mookit.utilities.warnings import ProtocolWarning, warn

if TYPE_CHECKING:
    from typing import Type, Union

__all__ = [
    'register_builtin', 'register_protocol', 'register_dumper',
]


###############################################################################
# mookit.runtime.builtins.NATIVE_TABLE
###############################################################################


def register_builtin(name: 'str', native: 'Union[NativeClass, Type[NativeClass]]') -> 'None':
    """Register a native class implementation.

    The function will register the given implementation to the
    :data:`mookit.runtime.builtins.NATIVE_TABLE` registry, replacing
    any previous implementation of class ``name``.

    Arguments:
        name: MiniOO class name
        native: implementation, an instance or subclass of
            :class:`~mookit.runtime.builtins.NativeClass`

    """
    if isinstance(native, type):
        if not issubclass(native, NativeClass):
            raise RegistryError('native implementation must be a NativeClass subclass')
        native = native()
    if not isinstance(native, NativeClass):
        raise RegistryError('native implementation must be a NativeClass instance')
    if not name.isidentifier():
        raise RegistryError(f'invalid class name {name!r}')

    NATIVE_TABLE[name] = native
    logger.info('registered builtin class: %s', name)


###############################################################################
# mookit.foundation.transform.Transformer.__protocol__
###############################################################################


def register_protocol(protocol: 'str', module: 'str', class_: 'str') -> 'None':
    r"""Register a new proxy protocol.

    Notes:
        The full qualified class name of the wire codec should be
        as ``{module}.{class_}``; the codec must provide static
        ``encode`` and ``decode`` methods.

    The function will register the given codec to the
    :data:`mookit.foundation.transform.Transformer.__protocol__` registry.

    Arguments:
        protocol: protocol name, used as proxy class suffix
        module: module name
        class\_: class name

    """
    if not protocol.isidentifier():
        raise RegistryError(f'invalid protocol name {protocol!r}')
    codec = getattr(importlib.import_module(module), class_)
    if not (callable(getattr(codec, 'encode', None)) and callable(getattr(codec, 'decode', None))):
        raise RegistryError('codec must provide encode and decode')
    if protocol in Transformer.__protocol__:
        warn(f'protocol {protocol} registered twice', ProtocolWarning)

    Transformer.register(protocol, module, class_)
    logger.info('registered proxy protocol: %s', protocol)


###############################################################################
# mookit.foundation.report.Reporter.__output__
###############################################################################


def register_dumper(format: 'str', module: 'str', class_: 'str', ext: 'str') -> 'None':  # pylint: disable=redefined-builtin
    r"""Register a new report dumper class.

    Notes:
        The full qualified class name of the new dumper class
        should be as ``{module}.{class_}``.

    The function will register the given dumper class to the
    :data:`mookit.foundation.report.Reporter.__output__` registry.

    Arguments:
        format: format name
        module: module name
        class\_: class name
        ext: file extension

    """
    dumper = getattr(importlib.import_module(module), class_)
    if not issubclass(dumper, Dumper):
        raise RegistryError('dumper must be a Dumper subclass')

    Reporter.register(format, module, class_, ext)
    logger.info('registered report format: %s', format)
