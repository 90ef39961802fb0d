# -*- coding: utf-8 -*-
"""User Defined Exceptions
=============================

:mod:`mookit.utilities.exceptions` refined built-in exceptions.
Make it possible to show only user error stack infomation [*]_,
when exception raised on user's operation.

Each concrete exception also carries the process exit code the
command line driver reports for it, see :attr:`BaseError.exit_code`.

.. [*] See |tbtrim|_ project for Pythonic implementation.

.. |tbtrim| replace:: ``tbtrim``
.. _tbtrim: https://github.com/gousaiyang/tbtrim

"""
import os
import sys
import traceback
from typing import TYPE_CHECKING

from mookit.utilities.logging import DEVMODE, logger

if TYPE_CHECKING:
    from typing import Any, Optional

__all__ = [
    'stacklevel',

    'BaseError',                                                    # Exception
    'ParseError', 'DuplicateDeclaration',                           # SyntaxError
    'CheckError', 'UnresolvedName', 'TypeMismatch',                 # TypeError
    'VisibilityError', 'ReservedName', 'ArityError',                # TypeError
    'RegistryError',                                                # TypeError
    'TransformError', 'AccessorCollision', 'UnknownProtocol',       # ValueError
    'ManifestError',                                                # ValueError
    'UnsupportedCall',                                              # AttributeError
    'MooRuntimeError', 'NullDereference', 'StepBudgetExceeded',     # RuntimeError
    'FinalFieldWrite', 'NativeError', 'MarshalError',               # RuntimeError
    'RemoteError', 'UnknownObject',                                 # RuntimeError
    'WireError', 'MalformedFrame', 'VersionMismatch',               # ValueError
    'FrameTooLarge',                                                # ValueError
    'TransportError',                                               # ConnectionError
    'EquivalenceMismatch',                                          # AssertionError
]


def stacklevel() -> 'int':
    """Fetch current stack level.

    The function will walk through the straceback stack (:func:`traceback.extract_stack`),
    and fetch the stack level where the path contains ``/mookit/``. So that it won't
    display any disturbing internal traceback information when raising errors.

    Returns:
        Stack level until internal stacks, i.e. contains ``/mookit/``.

    """
    mookit = f'{os.path.sep}mookit{os.path.sep}'
    tb = traceback.extract_stack()
    for index, tbitem in enumerate(tb):
        if mookit in tbitem[0]:
            break
    else:
        index = len(tb)
    return index-1


##############################################################################
# BaseError (abc of exceptions) session.
##############################################################################


class BaseError(Exception):
    """Base error class of all kinds.

    Important:

        * Turn off system-default traceback function by set :data:`sys.tracebacklimit` to ``0``.
        * Errors are logged at construction, with stack information in development mode.

    See Also:
        :func:`mookit.utilities.exceptions.stacklevel`

    """

    #: Exit code reported by the command line driver.
    exit_code = 1

    def __init__(self, *args: 'Any', quiet: 'bool' = False, **kwargs: 'Any') -> 'None':
        # log error
        if not quiet:
            if DEVMODE:
                logger.error('%s: %s', type(self).__name__, str(self), exc_info=self,
                             stack_info=True, stacklevel=-stacklevel())
            else:
                logger.error('%s: %s', type(self).__name__, str(self))

        if not DEVMODE:
            sys.tracebacklimit = 0
        super().__init__(*args, **kwargs)


class _Positioned(BaseError):
    """Error carrying an optional source position."""

    def __init__(self, message: 'str', *args: 'Any',
                 pos: 'Optional[tuple[int, int]]' = None, **kwargs: 'Any') -> 'None':
        #: Source position (line, column) of the offending construct.
        self.pos = pos
        if pos is not None:
            message = f'{message} (line {pos[0]}, column {pos[1]})'
        super().__init__(message, *args, **kwargs)


##############################################################################
# Front end session.
##############################################################################


class ParseError(_Positioned, SyntaxError):
    """Syntax error in MiniOO source."""


class DuplicateDeclaration(_Positioned, SyntaxError):
    """Duplicate class, interface or member declaration."""


class CheckError(_Positioned, TypeError):
    """Static checking failed."""


class UnresolvedName(CheckError):
    """Name does not resolve to a declaration."""


class TypeMismatch(CheckError):
    """Expression type does not agree with its context."""


class VisibilityError(CheckError):
    """Member is not visible from the access site."""


class ReservedName(CheckError):
    """Reserved identifier or construct used in user source."""


class ArityError(CheckError):
    """Wrong number of arguments."""


class RegistryError(BaseError, TypeError):
    """Invalid registration of an extension point."""


##############################################################################
# Transformation session.
##############################################################################


class TransformError(BaseError, ValueError):
    """The program cannot be transformed."""


class AccessorCollision(TransformError):
    """Synthesised accessor collides with an existing member."""


class UnknownProtocol(TransformError):
    """Proxy protocol is not registered."""


class ManifestError(BaseError, ValueError):
    """Invalid deployment manifest."""


class UnsupportedCall(BaseError, AttributeError):
    """Unsupported function or property call."""


##############################################################################
# Runtime session.
##############################################################################


class MooRuntimeError(_Positioned, RuntimeError):
    """Runtime error raised while executing a MiniOO program."""

    exit_code = 2


class NullDereference(MooRuntimeError):
    """Member access on ``null``."""


class StepBudgetExceeded(MooRuntimeError):
    """Interpreter step budget exhausted."""


class FinalFieldWrite(MooRuntimeError):
    """Write to a final field of a sealed object."""


class NativeError(MooRuntimeError):
    """Native (builtin) implementation missing or failed."""


class MarshalError(MooRuntimeError):
    """Value cannot cross a node boundary."""


class RemoteError(MooRuntimeError):
    """Remote execution failed on the owning node."""


class UnknownObject(MooRuntimeError):
    """Object id is not exported by the node."""


##############################################################################
# Wire & transport session.
##############################################################################


class WireError(BaseError, ValueError):
    """Invalid wire message."""

    exit_code = 3


class MalformedFrame(WireError):
    """Frame is truncated or its payload is not a valid message."""


class VersionMismatch(WireError):
    """Protocol version of the message is not supported."""


class FrameTooLarge(WireError):
    """Payload exceeds the frame size limit."""


class TransportError(BaseError, ConnectionError):
    """Transport to a node failed."""

    exit_code = 3


class EquivalenceMismatch(BaseError, AssertionError):
    """Traces of equivalent runs differ."""

    exit_code = 4
