# -*- coding: utf-8 -*-
"""Decorator Functions
=========================

:mod:`mookit.utilities.decorators` contains several useful
decorators, including :func:`~mookit.utilities.decorators.transport_errors`,
:func:`~mookit.utilities.decorators.exit_status` and
:func:`~mookit.utilities.decorators.deep_stack`.

"""
import functools
import socket
import sys
import threading
from typing import TYPE_CHECKING

from mookit.utilities.exceptions import BaseError, TransportError
from mookit.utilities.logging import logger

if TYPE_CHECKING:
    from typing import Any, Callable, Optional, TypeVar

    from typing_extensions import ParamSpec

    P = ParamSpec('P')
    R = TypeVar('R')

__all__ = ['transport_errors', 'exit_status', 'deep_stack']

#: Stack size (in bytes) of threads started by :func:`deep_stack`.
STACK_SIZE = 256 * 1024 * 1024
#: Recursion limit set by :func:`deep_stack`.
RECURSION_LIMIT = 200_000

_deep = threading.local()
_stack_lock = threading.Lock()
# saved recursion limit followed by one slot per running worker
_workers = []  # type: list[Optional[int]]


def transport_errors(func: 'Callable[P, R]') -> 'Callable[P, R]':
    """Surface socket level failures as :exc:`~mookit.utilities.exceptions.TransportError`.

    Any :exc:`OSError` (including :exc:`socket.timeout`) and :exc:`EOFError`
    raised by the decorated function is re-raised as a
    :exc:`~mookit.utilities.exceptions.TransportError`, whereas errors of
    :mod:`mookit` itself are passed through untouched.

    :param func: decorated function
    :meta decorator:
    """
    @functools.wraps(func)
    def wrapper(*args: 'P.args', **kwargs: 'P.kwargs') -> 'R':
        try:
            return func(*args, **kwargs)
        except BaseError:
            raise
        except (OSError, EOFError, socket.timeout) as exc:
            raise TransportError(f'{type(exc).__name__}: {exc}') from exc
    return wrapper


def exit_status(func: 'Callable[P, int]') -> 'Callable[P, int]':
    """Map :mod:`mookit` errors onto process exit codes.

    The decorated command returns its own exit code on success; should
    any :exc:`~mookit.utilities.exceptions.BaseError` escape, the
    error's :attr:`~mookit.utilities.exceptions.BaseError.exit_code`
    is returned instead.

    :param func: decorated function
    :meta decorator:
    """
    @functools.wraps(func)
    def wrapper(*args: 'P.args', **kwargs: 'P.kwargs') -> 'int':
        try:
            return func(*args, **kwargs)
        except BaseError as exc:
            logger.debug('%s exited with %d', func.__name__, exc.exit_code)
            return exc.exit_code
    return wrapper


def deep_stack(func: 'Callable[P, R]') -> 'Callable[P, R]':
    """Run the decorated function on a thread with a deep call stack.

    A tree-walking evaluation takes several Python frames per MiniOO
    call, so the default recursion limit would cut valid programs short.
    The function runs on a worker thread of :data:`STACK_SIZE` bytes
    with the recursion limit raised to :data:`RECURSION_LIMIT`; nested
    calls from such a thread run in place. Return values and exceptions
    are passed back to the caller.

    :param func: decorated function
    :meta decorator:
    """
    @functools.wraps(func)
    def wrapper(*args: 'P.args', **kwargs: 'P.kwargs') -> 'R':
        if getattr(_deep, 'active', False):
            return func(*args, **kwargs)

        outcome = {}  # type: dict[str, Any]

        def target() -> 'None':
            _deep.active = True
            try:
                outcome['value'] = func(*args, **kwargs)
            except BaseException as exc:  # pylint: disable=broad-except
                outcome['error'] = exc

        with _stack_lock:
            if not _workers:
                _workers.append(sys.getrecursionlimit())
                sys.setrecursionlimit(max(_workers[0], RECURSION_LIMIT))
            _workers.append(None)
            try:
                previous = threading.stack_size(STACK_SIZE)
            except (ValueError, RuntimeError):
                logger.debug('thread stack size unsupported, keeping default')
                previous = None
            try:
                thread = threading.Thread(target=target, name=f'mookit-{func.__name__}', daemon=True)
                thread.start()
            finally:
                if previous is not None:
                    threading.stack_size(previous)
        try:
            thread.join()
        finally:
            with _stack_lock:
                _workers.pop()
                # last worker out restores the caller's limit
                if len(_workers) == 1:
                    sys.setrecursionlimit(_workers.pop())

        if 'error' in outcome:
            raise outcome['error']
        return outcome['value']
    return wrapper
