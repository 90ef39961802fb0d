# -*- coding: utf-8 -*-
"""Runtime Hooks
===================

:mod:`mookit.runtime.hooks` contains :class:`RuntimeHooks`, the
bridge between the interpreter and the placement machinery. The
base class realises the single address space: every ``make``
creates a local implementation, every ``discover`` returns the local
singleton, and remote invocations are impossible.

Distributed nodes override the hooks (see
:class:`mookit.distrib.node.NodeHooks`).

"""
from typing import TYPE_CHECKING

from mookit.foundation.naming import local_object
from mookit.utilities.exceptions import MooRuntimeError

if TYPE_CHECKING:
    from mookit.runtime.interpreter import Interpreter
    from mookit.runtime.values import Obj, RemoteRef, Value

__all__ = ['RuntimeHooks']


class RuntimeHooks:
    """Single address space runtime hooks."""

    def policy_create(self, interp: 'Interpreter', cls: 'str') -> 'Obj':
        """Create an instance of transformed class ``cls`` (``@policy_create``)."""
        return interp.instantiate(local_object(cls))

    def policy_discover(self, interp: 'Interpreter', cls: 'str') -> 'Obj':
        """Fetch the static implementation of class ``cls`` (``@policy_discover``)."""
        return interp.local_singleton(cls)

    def remote_invoke(self, interp: 'Interpreter', handle: 'RemoteRef', member: 'str',
                      args: 'list[tuple[Value, str]]') -> 'Value':  # pylint: disable=unused-argument
        """Invoke ``member`` on a remote object (``@remote_invoke``).

        Args:
            interp: Calling interpreter.
            handle: Remote reference bound into the proxy.
            member: Member name.
            args: Argument values with their static types.

        """
        raise MooRuntimeError(f'remote invocation of {member} in a single address space')

    def bind(self, interp: 'Interpreter', ref: 'RemoteRef', static: 'bool' = False) -> 'Obj':  # pylint: disable=unused-argument
        """Bind a remote reference into a fresh proxy."""
        raise MooRuntimeError(f'cannot bind remote reference {ref.cls}#{ref.oid} in a single address space')

    def seal(self, interp: 'Interpreter', proxy: 'Obj') -> 'None':  # pylint: disable=unused-argument
        """Finish factory initialisation of the object behind a proxy."""
        raise MooRuntimeError(f'cannot seal proxy {proxy!r} in a single address space')

    def emit(self, interp: 'Interpreter', line: 'str') -> 'None':
        """Record a printed line."""
        interp.trace.append(line)

    def checkpoint(self, interp: 'Interpreter', number: 'int') -> 'None':  # pylint: disable=unused-argument
        """Deployment checkpoint reached (no-op locally)."""
