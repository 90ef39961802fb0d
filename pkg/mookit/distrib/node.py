# -*- coding: utf-8 -*-
"""Distribution Nodes
========================

:mod:`mookit.distrib.node` contains :class:`Node`, one address space
of a deployment, and :class:`NodeHooks`, the runtime hooks through
which its interpreter places objects.

A node owns an :class:`~mookit.runtime.interpreter.Interpreter` over
the transformed program, a :class:`~mookit.distrib.registry.Registry`
of exported objects and a view on the deployment's
:class:`~mookit.distrib.policy.PlacementPolicy`. Requests are handled
by :meth:`Node.dispatch`:

* ``make`` -- create a local implementation ``A_O_Local`` and export it
* ``discover`` -- fetch (and on first use statically initialise) the
  local singleton ``A_C_Local`` and export it
* ``invoke`` -- run a member on an exported object; the reserved members
  ``$seal`` and ``$print`` end remote factory initialisation and feed
  the entry node's trace sink

Transformed-class instances travel by reference, primitives and
strings by value.

"""
import itertools
from typing import TYPE_CHECKING

from mookit.const.kind import Kind
from mookit.const.tag import Tag
from mookit.distrib.policy import LOCAL
from mookit.distrib.registry import TRACE_CLASS, TRACE_OID, Registry
from mookit.distrib.wire import VERSION, Message, TaggedValue
from mookit.foundation.naming import local_object, object_proxy, static_proxy
from mookit.runtime.hooks import RuntimeHooks
from mookit.runtime.interpreter import DEFAULT_STEP_BUDGET, PROXY_HANDLE, Interpreter
from mookit.runtime.values import Obj, RemoteRef, Trace
from mookit.utilities.decorators import deep_stack
from mookit.utilities.exceptions import (BaseError, MalformedFrame, MarshalError, MooRuntimeError,
                                         RemoteError, TransportError, WireError)
from mookit.utilities.logging import node_logger

if TYPE_CHECKING:
    from typing import Any, Callable, Optional

    from mookit.distrib.policy import PlacementPolicy
    from mookit.distrib.transport import Transport
    from mookit.lang.checker import CheckedProgram
    from mookit.runtime.values import Value

__all__ = ['Node', 'NodeHooks']

#: Reserved member ending factory initialisation of a remote object.
SEAL = '$seal'
#: Reserved member appending a line to the trace sink.
PRINT = '$print'

_LOCAL_SUFFIXES = ('_O_Local', '_C_Local')


class NodeHooks(RuntimeHooks):
    """Runtime hooks of a distributed node.

    Args:
        node: Owning node.

    """

    def __init__(self, node: 'Node') -> 'None':
        #: Owning node.
        self.node = node
        self._proxies = {}  # type: dict[tuple[str, int, bool], Obj]
        self._statics = {}  # type: dict[str, Obj]

    def policy_create(self, interp: 'Interpreter', cls: 'str') -> 'Obj':
        location = self.node.policy.location(cls)
        if location in (LOCAL, self.node.id):
            return interp.instantiate(local_object(cls))
        reply = self.node.request(location, Kind.MAKE, cls=cls)
        ref = self._reference(reply, f'make {cls} on node {location}')
        self.node.logger.debug('created %s on %s as oid %d', cls, location, ref.oid)
        return self.bind(interp, ref)

    def policy_discover(self, interp: 'Interpreter', cls: 'str') -> 'Obj':
        home = self.node.policy.statics_home(cls)
        if home == self.node.id:
            return interp.local_singleton(cls)
        proxy = self._statics.get(cls)
        if proxy is None:
            reply = self.node.request(home, Kind.DISCOVER, cls=cls)
            ref = self._reference(reply, f'discover {cls} on node {home}')
            proxy = self.bind(interp, ref, static=True)
            self._statics[cls] = proxy
        return proxy

    def remote_invoke(self, interp: 'Interpreter', handle: 'RemoteRef', member: 'str',
                      args: 'list[tuple[Value, str]]') -> 'Value':
        tagged = tuple(self.marshal(value, type_) for value, type_ in args)
        reply = self.node.request(handle.node, Kind.INVOKE, target=handle, member=member, args=tagged)
        return self._result(reply)

    def bind(self, interp: 'Interpreter', ref: 'RemoteRef', static: 'bool' = False) -> 'Obj':
        if ref.node == self.node.id:
            return self.node.registry.resolve(ref.oid)
        key = (ref.node, ref.oid, static)
        proxy = self._proxies.get(key)
        if proxy is not None:
            return proxy
        name = (static_proxy if static else object_proxy)(ref.cls, self.node.protocol)
        if name not in interp.table.classes:
            raise MarshalError(f'program has no {self.node.protocol} proxy {name}')
        proxy = Obj(name, {PROXY_HANDLE: ref})
        proxy.sealed = True
        self._proxies[key] = proxy
        return proxy

    def seal(self, interp: 'Interpreter', proxy: 'Obj') -> 'None':
        handle = proxy.fields[PROXY_HANDLE]
        if not isinstance(handle, RemoteRef):
            raise MooRuntimeError(f'proxy {proxy!r} is not bound')
        self._result(self.node.request(handle.node, Kind.INVOKE, target=handle, member=SEAL))

    def emit(self, interp: 'Interpreter', line: 'str') -> 'None':
        if self.node.id == self.node.entry:
            interp.trace.append(line)
            return
        sink = RemoteRef(self.node.entry, TRACE_OID, TRACE_CLASS)
        self._result(self.node.request(self.node.entry, Kind.INVOKE, target=sink, member=PRINT,
                                       args=(TaggedValue(Tag.STR, line),)))

    def checkpoint(self, interp: 'Interpreter', number: 'int') -> 'None':
        if self.node.on_checkpoint is not None:
            self.node.on_checkpoint(number)

    ##########################################################################
    # Marshalling.
    ##########################################################################

    def marshal(self, value: 'Value', type_: 'str') -> 'TaggedValue':
        """Marshal a value; transformed instances are exported by reference.

        Raises:
            MarshalError: If ``value`` is a non-transformable instance.

        """
        if isinstance(value, Obj):
            handle = value.fields.get(PROXY_HANDLE)
            if isinstance(handle, RemoteRef):
                return TaggedValue(Tag.REF, handle)
            if not value.cls.endswith(_LOCAL_SUFFIXES):
                raise MarshalError(f'instance of non-transformable class {value.cls} cannot leave node {self.node.id}')
            return TaggedValue(Tag.REF, self.node.registry.export(value))
        return TaggedValue.of(value, type_)

    def unmarshal(self, value: 'Optional[TaggedValue]') -> 'Value':
        """Unmarshal a value; references are bound into proxies."""
        if value is None or value.tag is Tag.NULL:
            return None
        if value.tag is Tag.REF:
            return self.bind(self.node.interp, value.value)
        return value.value

    def _result(self, reply: 'Message') -> 'Value':
        if reply.kind is Kind.ERR:
            error = reply.error or 'remote error'
            if error.startswith(TransportError.__name__):
                raise TransportError(error.partition(': ')[2] or error)
            raise RemoteError(error)
        if reply.kind is not Kind.REPLY:
            raise MalformedFrame(f'unexpected {reply.kind.value} message in reply to {reply.id}')
        return self.unmarshal(reply.result)

    def _reference(self, reply: 'Message', what: 'str') -> 'RemoteRef':
        # raw reference, left unbound for the caller to pick the proxy side
        if reply.kind is not Kind.REPLY:
            self._result(reply)
        if reply.result is None or reply.result.tag is not Tag.REF:
            raise MarshalError(f'{what} returned no reference')
        return reply.result.value


class Node:
    """One address space of a deployment.

    Args:
        id: Node identifier.
        checked: Checked transformed program.
        policy: Placement policy.
        transport: Transport connecting the node to its peers.
        entry: Entry node identifier.
        protocol: Proxy protocol.
        step_budget: Interpreter step budget.
        trace: Trace sink of the entry node.
        on_checkpoint: Callback run by ``Sys.checkpoint(n)``.

    """

    def __init__(self, id: 'str', checked: 'CheckedProgram', policy: 'PlacementPolicy',  # pylint: disable=redefined-builtin
                 transport: 'Transport', *, entry: 'str', protocol: 'str' = 'RAF',
                 step_budget: 'int' = DEFAULT_STEP_BUDGET, trace: 'Optional[Trace]' = None,
                 on_checkpoint: 'Optional[Callable[[int], None]]' = None) -> 'None':
        #: Node identifier.
        self.id = id
        #: Logger of this node.
        self.logger = node_logger(id)
        #: Entry node identifier.
        self.entry = entry
        #: Placement policy.
        self.policy = policy
        #: Transport.
        self.transport = transport
        #: Proxy protocol.
        self.protocol = protocol
        #: Checkpoint callback.
        self.on_checkpoint = on_checkpoint
        #: Exported objects.
        self.registry = Registry(id)
        #: Runtime hooks.
        self.hooks = NodeHooks(self)
        #: Interpreter of this address space.
        self.interp = Interpreter(checked, self.hooks, step_budget=step_budget,
                                  trace=Trace() if trace is None else trace)
        self._ids = itertools.count(1)
        transport.attach(self)

    def __repr__(self) -> 'str':
        return f'<Node {self.id} ({len(self.registry)} exported)>'

    @property
    def trace(self) -> 'Trace':
        """Trace sink (meaningful on the entry node)."""
        return self.interp.trace

    ##########################################################################
    # Methods.
    ##########################################################################

    def run(self) -> 'Trace':
        """Run the program's entry method on this node."""
        self.logger.info('running the entry method')
        return self.interp.run()

    def request(self, target: 'str', kind: 'Kind', /, **fields: 'Any') -> 'Message':
        """Send a request to node ``target`` and wait for the reply."""
        message = Message(VERSION, next(self._ids), kind, **fields)
        self.logger.debug('-> %s: %s #%d %s', target, kind.value, message.id,
                          fields.get('member') or fields.get('cls') or '')
        return self.transport.request(self.id, target, message)

    def handle_frame(self, frame: 'bytes') -> 'bytes':
        """Serve one request frame and return the reply frame."""
        codec = self.transport.codec
        return codec.encode(self.dispatch(codec.decode(frame)))

    def dispatch(self, message: 'Message') -> 'Message':
        """Serve one request message.

        Errors are returned as ``err`` replies carrying the error type
        and message.

        """
        try:
            result = self._dispatch(message)
        except (BaseError, RecursionError) as exc:
            self.logger.debug('failed request %d: %s', message.id, exc)
            return Message(VERSION, message.id, Kind.ERR, error=f'{type(exc).__name__}: {exc}')
        return Message(VERSION, message.id, Kind.REPLY, result=result)

    def instances(self, cls: 'str') -> 'list[Obj]':
        """Exported instances of source class ``cls`` held by this node."""
        return self.registry.instances(cls)

    ##########################################################################
    # Utilities.
    ##########################################################################

    @deep_stack
    def _dispatch(self, message: 'Message') -> 'TaggedValue':
        if message.kind is Kind.MAKE:
            obj = self.interp.instantiate(local_object(message.cls))  # type: ignore[arg-type]
            return TaggedValue(Tag.REF, self.registry.export(obj))

        if message.kind is Kind.DISCOVER:
            cls = message.cls  # type: str
            home = self.policy.statics_home(cls)
            if home != self.id:
                raise MooRuntimeError(f'node {self.id} is not the statics home of {cls} ({home} is)')
            obj = self.interp.local_singleton(cls)
            return TaggedValue(Tag.REF, self.registry.export_static(cls, obj))

        if message.kind is not Kind.INVOKE:
            raise WireError(f'unexpected {message.kind.value} request')

        target = message.target  # type: RemoteRef
        args = [self.hooks.unmarshal(arg) for arg in message.args]
        if target.oid == TRACE_OID:
            if message.member != PRINT or self.id != self.entry or len(args) != 1:
                raise MooRuntimeError(f'invalid trace sink request {message.member} on node {self.id}')
            self.interp.trace.append(args[0])
            return TaggedValue(Tag.NULL)

        obj = self.registry.resolve(target.oid)
        if message.member == SEAL:
            self.interp.seal(obj)
            return TaggedValue(Tag.NULL)

        result = self.interp.invoke(obj, message.member, args)  # type: ignore[arg-type]
        found = self.interp.table.find_method(obj.cls, message.member, len(args))  # type: ignore[arg-type]
        ret = found[1].ret if found is not None else 'void'
        return self.hooks.marshal(result, ret)
