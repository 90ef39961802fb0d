# -*- coding: utf-8 -*-
"""Node Transports
=====================

:mod:`mookit.distrib.transport` contains the transports carrying
frames between nodes:

* :class:`LoopbackTransport` -- in-process, synchronous; a request is
  encoded, handed to the target node's :meth:`~mookit.distrib.node.Node.handle_frame`
  and the reply frame decoded, so nested requests are served by nested
  dispatch on the caller's stack
* :class:`TCPTransport` -- one listener per node; every connection has
  a reader thread feeding the node's inbox, and a single logical worker
  drains the inbox. A node awaiting a reply keeps serving inbound
  requests from the same inbox, so call-back chains do not deadlock.

Both transports carry byte-identical frames.

"""
import abc
import importlib
import queue
import socket
import struct
import threading
import time
from typing import TYPE_CHECKING

from mookit.const.kind import Kind
from mookit.distrib.wire import MAX_PAYLOAD
from mookit.foundation.transform import Transformer
from mookit.utilities.decorators import transport_errors
from mookit.utilities.exceptions import TransportError, UnknownProtocol, WireError
from mookit.utilities.logging import logger

if TYPE_CHECKING:
    from typing import Optional, Union

    from mookit.distrib.node import Node
    from mookit.distrib.wire import Message

    Codec = type

__all__ = [
    'Transport', 'LoopbackTransport', 'TCPTransport',
    'codec_for', 'parse_address', 'send_frame', 'recv_frame',
]

#: Default reply timeout in seconds.
DEFAULT_TIMEOUT = 30.0

_PREFIX = struct.Struct('>I')
_POLL = 0.2


def codec_for(protocol: 'str') -> 'Codec':
    """Fetch the wire codec registered for ``protocol``.

    Raises:
        UnknownProtocol: If the protocol has no codec.

    """
    if protocol not in Transformer.__protocol__:
        raise UnknownProtocol(f'unknown protocol {protocol!r}')
    module, name = Transformer.__protocol__[protocol]
    return getattr(importlib.import_module(module), name)


def parse_address(address: 'str') -> 'tuple[str, int]':
    """Split a ``host:port`` string."""
    host, sep, port = address.rpartition(':')
    if not sep or not port.isdigit():
        raise TransportError(f'invalid address {address!r}')
    return host or '127.0.0.1', int(port)


@transport_errors
def send_frame(sock: 'socket.socket', frame: 'bytes') -> 'None':
    """Write one frame."""
    sock.sendall(frame)


def _recv_exact(sock: 'socket.socket', size: 'int') -> 'bytes':
    chunks = []
    while size:
        chunk = sock.recv(size)
        if not chunk:
            raise EOFError('connection closed by peer')
        chunks.append(chunk)
        size -= len(chunk)
    return b''.join(chunks)


@transport_errors
def recv_frame(sock: 'socket.socket') -> 'bytes':
    """Read one frame (length prefix included)."""
    prefix = _recv_exact(sock, _PREFIX.size)
    (length,) = _PREFIX.unpack(prefix)
    if length > MAX_PAYLOAD:
        raise TransportError(f'peer announced a payload of {length} bytes')
    return prefix + _recv_exact(sock, length)


class Transport(metaclass=abc.ABCMeta):
    """Frame transport between nodes.

    Args:
        protocol: Wire protocol name.

    """

    def __init__(self, protocol: 'str' = 'RAF') -> 'None':
        #: Wire protocol name.
        self.protocol = protocol
        #: Wire codec.
        self.codec = codec_for(protocol)
        #: Attached local nodes.
        self.nodes = {}  # type: dict[str, Node]

    def attach(self, node: 'Node') -> 'None':
        """Attach a node hosted by this process."""
        self.nodes[node.id] = node

    def start(self) -> 'None':
        """Start serving attached nodes."""

    def close(self) -> 'None':
        """Stop serving attached nodes."""

    @abc.abstractmethod
    def request(self, source: 'str', target: 'str', message: 'Message') -> 'Message':
        """Send a request and wait for its reply."""

    @abc.abstractmethod
    def kill(self, node: 'str') -> 'None':
        """Take an attached node off the network."""


class LoopbackTransport(Transport):
    """In-process synchronous transport."""

    def __init__(self, protocol: 'str' = 'RAF') -> 'None':
        super().__init__(protocol)
        self._dead = set()  # type: set[str]

    def request(self, source: 'str', target: 'str', message: 'Message') -> 'Message':
        node = self.nodes.get(target)
        if node is None or target in self._dead:
            raise TransportError(f'node {target} is unreachable from {source}')
        frame = self.codec.encode(message)
        logger.debug('%s -> %s: %d bytes', source, target, len(frame))
        reply = self.codec.decode(node.handle_frame(frame))
        if reply.id != message.id:
            raise TransportError(f'reply {reply.id} does not answer request {message.id}')
        return reply

    def kill(self, node: 'str') -> 'None':
        logger.warning('node %s killed', node)
        self._dead.add(node)


class _Endpoint:
    """Network side of one node."""

    def __init__(self, transport: 'TCPTransport', node: 'Node') -> 'None':
        self.transport = transport
        self.node = node
        self.inbox = queue.Queue()  # type: queue.Queue[tuple[socket.socket, Union[Message, Exception]]]
        self.pending = {}  # type: dict[int, Message]
        self.peers = {}  # type: dict[str, socket.socket]
        self.closed = set()  # type: set[socket.socket]
        self.alive = threading.Event()
        self.listener = None  # type: Optional[socket.socket]
        self._conns = []  # type: list[socket.socket]

    def bind(self, address: 'tuple[str, int]') -> 'tuple[str, int]':
        listener = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        listener.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        listener.bind(address)
        listener.listen()
        listener.settimeout(_POLL)
        self.listener = listener
        self.alive.set()
        return listener.getsockname()[:2]

    def start(self, serve: 'bool') -> 'None':
        self._spawn(self._accept, f'{self.node.id}-listener')
        if serve:
            self._spawn(self._work, f'{self.node.id}-worker')
        self.node.logger.info('listening on %s:%d', *self.listener.getsockname()[:2])  # type: ignore[union-attr]

    def close(self) -> 'None':
        self.alive.clear()
        for sock in [self.listener, *self._conns, *self.peers.values()]:
            if sock is None:
                continue
            try:
                sock.shutdown(socket.SHUT_RDWR)
            except OSError:
                pass
            sock.close()

    def connect(self, target: 'str') -> 'socket.socket':
        sock = self.peers.get(target)
        if sock is not None:
            return sock
        address = self.transport.addresses.get(target)
        if address is None:
            raise TransportError(f'unknown node {target}')
        deadline = time.monotonic() + self.transport.connect_timeout
        while True:
            try:
                sock = socket.create_connection(address, timeout=self.transport.connect_timeout)
                break
            except OSError as exc:
                if time.monotonic() >= deadline:
                    raise TransportError(f'node {target} at {address[0]}:{address[1]} is unreachable: {exc}') from exc
                time.sleep(_POLL)
        sock.settimeout(None)
        self.peers[target] = sock
        self._conns.append(sock)
        self._spawn(self._read, f'{self.node.id}->{target}', sock)
        return sock

    def request(self, target: 'str', message: 'Message') -> 'Message':
        sock = self.connect(target)
        send_frame(sock, self.transport.codec.encode(message))
        deadline = time.monotonic() + self.transport.timeout
        while message.id not in self.pending:
            if sock in self.closed:
                self.peers.pop(target, None)
                raise TransportError(f'connection to node {target} lost')
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                raise TransportError(f'no reply from node {target} within {self.transport.timeout}s')
            try:
                item = self.inbox.get(timeout=min(remaining, _POLL))
            except queue.Empty:
                continue
            self.serve(*item)
        return self.pending.pop(message.id)

    def serve(self, conn: 'socket.socket', item: 'Union[Message, Exception]') -> 'None':
        if isinstance(item, Exception):
            self.closed.add(conn)
            return
        if item.kind in (Kind.REPLY, Kind.ERR):
            self.pending[item.id] = item
            return
        reply = self.node.dispatch(item)
        try:
            send_frame(conn, self.transport.codec.encode(reply))
        except TransportError as exc:
            self.node.logger.warning('cannot reply to request %d: %s', item.id, exc)

    def _spawn(self, target: 'object', name: 'str', *args: 'object') -> 'None':
        thread = threading.Thread(target=target, args=args, name=name, daemon=True)  # type: ignore[arg-type]
        thread.start()

    def _accept(self) -> 'None':
        while self.alive.is_set():
            try:
                conn, _ = self.listener.accept()  # type: ignore[union-attr]
            except socket.timeout:
                continue
            except OSError:
                break
            conn.settimeout(None)
            self._conns.append(conn)
            self._spawn(self._read, f'{self.node.id}-reader', conn)

    def _read(self, conn: 'socket.socket') -> 'None':
        while True:
            try:
                message = self.transport.codec.decode(recv_frame(conn))
            except (TransportError, WireError) as exc:
                if self.alive.is_set():
                    self.node.logger.debug('connection closed: %s', exc)
                self.inbox.put((conn, exc))
                return
            self.inbox.put((conn, message))

    def _work(self) -> 'None':
        while self.alive.is_set():
            try:
                item = self.inbox.get(timeout=_POLL)
            except queue.Empty:
                continue
            self.serve(*item)


class TCPTransport(Transport):
    """TCP transport.

    Args:
        addresses: Node identifier to ``(host, port)``; port ``0`` binds
            an ephemeral port for nodes hosted by this process.
        protocol: Wire protocol name.
        entry: Entry node identifier; it is served by the thread running
            the program instead of a worker.
        timeout: Reply timeout in seconds.
        connect_timeout: Connection establishment timeout in seconds.

    """

    def __init__(self, addresses: 'dict[str, tuple[str, int]]', protocol: 'str' = 'RAF', *,
                 entry: 'Optional[str]' = None, timeout: 'float' = DEFAULT_TIMEOUT,
                 connect_timeout: 'float' = 5.0) -> 'None':
        super().__init__(protocol)
        #: Node addresses.
        self.addresses = dict(addresses)
        #: Entry node identifier.
        self.entry = entry
        #: Reply timeout.
        self.timeout = timeout
        #: Connection timeout.
        self.connect_timeout = connect_timeout
        self._endpoints = {}  # type: dict[str, _Endpoint]

    def attach(self, node: 'Node') -> 'None':
        super().attach(node)
        endpoint = _Endpoint(self, node)
        self.addresses[node.id] = endpoint.bind(self.addresses[node.id])
        self._endpoints[node.id] = endpoint

    def start(self) -> 'None':
        for name, endpoint in self._endpoints.items():
            endpoint.start(serve=name != self.entry)

    def close(self) -> 'None':
        for endpoint in self._endpoints.values():
            endpoint.close()
        logger.info('transport closed (%d local nodes)', len(self._endpoints))

    def request(self, source: 'str', target: 'str', message: 'Message') -> 'Message':
        endpoint = self._endpoints.get(source)
        if endpoint is None:
            raise TransportError(f'node {source} is not hosted by this process')
        return endpoint.request(target, message)

    def kill(self, node: 'str') -> 'None':
        endpoint = self._endpoints.get(node)
        if endpoint is not None:
            logger.warning('node %s killed', node)
            endpoint.close()

    def serve_forever(self, node: 'str') -> 'None':
        """Block while the attached node ``node`` is alive."""
        endpoint = self._endpoints[node]
        while endpoint.alive.is_set():
            time.sleep(_POLL)
