# -*- coding: utf-8 -*-
"""Deployments
=================

:mod:`mookit.distrib.deployment` contains the deployment manifest
model and :class:`Deployment`, which wires a set of
:class:`~mookit.distrib.node.Node` over a transport and runs the
transformed program from its entry node.

A manifest is a JSON document::

    {
        "nodes": {"n1": "127.0.0.1:7001", "n2": "127.0.0.1:7002"},
        "entry": "n1",
        "transport": "tcp",
        "mode": "thread",
        "protocol": "RAF",
        "placement": {"C": "n2"},
        "statics": {"Counter": "n2"},
        "checkpoints": {"1": {"C": "local"}},
        "timeout": 30
    }

Only ``nodes`` is required. ``entry`` defaults to the first node,
``transport`` to ``loopback`` and ``mode`` (``thread`` or ``process``,
the latter for ``tcp`` only) to ``thread``. Classes absent from
``placement`` are created locally, classes absent from ``statics``
keep their static state on the entry node. ``checkpoints`` schedules
placement changes applied when the program calls ``Sys.checkpoint(n)``.

"""
import json
import os
import signal
import subprocess  # nosec: B404
import sys
import threading
from typing import TYPE_CHECKING

from mookit.corekit.infoclass import Info
from mookit.distrib.node import Node
from mookit.distrib.policy import LOCAL, PlacementPolicy
from mookit.distrib.transport import DEFAULT_TIMEOUT, LoopbackTransport, TCPTransport, parse_address
from mookit.foundation.naming import object_factory
from mookit.lang.parser import decode_source
from mookit.runtime.interpreter import DEFAULT_STEP_BUDGET
from mookit.utilities.exceptions import ManifestError, TransportError
from mookit.utilities.logging import logger
from mookit.utilities.warnings import ManifestWarning, NodeWarning, warn

if TYPE_CHECKING:
    from typing import Any, Mapping, Optional, Union

    from mookit.distrib.transport import Transport
    from mookit.lang.checker import CheckedProgram
    from mookit.runtime.values import Trace

__all__ = ['Manifest', 'Deployment', 'load_manifest', 'FAILURE_MARKER']

#: Trace line prefix marking a transport failure.
FAILURE_MARKER = '#TRANSPORT-FAILURE'

_KEYS = ('nodes', 'entry', 'transport', 'mode', 'protocol', 'placement', 'statics', 'checkpoints', 'timeout')


class Manifest(Info):
    """Deployment manifest."""

    #: Node identifier to ``host:port`` address.
    nodes: 'dict[str, str]'
    #: Entry node identifier.
    entry: 'str'
    #: Transport name (``loopback`` or ``tcp``).
    transport: 'str' = 'loopback'
    #: Node hosting (``thread`` or ``process``).
    mode: 'str' = 'thread'
    #: Proxy protocol.
    protocol: 'str' = 'RAF'
    #: Instance placement per class.
    placement: 'dict[str, str]'
    #: Statics home per class.
    statics: 'dict[str, str]'
    #: Scheduled placement changes per checkpoint number.
    checkpoints: 'dict[int, dict[str, str]]'
    #: Reply timeout in seconds.
    timeout: 'float' = DEFAULT_TIMEOUT
    #: File the manifest was loaded from.
    path: 'Optional[str]' = None

    if TYPE_CHECKING:
        def __init__(self, nodes: 'dict[str, str]', entry: 'str', transport: 'str', mode: 'str', protocol: 'str', placement: 'dict[str, str]', statics: 'dict[str, str]', checkpoints: 'dict[int, dict[str, str]]', timeout: 'float', path: 'Optional[str]' = None) -> 'None': ...  # pylint: disable=unused-argument,super-init-not-called,multiple-statements,line-too-long

    @classmethod
    def local(cls, node: 'str' = 'n1') -> 'Manifest':
        """Single node in-process manifest."""
        return cls(nodes={node: '127.0.0.1:0'}, entry=node, transport='loopback', mode='thread',
                   protocol='RAF', placement={}, statics={}, checkpoints={}, timeout=DEFAULT_TIMEOUT)


def _mapping(data: 'Any', key: 'str', nodes: 'Mapping[str, str]', *, local: 'bool') -> 'dict[str, str]':
    value = data.get(key, {})
    if not isinstance(value, dict):
        raise ManifestError(f'manifest key {key!r} must be an object')
    for cls, node in value.items():
        if not isinstance(node, str) or (node not in nodes and not (local and node == LOCAL)):
            raise ManifestError(f'manifest {key} of {cls} names unknown node {node!r}')
    return dict(value)


def load_manifest(source: 'Union[str, bytes, os.PathLike[str], Mapping[str, Any]]') -> 'Manifest':
    """Load and validate a deployment manifest.

    Args:
        source: Manifest file path, or an already decoded manifest.

    Raises:
        ManifestError: If the manifest is unreadable or invalid.

    """
    path = None
    if isinstance(source, (str, os.PathLike)):
        path = os.fspath(source)
        try:
            with open(path, 'rb') as file:
                data = json.loads(decode_source(file.read()))
        except (OSError, ValueError) as exc:
            raise ManifestError(f'cannot load manifest {path}: {exc}') from None
    elif isinstance(source, bytes):
        try:
            data = json.loads(decode_source(source))
        except ValueError as exc:
            raise ManifestError(f'invalid manifest: {exc}') from None
    else:
        data = source
    if not isinstance(data, dict):
        raise ManifestError('manifest must be a JSON object')

    for key in sorted(set(data) - set(_KEYS)):
        warn(f'unknown manifest key {key!r} ignored', ManifestWarning)

    nodes = data.get('nodes')
    if not isinstance(nodes, dict) or not nodes:
        raise ManifestError('manifest must list at least one node')
    for name, address in nodes.items():
        if not isinstance(address, str):
            raise ManifestError(f'address of node {name} must be a "host:port" string')
        try:
            parse_address(address)
        except TransportError as exc:
            raise ManifestError(f'node {name}: {exc}') from None

    entry = data.get('entry', next(iter(nodes)))
    if entry not in nodes:
        raise ManifestError(f'entry node {entry!r} is not listed')
    transport = data.get('transport', 'loopback')
    if transport not in ('loopback', 'tcp'):
        raise ManifestError(f'unknown transport {transport!r}')
    mode = data.get('mode', 'thread')
    if mode not in ('thread', 'process') or (mode == 'process' and transport != 'tcp'):
        raise ManifestError(f'unsupported node mode {mode!r} for transport {transport}')
    protocol = data.get('protocol', 'RAF')
    if not isinstance(protocol, str):
        raise ManifestError('protocol must be a string')

    checkpoints = {}  # type: dict[int, dict[str, str]]
    raw = data.get('checkpoints', {})
    if not isinstance(raw, dict):
        raise ManifestError("manifest key 'checkpoints' must be an object")
    for number, placement in raw.items():
        try:
            index = int(number)
        except ValueError:
            raise ManifestError(f'checkpoint {number!r} is not a number') from None
        checkpoints[index] = _mapping({'checkpoint': placement}, 'checkpoint', nodes, local=True)

    timeout = data.get('timeout', DEFAULT_TIMEOUT)
    if isinstance(timeout, bool) or not isinstance(timeout, (int, float)) or timeout <= 0:
        raise ManifestError(f'invalid timeout {timeout!r}')

    return Manifest(
        nodes=dict(nodes),
        entry=entry,
        transport=transport,
        mode=mode,
        protocol=protocol,
        placement=_mapping(data, 'placement', nodes, local=True),
        statics=_mapping(data, 'statics', nodes, local=False),
        checkpoints=checkpoints,
        timeout=float(timeout),
        path=path,
    )


class Deployment:
    """Nodes of one distributed run.

    Args:
        manifest: Deployment manifest.
        checked: Checked transformed program.
        step_budget: Interpreter step budget per node.
        source: Program file, required to spawn node processes.
        trace: Trace sink of the entry node.

    """

    def __init__(self, manifest: 'Manifest', checked: 'CheckedProgram', *,
                 step_budget: 'int' = DEFAULT_STEP_BUDGET, source: 'Optional[str]' = None,
                 trace: 'Optional[Trace]' = None) -> 'None':
        #: Deployment manifest.
        self.manifest = manifest
        #: Checked transformed program.
        self.checked = checked
        #: Interpreter step budget.
        self.step_budget = step_budget
        #: Program file.
        self.source = source
        self._trace = trace
        #: Placement policy shared by in-process nodes.
        self.policy = PlacementPolicy(manifest.entry, self._placeable(manifest.placement),
                                      self._placeable(manifest.statics))
        #: Nodes hosted by this process.
        self.nodes = {}  # type: dict[str, Node]
        #: Transport.
        self.transport = None  # type: Optional[Transport]
        self._processes = []  # type: list[subprocess.Popen[bytes]]

    def __enter__(self) -> 'Deployment':
        self.start()
        return self

    def __exit__(self, *exc: 'Any') -> 'None':
        self.close()

    @property
    def entry(self) -> 'Node':
        """Entry node."""
        return self.nodes[self.manifest.entry]

    ##########################################################################
    # Methods.
    ##########################################################################

    def start(self) -> 'None':
        """Create the transport and the nodes hosted by this process."""
        if self.transport is not None:
            return
        manifest = self.manifest
        if manifest.transport == 'loopback':
            self.transport = LoopbackTransport(manifest.protocol)
        else:
            self.transport = TCPTransport({name: parse_address(addr) for name, addr in manifest.nodes.items()},
                                          manifest.protocol, entry=manifest.entry, timeout=manifest.timeout)

        hosted = list(manifest.nodes) if manifest.mode == 'thread' else [manifest.entry]
        for name in hosted:
            self.nodes[name] = Node(name, self.checked, self.policy, self.transport,
                                    entry=manifest.entry, protocol=manifest.protocol,
                                    step_budget=self.step_budget,
                                    trace=self._trace if name == manifest.entry else None,
                                    on_checkpoint=self.apply_checkpoint)
        if manifest.mode == 'process':
            self._spawn([name for name in manifest.nodes if name != manifest.entry])
        self.transport.start()
        logger.info('deployment of %d nodes over %s (%s mode), entry %s', len(manifest.nodes),
                    manifest.transport, manifest.mode, manifest.entry)

    def run(self) -> 'Trace':
        """Run the program from the entry node.

        Returns:
            The entry node's trace.

        Raises:
            TransportError: On transport failure; the failure marker is
                appended to the trace first.

        """
        self.start()
        restore = self._install_reload()
        trace = self.entry.trace
        try:
            self.entry.run()
        except TransportError as exc:
            trace.append(f'{FAILURE_MARKER} {exc}')
            raise
        finally:
            if restore is not None:
                signal.signal(signal.SIGHUP, restore)  # pylint: disable=no-member
        return trace

    def serve(self, node: 'str') -> 'None':
        """Host node ``node`` of a TCP deployment in this process until it is closed."""
        manifest = self.manifest
        if node not in manifest.nodes or node == manifest.entry:
            raise ManifestError(f'node {node!r} is not a serving node of the manifest')
        if manifest.transport != 'tcp':
            raise ManifestError('only tcp deployments can host nodes in separate processes')
        transport = TCPTransport({name: parse_address(addr) for name, addr in manifest.nodes.items()},
                                 manifest.protocol, entry=manifest.entry, timeout=manifest.timeout)
        self.transport = transport
        self.nodes[node] = Node(node, self.checked, self.policy, transport,
                                entry=manifest.entry, protocol=manifest.protocol,
                                step_budget=self.step_budget, on_checkpoint=self.apply_checkpoint)
        transport.start()
        try:
            transport.serve_forever(node)
        finally:
            transport.close()

    def close(self) -> 'None':
        """Shut the deployment down."""
        if self.transport is not None:
            self.transport.close()
        for process in self._processes:
            process.terminate()
            try:
                process.wait(timeout=5)
            except subprocess.TimeoutExpired:
                warn(f'node process {process.pid} did not terminate', NodeWarning)
                process.kill()
        self._processes.clear()

    def kill(self, node: 'str') -> 'None':
        """Take node ``node`` off the network."""
        if self.transport is None:
            raise TransportError('deployment is not started')
        self.transport.kill(node)

    def apply_checkpoint(self, number: 'int') -> 'None':
        """Apply the placement changes scheduled for checkpoint ``number``."""
        placement = self.manifest.checkpoints.get(number)
        if placement is None:
            logger.debug('checkpoint %d: nothing scheduled', number)
            return
        logger.info('checkpoint %d reached', number)
        self.policy.update(self._placeable(placement))

    def reload(self, path: 'Optional[str]' = None) -> 'None':
        """Reload the manifest and replace the instance placement.

        Static homes and nodes cannot change during a run; changes to
        them are ignored with a :class:`~mookit.utilities.warnings.ManifestWarning`.

        """
        path = path or self.manifest.path
        if path is None:
            raise ManifestError('manifest was not loaded from a file')
        manifest = load_manifest(path)
        if manifest.nodes != self.manifest.nodes or manifest.statics != self.manifest.statics:
            warn('changes to nodes and statics take effect on the next run only', ManifestWarning)
        self.manifest = self.manifest._replace(placement=manifest.placement, checkpoints=manifest.checkpoints)
        version = self.policy.replace(self._placeable(manifest.placement))
        logger.info('manifest %s reloaded (policy v%d)', path, version)

    ##########################################################################
    # Utilities.
    ##########################################################################

    def _placeable(self, mapping: 'Mapping[str, str]') -> 'dict[str, str]':
        classes = self.checked.table.classes
        placeable = {}
        for cls, node in mapping.items():
            if object_factory(cls) not in classes:
                warn(f'class {cls} is not transformed; placement ignored', ManifestWarning)
                continue
            placeable[cls] = node
        return placeable

    def _install_reload(self) -> 'Any':
        if not hasattr(signal, 'SIGHUP') or self.manifest.path is None:
            return None
        if threading.current_thread() is not threading.main_thread():
            return None
        return signal.signal(signal.SIGHUP, lambda signum, frame: self.reload())  # pylint: disable=no-member

    def _spawn(self, names: 'list[str]') -> 'None':
        if self.source is None or self.manifest.path is None:
            raise ManifestError('process mode needs a program file and a manifest file')
        for name in names:
            command = [sys.executable, '-m', 'mookit.distrib', '--manifest', self.manifest.path,
                       '--node', name, '--step-budget', str(self.step_budget), self.source]
            logger.info('spawning node %s', name)
            self._processes.append(subprocess.Popen(command))  # nosec: B603 pylint: disable=consider-using-with
