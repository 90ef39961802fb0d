# -*- coding: utf-8 -*-
"""RAF Wire Protocol
=======================

:mod:`mookit.distrib.wire` contains the message model and codec of
the ``RAF`` protocol spoken between nodes. A frame is a 4-byte
big-endian payload length followed by the payload, a canonical UTF-8
JSON object whose keys appear in the fixed order

    ``v``, ``id``, ``kind``, ``class``, ``member``, ``target``,
    ``args``, ``result``, ``error``

with absent optional fields omitted. Canonical serialisation uses the
separators ``,`` and ``: `` and no ASCII escaping, e.g. the discover
request ``{"v": 1,"id": 7,"kind": "discover","class": "X"}`` is a
48 byte payload.

A marshalled value is ``{"t": <tag>, "v": <payload>}``; ``null`` has
no payload and a ``ref`` payload is ``{"node", "oid", "class"}``.

"""
import json
import struct
from typing import TYPE_CHECKING

from mookit.const.kind import Kind
from mookit.const.tag import Tag
from mookit.corekit.infoclass import Info
from mookit.runtime.values import RemoteRef
from mookit.utilities.exceptions import (FrameTooLarge, MalformedFrame, UnknownProtocol,
                                         VersionMismatch, WireError)

if TYPE_CHECKING:
    from typing import Any, Optional

    from mookit.runtime.values import Value

__all__ = [
    'encode_message', 'decode_message',
    'Message', 'TaggedValue', 'RAFCodec', 'UnknownCodec',
    'VERSION', 'MAX_PAYLOAD', 'KEY_ORDER',
]

#: Protocol version.
VERSION = 1
#: Largest payload accepted (16 MiB).
MAX_PAYLOAD = 16 * 1024 * 1024
#: Key order of encoded messages.
KEY_ORDER = ('v', 'id', 'kind', 'class', 'member', 'target', 'args', 'result', 'error')

_PREFIX = struct.Struct('>I')
_SEPARATORS = (',', ': ')
_TAGS = {'int': Tag.INT, 'long': Tag.LONG, 'bool': Tag.BOOL, 'string': Tag.STR}
_RANGE = {Tag.INT: 32, Tag.LONG: 64}


class TaggedValue(Info):
    """Marshalled value."""

    #: Value tag.
    tag: 'Tag'
    #: Payload (:data:`None` for ``null``).
    value: 'Any' = None

    if TYPE_CHECKING:
        def __init__(self, tag: 'Tag', value: 'Any' = None) -> 'None': ...  # pylint: disable=unused-argument,super-init-not-called,multiple-statements

    @classmethod
    def of(cls, value: 'Value', type_: 'str') -> 'TaggedValue':
        """Marshal a primitive or reference value of static type ``type_``."""
        if value is None:
            return cls(Tag.NULL)
        if isinstance(value, RemoteRef):
            return cls(Tag.REF, value)
        tag = _TAGS.get(type_)
        if tag is None:
            if isinstance(value, bool):
                tag = Tag.BOOL
            elif isinstance(value, int):
                tag = Tag.LONG
            elif isinstance(value, str):
                tag = Tag.STR
            else:
                raise WireError(f'cannot marshal {value!r} as {type_}')
        return cls(tag, value)

    def to_json(self) -> 'dict[str, Any]':
        """JSON form of the value."""
        if self.tag is Tag.NULL:
            return {'t': self.tag.value}
        if self.tag is Tag.REF:
            ref = self.value  # type: RemoteRef
            return {'t': self.tag.value, 'v': {'node': ref.node, 'oid': ref.oid, 'class': ref.cls}}
        return {'t': self.tag.value, 'v': self.value}

    @classmethod
    def from_json(cls, data: 'Any') -> 'TaggedValue':
        """Parse and validate the JSON form of a value."""
        if not isinstance(data, dict) or 't' not in data or set(data) - {'t', 'v'}:
            raise MalformedFrame(f'malformed value {data!r}')
        try:
            tag = Tag(data['t'])
        except ValueError:
            raise MalformedFrame(f'unknown value tag {data["t"]!r}') from None

        if tag is Tag.NULL:
            if 'v' in data:
                raise MalformedFrame('null value carries a payload')
            return cls(tag)
        if 'v' not in data:
            raise MalformedFrame(f'{tag.value} value without payload')
        payload = data['v']

        if tag in _RANGE:
            bits = _RANGE[tag]
            if type(payload) is not int or not -(1 << (bits - 1)) <= payload < (1 << (bits - 1)):  # pylint: disable=unidiomatic-typecheck
                raise MalformedFrame(f'invalid {tag.value} payload {payload!r}')
        elif tag is Tag.BOOL:
            if not isinstance(payload, bool):
                raise MalformedFrame(f'invalid bool payload {payload!r}')
        elif tag is Tag.STR:
            if not isinstance(payload, str):
                raise MalformedFrame(f'invalid str payload {payload!r}')
        else:
            payload = _ref(payload)
        return cls(tag, payload)


class Message(Info):
    """Invocation message."""

    #: Protocol version.
    v: 'int'
    #: Correlation identifier.
    id: 'int'
    #: Message kind.
    kind: 'Kind'
    #: Class name (``class`` on the wire).
    cls: 'Optional[str]' = None
    #: Member name.
    member: 'Optional[str]' = None
    #: Invocation target.
    target: 'Optional[RemoteRef]' = None
    #: Arguments.
    args: 'tuple[TaggedValue, ...]' = ()
    #: Reply value.
    result: 'Optional[TaggedValue]' = None
    #: Error message.
    error: 'Optional[str]' = None

    if TYPE_CHECKING:
        def __init__(self, v: 'int', id: 'int', kind: 'Kind', cls: 'Optional[str]' = None, member: 'Optional[str]' = None, target: 'Optional[RemoteRef]' = None, args: 'tuple[TaggedValue, ...]' = (), result: 'Optional[TaggedValue]' = None, error: 'Optional[str]' = None) -> 'None': ...  # pylint: disable=unused-argument,super-init-not-called,multiple-statements,line-too-long,redefined-builtin

    def validate(self) -> 'Message':
        """Check the per-kind invariants.

        Raises:
            MalformedFrame: If a required field is missing.

        """
        if not 0 <= self.id < 1 << 64:
            raise MalformedFrame(f'correlation id {self.id} out of range')
        if self.kind is Kind.INVOKE and (self.target is None or self.member is None):
            raise MalformedFrame('invoke message without target or member')
        if self.kind in (Kind.MAKE, Kind.DISCOVER) and self.cls is None:
            raise MalformedFrame(f'{self.kind.value} message without class')
        if self.kind is Kind.ERR and self.error is None:
            raise MalformedFrame('err message without error')
        return self

    def to_json(self) -> 'dict[str, Any]':
        """JSON form of the message in key order."""
        data = {'v': self.v, 'id': self.id, 'kind': self.kind.value}  # type: dict[str, Any]
        if self.cls is not None:
            data['class'] = self.cls
        if self.member is not None:
            data['member'] = self.member
        if self.target is not None:
            data['target'] = {'node': self.target.node, 'oid': self.target.oid, 'class': self.target.cls}
        if self.args:
            data['args'] = [arg.to_json() for arg in self.args]
        if self.result is not None:
            data['result'] = self.result.to_json()
        if self.error is not None:
            data['error'] = self.error
        return data


def _ref(data: 'Any') -> 'RemoteRef':
    if not isinstance(data, dict) or set(data) != {'node', 'oid', 'class'}:
        raise MalformedFrame(f'malformed reference {data!r}')
    if (not isinstance(data['node'], str) or type(data['oid']) is not int  # pylint: disable=unidiomatic-typecheck
            or not isinstance(data['class'], str) or not 0 <= data['oid'] < 1 << 64):
        raise MalformedFrame(f'malformed reference {data!r}')
    return RemoteRef(data['node'], data['oid'], data['class'])


def _optional_str(data: 'dict[str, Any]', key: 'str') -> 'Optional[str]':
    value = data.get(key)
    if value is not None and not isinstance(value, str):
        raise MalformedFrame(f'field {key} must be a string')
    return value


def encode_message(message: 'Message') -> 'bytes':
    """Encode a message into a frame.

    Raises:
        FrameTooLarge: If the payload exceeds :data:`MAX_PAYLOAD`.

    """
    message.validate()
    payload = json.dumps(message.to_json(), separators=_SEPARATORS, ensure_ascii=False).encode('utf-8')
    if len(payload) > MAX_PAYLOAD:
        raise FrameTooLarge(f'payload of {len(payload)} bytes exceeds {MAX_PAYLOAD}')
    return _PREFIX.pack(len(payload)) + payload


def decode_message(frame: 'bytes') -> 'Message':
    """Decode a complete frame.

    Raises:
        MalformedFrame: On truncated frames, invalid JSON, unknown keys
            or invalid fields.
        VersionMismatch: If the protocol version is not :data:`VERSION`.
        FrameTooLarge: If the announced payload exceeds :data:`MAX_PAYLOAD`.

    """
    if len(frame) < _PREFIX.size:
        raise MalformedFrame(f'truncated length prefix ({len(frame)} bytes)')
    (length,) = _PREFIX.unpack_from(frame)
    if length > MAX_PAYLOAD:
        raise FrameTooLarge(f'announced payload of {length} bytes exceeds {MAX_PAYLOAD}')
    payload = frame[_PREFIX.size:]
    if len(payload) != length:
        raise MalformedFrame(f'payload length {len(payload)} does not match prefix {length}')

    try:
        data = json.loads(payload.decode('utf-8'))
    except (UnicodeDecodeError, ValueError) as exc:
        raise MalformedFrame(f'invalid payload: {exc}') from None
    if not isinstance(data, dict):
        raise MalformedFrame('payload is not an object')
    unknown = set(data) - set(KEY_ORDER)
    if unknown:
        raise MalformedFrame(f'unknown keys {sorted(unknown)}')
    for key in ('v', 'id', 'kind'):
        if key not in data:
            raise MalformedFrame(f'missing key {key!r}')
    if type(data['v']) is not int or data['v'] != VERSION:  # pylint: disable=unidiomatic-typecheck
        raise VersionMismatch(f'unsupported protocol version {data["v"]!r}')
    if type(data['id']) is not int:  # pylint: disable=unidiomatic-typecheck
        raise MalformedFrame('correlation id must be an integer')
    try:
        kind = Kind(data['kind'])
    except ValueError:
        raise MalformedFrame(f'unknown message kind {data["kind"]!r}') from None

    args = data.get('args', [])
    if not isinstance(args, list):
        raise MalformedFrame('args must be a list')
    message = Message(
        v=data['v'],
        id=data['id'],
        kind=kind,
        cls=_optional_str(data, 'class'),
        member=_optional_str(data, 'member'),
        target=None if data.get('target') is None else _ref(data['target']),
        args=tuple(TaggedValue.from_json(arg) for arg in args),
        result=None if data.get('result') is None else TaggedValue.from_json(data['result']),
        error=_optional_str(data, 'error'),
    )
    return message.validate()


class RAFCodec:
    """Codec of the ``RAF`` protocol."""

    #: Protocol name.
    name = 'RAF'

    @staticmethod
    def encode(message: 'Message') -> 'bytes':
        """Encode a message into a frame."""
        return encode_message(message)

    @staticmethod
    def decode(frame: 'bytes') -> 'Message':
        """Decode a frame into a message."""
        return decode_message(frame)


class UnknownCodec:
    """Codec of unregistered protocols."""

    #: Protocol name.
    name = 'unknown'

    @staticmethod
    def encode(message: 'Message') -> 'bytes':
        raise UnknownProtocol(f'no codec to encode message {message.id}')

    @staticmethod
    def decode(frame: 'bytes') -> 'Message':
        raise UnknownProtocol(f'no codec to decode a frame of {len(frame)} bytes')
