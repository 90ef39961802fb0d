# -*- coding: utf-8 -*-
"""RAF wire codec."""
import json
import random
import struct

import pytest

from mookit.const.kind import Kind
from mookit.const.tag import Tag
from mookit.distrib.wire import (MAX_PAYLOAD, VERSION, Message, RAFCodec, TaggedValue, decode_message,
                                 encode_message)
from mookit.runtime.values import RemoteRef
from mookit.utilities.exceptions import FrameTooLarge, MalformedFrame, VersionMismatch, WireError

DISCOVER = struct.pack('>I', 48) + b'{"v": 1,"id": 7,"kind": "discover","class": "X"}'


def frame(data):
    payload = json.dumps(data).encode('utf-8')
    return struct.pack('>I', len(payload)) + payload


def test_discover_frame():
    message = Message(VERSION, 7, Kind.DISCOVER, cls='X')
    assert encode_message(message) == DISCOVER
    assert len(DISCOVER) == 4 + 48
    assert decode_message(DISCOVER) == message


def test_key_order():
    message = Message(VERSION, 3, Kind.INVOKE, member='m', target=RemoteRef('n2', 5, 'X'),
                      args=(TaggedValue(Tag.LONG, 5), TaggedValue(Tag.NULL)))
    payload = encode_message(message)[4:].decode('utf-8')
    assert payload == ('{"v": 1,"id": 3,"kind": "invoke","member": "m",'
                       '"target": {"node": "n2","oid": 5,"class": "X"},'
                       '"args": [{"t": "long","v": 5},{"t": "null"}]}')


def test_unicode_not_escaped():
    message = Message(VERSION, 1, Kind.REPLY, result=TaggedValue(Tag.STR, 'héllo ☃'))
    encoded = encode_message(message)
    assert 'héllo ☃'.encode('utf-8') in encoded
    assert decode_message(encoded) == message


@pytest.mark.parametrize('value, type_, tag', [
    (None, 'X_O_Int', Tag.NULL),
    (3, 'int', Tag.INT),
    (3, 'long', Tag.LONG),
    (True, 'bool', Tag.BOOL),
    ('s', 'string', Tag.STR),
    (RemoteRef('n1', 1, 'A'), 'A_O_Int', Tag.REF),
    (3, 'ref', Tag.LONG),
    (False, 'ref', Tag.BOOL),
])
def test_tagging(value, type_, tag):
    assert TaggedValue.of(value, type_).tag is tag


def test_untaggable():
    with pytest.raises(WireError):
        TaggedValue.of(1.5, 'ref')


##############################################################################
# Seeded round trips.
##############################################################################

def random_text(rng):
    alphabet = 'abcXYZ_$ é"\\\n☃'
    return ''.join(rng.choice(alphabet) for _ in range(rng.randrange(8)))


def random_ref(rng):
    return RemoteRef(f'n{rng.randrange(4)}', rng.randrange(1 << 64), random_text(rng))


def random_value(rng):
    tag = rng.choice(list(Tag))
    if tag is Tag.NULL:
        return TaggedValue(tag)
    if tag is Tag.INT:
        return TaggedValue(tag, rng.randrange(-(1 << 31), 1 << 31))
    if tag is Tag.LONG:
        return TaggedValue(tag, rng.randrange(-(1 << 63), 1 << 63))
    if tag is Tag.BOOL:
        return TaggedValue(tag, rng.random() < 0.5)
    if tag is Tag.STR:
        return TaggedValue(tag, random_text(rng))
    return TaggedValue(tag, random_ref(rng))


def random_message(rng):
    kind = rng.choice(list(Kind))
    ident = rng.randrange(1 << 64)
    if kind is Kind.INVOKE:
        return Message(VERSION, ident, kind, member=random_text(rng), target=random_ref(rng),
                       args=tuple(random_value(rng) for _ in range(rng.randrange(4))))
    if kind is Kind.REPLY:
        return Message(VERSION, ident, kind, result=random_value(rng) if rng.random() < 0.8 else None)
    if kind is Kind.ERR:
        return Message(VERSION, ident, kind, error=random_text(rng))
    return Message(VERSION, ident, kind, cls=random_text(rng))


def test_seeded_round_trips():
    rng = random.Random(20240901)
    for _ in range(10000):
        message = random_message(rng)
        encoded = RAFCodec.encode(message)
        decoded = RAFCodec.decode(encoded)
        assert decoded == message
        assert RAFCodec.encode(decoded) == encoded


##############################################################################
# Rejected frames.
##############################################################################

@pytest.mark.parametrize('data', [
    b'',
    b'\x00\x00',
    DISCOVER[:-1],
    DISCOVER + b' ',
    struct.pack('>I', 3) + b'abc',
    struct.pack('>I', 2) + b'[]',
    struct.pack('>I', 2) + b'\xff\xfe',
])
def test_malformed_bytes(data):
    with pytest.raises(MalformedFrame):
        decode_message(data)


@pytest.mark.parametrize('data', [
    {'v': 1, 'id': 1, 'kind': 'discover', 'class': 'X', 'extra': 1},
    {'v': 1, 'id': 1},
    {'v': 1, 'id': 'one', 'kind': 'discover', 'class': 'X'},
    {'v': 1, 'id': -1, 'kind': 'discover', 'class': 'X'},
    {'v': 1, 'id': 1, 'kind': 'shout'},
    {'v': 1, 'id': 1, 'kind': 'invoke', 'member': 'm'},
    {'v': 1, 'id': 1, 'kind': 'invoke', 'target': {'node': 'n1', 'oid': 1, 'class': 'X'}},
    {'v': 1, 'id': 1, 'kind': 'make'},
    {'v': 1, 'id': 1, 'kind': 'err'},
    {'v': 1, 'id': 1, 'kind': 'discover', 'class': 5},
    {'v': 1, 'id': 1, 'kind': 'reply', 'result': {'t': 'int', 'v': 2**31}},
    {'v': 1, 'id': 1, 'kind': 'reply', 'result': {'t': 'int', 'v': True}},
    {'v': 1, 'id': 1, 'kind': 'reply', 'result': {'t': 'long', 'v': 1.0}},
    {'v': 1, 'id': 1, 'kind': 'reply', 'result': {'t': 'bool', 'v': 1}},
    {'v': 1, 'id': 1, 'kind': 'reply', 'result': {'t': 'str', 'v': None}},
    {'v': 1, 'id': 1, 'kind': 'reply', 'result': {'t': 'null', 'v': None}},
    {'v': 1, 'id': 1, 'kind': 'reply', 'result': {'t': 'float', 'v': 1.5}},
    {'v': 1, 'id': 1, 'kind': 'reply', 'result': {'t': 'int'}},
    {'v': 1, 'id': 1, 'kind': 'reply', 'result': {'t': 'ref', 'v': {'node': 'n1', 'oid': -1, 'class': 'X'}}},
    {'v': 1, 'id': 1, 'kind': 'reply', 'result': {'t': 'ref', 'v': {'node': 'n1', 'oid': 1}}},
    {'v': 1, 'id': 1, 'kind': 'invoke', 'member': 'm', 'target': {'node': 'n1', 'oid': 1, 'class': 'X'},
     'args': {'t': 'null'}},
])
def test_malformed_fields(data):
    with pytest.raises(MalformedFrame):
        decode_message(frame(data))


@pytest.mark.parametrize('version', [0, 2, '1', True, 1.0, None])
def test_version_mismatch(version):
    with pytest.raises(VersionMismatch):
        decode_message(frame({'v': version, 'id': 1, 'kind': 'discover', 'class': 'X'}))


def test_frame_too_large():
    with pytest.raises(FrameTooLarge):
        decode_message(struct.pack('>I', MAX_PAYLOAD + 1))
    message = Message(VERSION, 1, Kind.REPLY, result=TaggedValue(Tag.STR, 'x' * MAX_PAYLOAD))
    with pytest.raises(FrameTooLarge):
        encode_message(message)


def test_encode_validates():
    with pytest.raises(MalformedFrame):
        encode_message(Message(VERSION, 1, Kind.INVOKE, member='m'))
