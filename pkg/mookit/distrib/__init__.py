# -*- coding: utf-8 -*-
"""Distribution Runtime
==========================

:mod:`mookit.distrib` runs transformed programs across address
spaces: the ``RAF`` wire protocol (:mod:`~mookit.distrib.wire`), the
per-node object registry (:mod:`~mookit.distrib.registry`), placement
policies (:mod:`~mookit.distrib.policy`), transports
(:mod:`~mookit.distrib.transport`), nodes (:mod:`~mookit.distrib.node`)
and deployments (:mod:`~mookit.distrib.deployment`).

"""
from mookit.distrib.deployment import Deployment, Manifest, load_manifest
from mookit.distrib.node import Node
from mookit.distrib.policy import PlacementPolicy
from mookit.distrib.registry import Registry, export_object
from mookit.distrib.wire import Message, TaggedValue, decode_message, encode_message

__all__ = [
    'encode_message', 'decode_message', 'Message', 'TaggedValue',
    'export_object', 'Registry', 'PlacementPolicy', 'Node',
    'Deployment', 'Manifest', 'load_manifest',
]
