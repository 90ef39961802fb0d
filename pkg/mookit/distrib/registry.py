# -*- coding: utf-8 -*-
"""Object Registry
=====================

:mod:`mookit.distrib.registry` contains :class:`Registry`, the
table of objects a node exports to its peers. Object identifiers
are allocated from a counter starting at 1 and never reused during
the lifetime of the node; identifier 0 is reserved for the trace
sink of the entry node.

"""
import itertools
from typing import TYPE_CHECKING

from mookit.foundation.naming import original_class
from mookit.runtime.values import RemoteRef
from mookit.utilities.exceptions import UnknownObject
from mookit.utilities.logging import logger

if TYPE_CHECKING:
    from mookit.runtime.values import Obj

__all__ = ['Registry', 'export_object', 'TRACE_OID', 'TRACE_CLASS']

#: Object identifier of the trace sink.
TRACE_OID = 0
#: Class name of the trace sink.
TRACE_CLASS = '$trace'


class Registry:
    """Exported objects of one node.

    Args:
        node: Owning node identifier.

    """

    def __init__(self, node: 'str') -> 'None':
        #: Owning node identifier.
        self.node = node
        #: Exported objects by identifier.
        self.objects = {}  # type: dict[int, Obj]
        #: Static singletons by class name.
        self.statics = {}  # type: dict[str, Obj]
        self._oids = {}  # type: dict[int, int]
        self._counter = itertools.count(1)

    def __len__(self) -> 'int':
        return len(self.objects)

    def export(self, obj: 'Obj') -> 'RemoteRef':
        """Export ``obj``; re-exporting returns the same reference."""
        oid = self._oids.get(id(obj))
        if oid is None:
            oid = next(self._counter)
            self._oids[id(obj)] = oid
            self.objects[oid] = obj
            logger.debug('%s exported %r as oid %d', self.node, obj, oid)
        return RemoteRef(self.node, oid, original_class(obj.cls))

    def export_static(self, cls: 'str', obj: 'Obj') -> 'RemoteRef':
        """Export the static singleton of class ``cls``."""
        self.statics.setdefault(cls, obj)
        return self.export(self.statics[cls])

    def resolve(self, oid: 'int') -> 'Obj':
        """Fetch an exported object.

        Raises:
            UnknownObject: If ``oid`` was never exported by this node.

        """
        try:
            return self.objects[oid]
        except KeyError:
            raise UnknownObject(f'unknown object {oid} on node {self.node}') from None

    def instances(self, cls: 'str') -> 'list[Obj]':
        """Exported instances (not static singletons) of source class ``cls``."""
        singletons = {id(obj) for obj in self.statics.values()}
        return [obj for obj in self.objects.values()
                if original_class(obj.cls) == cls and id(obj) not in singletons]


def export_object(registry: 'Registry', obj: 'Obj') -> 'RemoteRef':
    """Export ``obj`` through ``registry``."""
    return registry.export(obj)
