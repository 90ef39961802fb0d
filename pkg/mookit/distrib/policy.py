# -*- coding: utf-8 -*-
"""Placement Policy
======================

:mod:`mookit.distrib.policy` contains :class:`PlacementPolicy`,
which decides where new instances of a transformed class are created
and which node is the home of its static state.

The policy is totally defined: classes without an entry are created
locally (on the creating node), and classes without a statics home
are homed on the default home node (the entry node of a deployment).
Placement may change during a run; the change affects subsequent
creations only.

"""
import threading
from typing import TYPE_CHECKING

from mookit.utilities.logging import logger

if TYPE_CHECKING:
    from typing import Mapping, Optional

__all__ = ['PlacementPolicy', 'LOCAL']

#: Placement of classes created on the creating node.
LOCAL = 'local'


class PlacementPolicy:
    """Per-class placement decisions.

    Args:
        home: Default statics home node.
        placement: Class name to node identifier (or ``local``).
        statics: Class name to statics home node.

    """

    def __init__(self, home: 'str', placement: 'Optional[Mapping[str, str]]' = None,
                 statics: 'Optional[Mapping[str, str]]' = None) -> 'None':
        #: Default statics home.
        self.home = home
        #: Instance placement per class.
        self.placement = dict(placement or {})
        #: Statics home per class.
        self.statics = dict(statics or {})
        #: Number of updates applied.
        self.version = 0
        self._lock = threading.Lock()

    def location(self, cls: 'str') -> 'str':
        """Creation site of class ``cls``: a node identifier or :data:`LOCAL`."""
        with self._lock:
            return self.placement.get(cls, LOCAL)

    def statics_home(self, cls: 'str') -> 'str':
        """Home node of the static state of class ``cls``."""
        with self._lock:
            return self.statics.get(cls, self.home)

    def update(self, placement: 'Mapping[str, str]') -> 'int':
        """Change instance placement of some classes.

        Returns:
            The new policy version.

        """
        with self._lock:
            self.placement.update(placement)
            self.version += 1
            version = self.version
        logger.info('placement policy v%d: %s', version,
                    ', '.join(f'{cls}->{node}' for cls, node in placement.items()) or 'unchanged')
        return version

    def replace(self, placement: 'Mapping[str, str]') -> 'int':
        """Replace the whole instance placement table."""
        with self._lock:
            self.placement = {}
        return self.update(placement)
