# -*- coding: utf-8 -*-
# pylint: disable=line-too-long,consider-using-f-string
"""Message Kinds
===================

This module contains the constant enumeration for **Message Kinds**
of the ``RAF`` wire protocol.

"""

from aenum import Enum

__all__ = ['Kind']


class Kind(Enum):
    """[Kind] Kind of an invocation message."""

    #: Member invocation on an exported object
    INVOKE = 'invoke'

    #: Successful reply
    REPLY = 'reply'

    #: Error reply
    ERR = 'err'

    #: Remote instance creation
    MAKE = 'make'

    #: Static implementation discovery
    DISCOVER = 'discover'

    @classmethod
    def _missing_(cls, value: 'str') -> 'Kind':
        """Lookup function used when value is not found.

        Args:
            value: Value to get enum item.

        """
        raise ValueError('%r is not a valid %s' % (value, cls.__name__))
