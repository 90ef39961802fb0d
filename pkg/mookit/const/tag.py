# -*- coding: utf-8 -*-
# pylint: disable=line-too-long,consider-using-f-string
"""Value Tags
================

This module contains the constant enumeration for **Value Tags**
of marshalled values on the wire.

"""

from aenum import Enum

__all__ = ['Tag']


class Tag(Enum):
    """[Tag] Tag of a marshalled value."""

    #: 32-bit signed integer
    INT = 'int'

    #: 64-bit signed integer
    LONG = 'long'

    #: Boolean
    BOOL = 'bool'

    #: UTF-8 string
    STR = 'str'

    #: Null reference
    NULL = 'null'

    #: Remote reference
    REF = 'ref'

    @classmethod
    def _missing_(cls, value: 'str') -> 'Tag':
        """Lookup function used when value is not found.

        Args:
            value: Value to get enum item.

        """
        raise ValueError('%r is not a valid %s' % (value, cls.__name__))
