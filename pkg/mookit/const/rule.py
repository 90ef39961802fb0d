# -*- coding: utf-8 -*-
# pylint: disable=line-too-long,consider-using-f-string
"""Transformability Rules
============================

This module contains the constant enumeration for **Transformability Rules**,
i.e. the reasons recorded against a non-transformable class.

"""

from aenum import Enum

__all__ = ['Rule']


class Rule(Enum):
    """[Rule] Justification of a non-transformable class."""

    #: Class declares at least one native method
    NATIVE_METHOD = 'native-method'

    #: Class is a builtin (natively implemented) class
    BUILTIN = 'builtin'

    #: Class is the superclass of a non-transformable class
    SUPERCLASS_RULE = 'superclass-rule'

    #: Class is referenced by a non-transformable class
    REFERENCED_BY_RULE = 'referenced-by-rule'

    #: Class extends a non-transformable class (transformation only)
    SUBCLASS_RULE = 'subclass-rule'

    @classmethod
    def _missing_(cls, value: 'str') -> 'Rule':
        """Lookup function used when value is not found.

        Args:
            value: Value to get enum item.

        """
        raise ValueError('%r is not a valid %s' % (value, cls.__name__))
