# -*- coding: utf-8 -*-
# pylint: disable=line-too-long,consider-using-f-string
"""Exit Codes
================

This module contains the constant enumeration for **Exit Codes**
reported by the ``mookit-cli`` command line driver.

"""

from aenum import IntEnum

__all__ = ['ExitCode']


class ExitCode(IntEnum):
    """[ExitCode] Process exit codes of the command line driver."""

    #: Success
    OK = 0

    #: Parse or check failure (front end)
    FRONTEND = 1

    #: Runtime error raised by the interpreter
    RUNTIME = 2

    #: Transport failure between nodes
    TRANSPORT = 3

    #: Traces of equivalent runs differ
    MISMATCH = 4

    @classmethod
    def _missing_(cls, value: 'int') -> 'ExitCode':
        """Lookup function used when value is not found.

        Args:
            value: Value to get enum item.

        """
        raise ValueError('%r is not a valid %s' % (value, cls.__name__))
