# -*- coding: utf-8 -*-
# pylint: disable=unused-wildcard-import
"""Utility Functions & Classes
=================================

:mod:`mookit.utilities` contains several useful functions
and classes which are fundations of :mod:`mookit`, including
decorator functions :func:`~mookit.utilities.decorators.transport_errors`
and :func:`~mookit.utilities.decorators.exit_status`, and several
user-refined exceptions and warnings.

"""
from mookit.utilities.exceptions import *
from mookit.utilities.logging import *
from mookit.utilities.warnings import *

__all__ = ['logger', 'warn', 'stacklevel']
