# -*- coding: utf-8 -*-
# pylint: disable=unused-import
"""Core Utilities
====================

:mod:`mookit.corekit` is the collection of core utilities
for :mod:`mookit` implementation, i.e. the immutable :obj:`dict`
like record class :class:`~mookit.corekit.infoclass.Info` every
data model of the package derives from.

"""
from mookit.corekit.infoclass import Info

__all__ = ['Info']
