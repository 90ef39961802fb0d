# -*- coding: utf-8 -*-
"""Dump Utilities
====================

:mod:`mookit.dumpkit` is the collection of dumpers for
:mod:`mookit` implementation, which is alike those described
in :mod:`dictdumper`.

"""
from mookit.dumpkit.null import NotImplementedIO
from mookit.dumpkit.program import ProgramIO
from mookit.dumpkit.trace import TraceIO

__all__ = ['ProgramIO', 'TraceIO', 'NotImplementedIO']
