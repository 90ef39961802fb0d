# -*- coding: utf-8 -*-
# pylint: disable=unused-import
"""User Interface
====================

:mod:`mookit.interface` defines several user-oriented
interfaces, variables, and etc. These interfaces are
designed to help and simplify the usage of :mod:`mookit`.

"""

from mookit.interface.core import (JSON, PLIST, RAF, TREE, Equivalence, TransformResult,
                                   check_equiv, compile_source, explain, load, run, run_dist,
                                   transform)

__all__ = [
    'load', 'compile_source',                               # loading
    'transform', 'explain', 'run', 'run_dist', 'check_equiv',  # interface functions
    'TransformResult', 'Equivalence',                       # results
    'TREE', 'JSON', 'PLIST',                                # format macros
    'RAF',                                                  # protocol macros
]
