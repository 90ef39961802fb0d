# -*- coding: utf-8 -*-
# pylint: disable=wrong-import-position,unused-import,unused-wildcard-import
"""MiniOO Componentising Toolchain
=====================================

:mod:`mookit` rewrites programs of MiniOO, a small class-based
object language, so that every eligible class is reached only
through interfaces, factories and proxies. The transformed program
behaves exactly as the original in one address space, and its
objects may be placed on other nodes by a placement policy without
retransformation.

In :mod:`mookit`, all files can be described as following nine
different components.

- Interface (:mod:`mookit.interface`)

  User interface for the :mod:`mookit` library: transform, explain,
  run, run distributed and check equivalence.

- Language (:mod:`mookit.lang`)

  Parser, static checker and printer of MiniOO.

- Foundation (:mod:`mookit.foundation`)

  Transformability analysis, generation of the artifact families and
  the registry points of the library.

- Runtime (:mod:`mookit.runtime`)

  Reference interpreter, value model and native class table.

- Distribution (:mod:`mookit.distrib`)

  Wire protocol, object registries, placement policies, transports
  and nodes.

- Utilities (:mod:`mookit.utilities`)

  Auxiliary functions and tools for :mod:`mookit`.

- CoreKit (:mod:`mookit.corekit`)

  Core data structure of :mod:`mookit`.

- DumpKit (:mod:`mookit.dumpkit`)

  File output formatters for :mod:`mookit`.

- Constants (:mod:`mookit.const`)

  Constant enumerations used in :mod:`mookit`.

"""
import os
import warnings

import tbtrim

from mookit.utilities.exceptions import BaseError
from mookit.utilities.logging import DEVMODE
from mookit.utilities.warnings import DevModeWarning

#: version number
__version__ = '1.0.0'

# set up sys.excepthook
if DEVMODE:
    warnings.showwarning('development mode enabled', DevModeWarning,
                         filename=__file__, lineno=0,
                         line=f"MOOKIT_DEVMODE={os.environ['MOOKIT_DEVMODE']}")
else:
    ROOT = os.path.dirname(os.path.realpath(__file__))
    tbtrim.set_trim_rule(lambda filename: ROOT in os.path.realpath(filename),
                         exception=BaseError, strict=False)

from mookit.foundation.registry import *
from mookit.interface import *

__all__ = [
    'load', 'compile_source',                               # Loading
    'transform', 'explain', 'run', 'run_dist', 'check_equiv',  # Interface Functions
    'TransformResult', 'Equivalence',                       # Results
    'TREE', 'JSON', 'PLIST',                                # Format Macros
    'RAF',                                                  # Protocol Macros

    'register_builtin', 'register_protocol', 'register_dumper',  # Registries
]
