# -*- coding: utf-8 -*-
"""MiniOO Runtime
====================

:mod:`mookit.runtime` contains the reference interpreter of MiniOO,
its value model, the native class table and the runtime hooks through
which transformed programs place their objects.

"""
from mookit.runtime.hooks import RuntimeHooks
from mookit.runtime.interpreter import DEFAULT_STEP_BUDGET, Interpreter, run_program, trace_equal
from mookit.runtime.values import Trace

__all__ = [
    'run_program', 'trace_equal',
    'Interpreter', 'RuntimeHooks', 'Trace', 'DEFAULT_STEP_BUDGET',
]
