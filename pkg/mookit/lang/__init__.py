# -*- coding: utf-8 -*-
# pylint: disable=unused-import
"""MiniOO Front End
======================

:mod:`mookit.lang` is the front end of the MiniOO object
language: the syntax tree (:mod:`~mookit.lang.ast`), the
:mod:`pyparsing` grammar (:mod:`~mookit.lang.parser`), the static
checker (:mod:`~mookit.lang.checker`) and the pretty printer
(:mod:`~mookit.lang.printer`).

"""
from mookit.lang.checker import CheckedProgram, check_program
from mookit.lang.parser import parse_program
from mookit.lang.printer import pretty_print
from mookit.lang.table import ClassTable

__all__ = ['parse_program', 'check_program', 'pretty_print', 'CheckedProgram', 'ClassTable']
