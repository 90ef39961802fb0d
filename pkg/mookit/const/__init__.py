# -*- coding: utf-8 -*-
# pylint: disable=unused-import
"""Constant Enumerations
===========================

This module contains all constant enumerations of :mod:`mookit`.

"""
from mookit.const.exit_code import ExitCode
from mookit.const.kind import Kind
from mookit.const.rule import Rule
from mookit.const.tag import Tag

__all__ = ['ExitCode', 'Kind', 'Rule', 'Tag']
