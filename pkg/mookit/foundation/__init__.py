# -*- coding: utf-8 -*-
"""Transformation Foundation
===============================

:mod:`mookit.foundation` is collection of the transformation engine:
the transformability analysis (:mod:`~mookit.foundation.transformable`),
the generation of interfaces, factories and proxies
(:mod:`~mookit.foundation.transform`), the naming scheme of the
generated artifacts (:mod:`~mookit.foundation.naming`), the
transformability report (:mod:`~mookit.foundation.report`) and the
registry points (:mod:`~mookit.foundation.registry`).

"""
from mookit.foundation.report import Reporter, make_report, render_report
from mookit.foundation.transform import ClassFamily, Transformer, transform_program
from mookit.foundation.transformable import TransformableSet, compute_transformable_set

__all__ = [
    'compute_transformable_set', 'TransformableSet',
    'transform_program', 'Transformer', 'ClassFamily',
    'make_report', 'render_report', 'Reporter',
]
