# -*- coding: utf-8 -*-
"""Transformability Report
=============================

:mod:`mookit.foundation.report` summarises a
:class:`~mookit.foundation.transformable.TransformableSet`: class
counts, the share of non-transformable classes, the partition and the
per-class justifications. Reports are dumped through :mod:`dictdumper`
(JSON by default) or rendered as console text.

"""
import collections
import importlib
import os
from typing import TYPE_CHECKING

from mookit.corekit.infoclass import Info
from mookit.utilities.logging import logger
from mookit.utilities.warnings import ReportWarning, warn

if TYPE_CHECKING:
    from typing import Any, DefaultDict, Optional, Type

    from dictdumper.dumper import Dumper

    from mookit.foundation.transformable import TransformableSet

__all__ = ['Report', 'Reporter', 'make_report', 'render_report']


class Report(Info):
    """Transformability report of a program."""

    #: Program name.
    program: 'str'
    #: Number of classes.
    total: 'int'
    #: Transformable classes, declaration order.
    transformable: 'tuple[str, ...]'
    #: Non-transformable classes, declaration order.
    non_transformable: 'tuple[str, ...]'
    #: Percentage of non-transformable classes.
    percentage: 'float'
    #: Justifications per non-transformable class as ``(rule, detail)`` pairs.
    reasons: 'dict[str, tuple[tuple[str, str], ...]]'

    if TYPE_CHECKING:
        def __init__(self, program: 'str', total: 'int', transformable: 'tuple[str, ...]', non_transformable: 'tuple[str, ...]', percentage: 'float', reasons: 'dict[str, tuple[tuple[str, str], ...]]') -> 'None': ...  # pylint: disable=unused-argument,super-init-not-called,multiple-statements,line-too-long

    def __hash__(self) -> 'int':
        return hash((self.program, self.transformable, self.non_transformable))


def make_report(tset: 'TransformableSet', program: 'str' = '<program>') -> 'Report':
    """Summarise a transformable set."""
    order = tset.order or tuple(sorted(tset.transformable | tset.non_transformable))
    return Report(
        program=program,
        total=len(order),
        transformable=tuple(name for name in order if name in tset.transformable),
        non_transformable=tuple(name for name in order if name in tset.non_transformable),
        percentage=round(tset.percentage, 2),
        reasons={name: tuple((why.rule.value, why.detail) for why in tset.reasons.get(name, ()))
                 for name in order if name in tset.non_transformable},
    )


def render_report(report: 'Report') -> 'str':
    """Render a report as console text."""
    lines = [
        f'{report.program}: {report.total} classes, {len(report.non_transformable)} '
        f'non-transformable ({report.percentage:.2f}%)',
        '',
        'transformable:',
    ]
    lines.extend(f'  {name}' for name in report.transformable)
    lines.append('non-transformable:')
    for name in report.non_transformable:
        reasons = '; '.join(f'{rule}: {detail}' for rule, detail in report.reasons[name])
        lines.append(f'  {name} ({reasons})')
    return '\n'.join(lines) + '\n'


class Reporter:
    """Report writer over the :mod:`dictdumper` formats."""

    #: Format name to dumper ``(module, class, extension)``.
    __output__ = collections.defaultdict(
        lambda: ('mookit.dumpkit', 'NotImplementedIO', None),
        {
            'json': ('dictdumper', 'JSON', '.json'),
            'tree': ('dictdumper', 'Tree', '.txt'),
            'txt': ('dictdumper', 'Tree', '.txt'),
            'plist': ('dictdumper', 'PLIST', '.plist'),
            'xml': ('dictdumper', 'PLIST', '.plist'),
        }
    )  # type: DefaultDict[str, tuple[str, str, Optional[str]]]

    @classmethod
    def register(cls, format: 'str', module: 'str', class_: 'str', ext: 'str') -> 'None':  # pylint: disable=redefined-builtin
        r"""Register a new report format.

        Args:
            format: format name
            module: module name
            class\_: class name
            ext: file extension

        """
        cls.__output__[format] = (module, class_, ext)

    @classmethod
    def dumper(cls, fmt: 'str') -> 'tuple[Type[Dumper], Optional[str]]':
        """Dumper class and file extension of format ``fmt``."""
        module, class_, ext = cls.__output__[fmt]
        if ext is None:
            warn(f'unsupported report format: {fmt}; report not written', ReportWarning)
        return getattr(importlib.import_module(module), class_), ext

    @classmethod
    def dump(cls, report: 'Report', directory: 'str', fmt: 'str' = 'json') -> 'Optional[str]':
        """Write ``report`` into ``directory``.

        Returns:
            Path of the report file, :data:`None` if the format is unsupported.

        """
        dumper, ext = cls.dumper(fmt)
        if ext is None:
            return None
        os.makedirs(directory, exist_ok=True)
        path = os.path.join(directory, f'{report.program}.report{ext}')
        output = dumper(path)  # type: Any
        output(report.to_dict(), name='Transformability')
        logger.info('report written to %s', path)
        return path
