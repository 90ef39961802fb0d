# -*- coding: utf-8 -*-
"""Trace Dumper
==================

:mod:`mookit.dumpkit.trace` is the dumper for :mod:`mookit` implementation,
specifically for program traces, which is alike those described in
:mod:`dictdumper`.

A trace file is newline-delimited UTF-8, one printed line per line,
every line (the last included) terminated by ``\\n``.

"""
from typing import TYPE_CHECKING

import dictdumper

if TYPE_CHECKING:
    from typing import Any, Iterable, Optional, TextIO

    from typing_extensions import Literal

__all__ = ['TraceIO']


class TraceIO(dictdumper.Dumper):
    """Trace file dumper."""

    ##########################################################################
    # Properties.
    ##########################################################################

    @property
    def kind(self) -> 'Literal["trace"]':
        """File format of current dumper."""
        return 'trace'

    ##########################################################################
    # Data models.
    ##########################################################################

    def __call__(self, value: 'Iterable[str]', name: 'Optional[str]' = None) -> 'TraceIO':
        """Append trace lines.

        Args:
            value: printed lines
            name: name of current content block

        Returns:
            The dumper class itself (to support chain calling).

        """
        with open(self._file, 'a', encoding='utf-8') as file:
            self._append_value(value, file, name or '')
        return self

    ##########################################################################
    # Utilities.
    ##########################################################################

    def _dump_header(self, **kwargs: 'Any') -> 'None':  # pylint: disable=unused-argument
        """Truncate the output file."""
        with open(self._file, 'w', encoding='utf-8'):
            pass

    def _append_value(self, value: 'Iterable[str]', file: 'TextIO', name: 'str') -> 'None':  # pylint: disable=unused-argument
        """Write lines.

        Args:
            value: printed lines
            file: output file
            name: name of current content block

        """
        for line in value:
            file.write(f'{line}\n')
