# -*- coding: utf-8 -*-
"""Program Dumper
====================

:mod:`mookit.dumpkit.program` is the dumper for :mod:`mookit` implementation,
specifically for MiniOO source files, which is alike those described in
:mod:`dictdumper`. Every content block is a syntax tree printed in
canonical form by :func:`mookit.lang.printer.pretty_print`.

"""
from typing import TYPE_CHECKING

import dictdumper

from mookit.lang.printer import pretty_print

if TYPE_CHECKING:
    from typing import Any, Optional, TextIO

    from typing_extensions import Literal

    from mookit.lang.ast import Program

__all__ = ['ProgramIO']


class ProgramIO(dictdumper.Dumper):
    """MiniOO source dumper."""

    ##########################################################################
    # Properties.
    ##########################################################################

    @property
    def kind(self) -> 'Literal["moo"]':
        """File format of current dumper."""
        return 'moo'

    ##########################################################################
    # Data models.
    ##########################################################################

    def __call__(self, value: 'Program', name: 'Optional[str]' = None) -> 'ProgramIO':
        """Dump a program.

        Args:
            value: program to be printed
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

    def _append_value(self, value: 'Program', file: 'TextIO', name: 'str') -> 'None':
        """Write a program.

        Args:
            value: program to be printed
            file: output file
            name: name of current content block, written as a leading comment

        """
        if name:
            file.write(f'// {name}\n')
        file.write(pretty_print(value))
