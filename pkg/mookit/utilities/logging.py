# -*- coding: utf-8 -*-
"""Logging System
====================

:mod:`mookit.utilities.logging` contains naïve integration
of the Python logging system, i.e. a :class:`logging.Logger`
instance as :data:`~mookit.utilities.logging.logger`.

Every node of a deployment logs through a child logger
``mookit.node.<id>`` (see :func:`node_logger`), so that lines
of interleaved nodes, threads or processes can be told apart.

"""
import functools
import logging
import os
import sys

__all__ = ['logger', 'node_logger', 'set_verbose']

###############################################################################
# Dev Mode
###############################################################################

# boolean mappings
BOOLEAN_STATES = {'1': True, '0': False,
                  'yes': True, 'no': False,
                  'true': True, 'false': False,
                  'on': True, 'off': False}

#: Development mode flag.
DEVMODE = BOOLEAN_STATES.get(os.environ.get('MOOKIT_DEVMODE', 'false').casefold(), False)

###############################################################################
# Logger Setup
###############################################################################

#: logging.Logger: :class:`~logging.Logger` instance named after ``mookit``.
logger = logging.getLogger('mookit')

# process id matters once nodes run as separate processes
formatter = logging.Formatter(fmt='[%(levelname)s] %(asctime)s %(name)s[%(process)d] - %(message)s',
                              datefmt='%m/%d/%Y %I:%M:%S %p')
handler = logging.StreamHandler(sys.stderr)
handler.setFormatter(formatter)
logger.addHandler(handler)
logger.setLevel(logging.DEBUG if DEVMODE else logging.INFO)


@functools.lru_cache(maxsize=None)
def node_logger(node: 'str') -> 'logging.Logger':
    """Logger of deployment node ``node``.

    Records propagate to :data:`logger`; the level follows it
    unless set on the child explicitly.

    Args:
        node: node identifier

    """
    return logger.getChild(f'node.{node}')


def set_verbose(flag: 'bool') -> 'None':
    """Switch the package logger between ``DEBUG`` and ``INFO``.

    Args:
        flag: if lower the level to ``DEBUG``

    """
    logger.setLevel(logging.DEBUG if flag or DEVMODE else logging.INFO)
