# -*- coding: utf-8 -*-
"""Node Process
==================

:mod:`mookit.distrib.__main__` hosts one serving node of a TCP
deployment in its own process, as spawned by a ``process`` mode
:class:`~mookit.distrib.deployment.Deployment` or started by hand::

    mookit-node --manifest deploy.json --node n2 program.moo

A source program is transformed exactly as the entry process does,
so every node runs the same transformed program.

"""
import argparse
import sys
from typing import TYPE_CHECKING

from mookit import __version__
from mookit.distrib.deployment import Deployment, load_manifest
from mookit.interface.core import load, transform
from mookit.runtime.interpreter import DEFAULT_STEP_BUDGET
from mookit.utilities.decorators import exit_status
from mookit.utilities.logging import logger

if TYPE_CHECKING:
    from argparse import ArgumentParser

__all__ = ['main']


def get_parser() -> 'ArgumentParser':
    """CLI argument parser."""
    parser = argparse.ArgumentParser(prog='mookit-node',
                                     description='serve one node of a MiniOO deployment')
    parser.add_argument('-V', '--version', action='version', version=__version__)
    parser.add_argument('source', metavar='program',
                        help='MiniOO program, source or transformed')
    parser.add_argument('-m', '--manifest', required=True, metavar='file-name',
                        help='deployment manifest (JSON)')
    parser.add_argument('-n', '--node', required=True, metavar='node-id',
                        help='identifier of the node to serve')
    parser.add_argument('--step-budget', type=int, default=DEFAULT_STEP_BUDGET, metavar='N',
                        help='interpreter step budget (default: %(default)s)')
    return parser


@exit_status
def serve(args: 'argparse.Namespace') -> 'int':
    """Serve the node described by ``args``."""
    manifest = load_manifest(args.manifest)
    checked = load(args.source)
    if not checked.generated:
        checked = transform(args.source, protocols=(manifest.protocol,)).checked
    logger.info('node %s serving %s', args.node, args.source)
    Deployment(manifest, checked, step_budget=args.step_budget, source=args.source).serve(args.node)
    return 0


def main() -> 'int':
    """Entrypoint."""
    return serve(get_parser().parse_args())


if __name__ == '__main__':
    sys.exit(main())
