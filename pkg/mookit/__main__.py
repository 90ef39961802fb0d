# -*- coding: utf-8 -*-
"""Command Line Tool
=======================

.. important::

   The decorations of this module require the ``emoji`` package
   (``pip install pymookit[cli]``).

:mod:`mookit.__main__` is the command line driver of :mod:`mookit`::

    mookit-cli transform   program.moo --out build/ [--protocols RAF]
    mookit-cli explain     program.moo
    mookit-cli run         program.moo [--out trace.txt]
    mookit-cli run-dist    program.moo --manifest deploy.json
    mookit-cli check-equiv program.moo [transformed.moo] [--manifest deploy.json]

Traces go to standard output, diagnostics to standard error. The
exit code is 0 on success, 1 on front end errors, 2 on runtime
errors, 3 on transport failures and 4 when traces differ.

"""
import argparse
import os
import sys
from typing import TYPE_CHECKING

from mookit import __version__
from mookit.const.exit_code import ExitCode
from mookit.foundation.report import Reporter, render_report
from mookit.interface import JSON, RAF, check_equiv, explain, run, run_dist, transform
from mookit.lang.printer import pretty_print
from mookit.runtime.interpreter import DEFAULT_STEP_BUDGET
from mookit.runtime.values import Trace
from mookit.utilities.decorators import exit_status
from mookit.utilities.exceptions import stacklevel
from mookit.utilities.logging import set_verbose
from mookit.utilities.warnings import EmojiWarning, warn

try:
    import emoji
except ImportError:
    emoji = None
    warn("dependency package 'emoji' not found",
         EmojiWarning, stacklevel=stacklevel())

if TYPE_CHECKING:
    from argparse import ArgumentParser, Namespace
    from typing import Callable

__all__ = ['main', 'get_parser']


def _say(text: 'str', icon: 'str', verbose: 'bool') -> 'None':
    """Print a decorated progress line on standard error."""
    if not verbose:
        return
    if emoji is None:
        print(f'[*] {text}', file=sys.stderr)
        return
    try:
        print(emoji.emojize(f'{icon} {text}'), file=sys.stderr)
    except UnicodeEncodeError:
        print(f'[*] {text}', file=sys.stderr)


def _echo(trace: 'Trace') -> 'None':
    for line in trace:
        print(line)
    sys.stdout.flush()


def get_parser() -> 'ArgumentParser':
    """CLI argument parser."""
    parser = argparse.ArgumentParser(prog='mookit-cli',
                                     description='MiniOO componentising toolchain')
    parser.add_argument('-V', '--version', action='version', version=__version__)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('fin', metavar='input', help='MiniOO program file')
    common.add_argument('-v', '--verbose', action='store_true', default=False,
                        help='Show more information.')
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument('--step-budget', type=int, default=DEFAULT_STEP_BUDGET, metavar='N',
                        help='Interpreter step budget (default: %(default)s).')

    commands = parser.add_subparsers(dest='command', metavar='command', required=True)

    parser_transform = commands.add_parser('transform', parents=[common],
                                           help='transform a program into interfaces, factories and proxies')
    parser_transform.add_argument('-o', '--out', metavar='directory',
                                  help=('Output directory of the transformed program and the '
                                        'transformability report; print the program if omitted.'))
    parser_transform.add_argument('-p', '--protocols', default=RAF, metavar='P[,P...]',
                                  help='Comma separated proxy protocols (default: %(default)s).')
    parser_transform.add_argument('-f', '--format', default=JSON, metavar='format',
                                  help=('Report format, any of the dictdumper formats, e.g.: '
                                        'json, plist, and tree (default: %(default)s).'))

    parser_explain = commands.add_parser('explain', parents=[common],
                                         help='list transformable and non-transformable classes with reasons')
    parser_explain.add_argument('-o', '--out', metavar='directory',
                                help='Also write the report into this directory.')
    parser_explain.add_argument('-f', '--format', default=JSON, metavar='format',
                                help='Report file format (default: %(default)s).')

    parser_run = commands.add_parser('run', parents=[common, budget],
                                     help='run a program in one address space')
    parser_run.add_argument('-o', '--out', metavar='file-name', help='Also write the trace into this file.')

    parser_dist = commands.add_parser('run-dist', parents=[common, budget],
                                      help='run a program across the nodes of a deployment')
    parser_dist.add_argument('-m', '--manifest', required=True, metavar='file-name',
                             help='Deployment manifest (JSON).')
    parser_dist.add_argument('-o', '--out', metavar='file-name', help='Also write the trace into this file.')

    parser_equiv = commands.add_parser('check-equiv', parents=[common, budget],
                                       help='check that transformation and distribution preserve the trace')
    parser_equiv.add_argument('transformed', nargs='?', metavar='transformed',
                              help='Transformed program; the input is transformed on the fly if omitted.')
    parser_equiv.add_argument('-m', '--manifest', metavar='file-name',
                              help='Deployment manifest of an additional distributed run.')
    return parser


@exit_status
def cmd_transform(args: 'Namespace') -> 'int':
    """Transform a program."""
    protocols = [name.strip() for name in args.protocols.split(',') if name.strip()]
    result = transform(args.fin, args.out, protocols=protocols, format=args.format)
    if args.out is None:
        sys.stdout.write(pretty_print(result.program))
    else:
        _say(f'Transformed program stored in {result.program_file!r}', ':package:', args.verbose)
        if result.report_file is not None:
            _say(f'Report stored in {result.report_file!r}', ':beer_mug:', args.verbose)
    return ExitCode.OK


@exit_status
def cmd_explain(args: 'Namespace') -> 'int':
    """Explain transformability."""
    report = explain(args.fin)
    sys.stdout.write(render_report(report))
    if args.out is not None:
        path = Reporter.dump(report, args.out, args.format)
        _say(f'Report stored in {path!r}', ':beer_mug:', args.verbose)
    return ExitCode.OK


@exit_status
def cmd_run(args: 'Namespace') -> 'int':
    """Run a program locally."""
    _say(f'Running {args.fin!r}', ':police_car_light:', args.verbose)
    trace = Trace()
    try:
        run(args.fin, args.out, step_budget=args.step_budget, trace=trace)
    finally:
        _echo(trace)
    return ExitCode.OK


@exit_status
def cmd_run_dist(args: 'Namespace') -> 'int':
    """Run a program distributed."""
    _say(f'Deploying {args.fin!r} per {args.manifest!r}', ':police_car_light:', args.verbose)
    trace = Trace()
    try:
        run_dist(args.fin, args.manifest, args.out, step_budget=args.step_budget, trace=trace)
    finally:
        _echo(trace)
    return ExitCode.OK


@exit_status
def cmd_check_equiv(args: 'Namespace') -> 'int':
    """Check trace equivalence."""
    result = check_equiv(args.fin, args.transformed, args.manifest, step_budget=args.step_budget)
    if not result.equal:
        sys.stdout.write(result.diff)
    result.verify()
    _say(f'{args.fin!r}: traces equal ({len(result.original)} lines)', ':check_mark_button:', args.verbose)
    return ExitCode.OK


#: Subcommand handlers.
COMMANDS = {
    'transform': cmd_transform,
    'explain': cmd_explain,
    'run': cmd_run,
    'run-dist': cmd_run_dist,
    'check-equiv': cmd_check_equiv,
}  # type: dict[str, Callable[[Namespace], int]]


def main(argv: 'list[str] | None' = None) -> 'int':
    """Entrypoint."""
    args = get_parser().parse_args(argv)
    set_verbose(args.verbose)

    for path in (args.fin, getattr(args, 'transformed', None), getattr(args, 'manifest', None)):
        if path is not None and not os.path.isfile(path):
            print(f'mookit-cli: error: no such file: {path!r}', file=sys.stderr)
            return ExitCode.FRONTEND
    return int(COMMANDS[args.command](args))


if __name__ == '__main__':
    sys.exit(main())
