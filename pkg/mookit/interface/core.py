# -*- coding: utf-8 -*-
"""core user interface

:mod:`mookit.interface.core` defines core user-oriented
interfaces, variables, and etc., which wraps around the
foundation classes from :mod:`mookit.foundation`, the
interpreter from :mod:`mookit.runtime` and the deployments
from :mod:`mookit.distrib`.

"""
import difflib
import os
from typing import TYPE_CHECKING

from mookit.corekit.infoclass import Info
from mookit.distrib.deployment import Deployment, Manifest, load_manifest
from mookit.dumpkit import ProgramIO, TraceIO
from mookit.foundation.report import Reporter, make_report
from mookit.foundation.transform import Transformer
from mookit.lang.checker import check_program
from mookit.lang.parser import parse_program
from mookit.runtime.interpreter import DEFAULT_STEP_BUDGET, Interpreter, trace_equal
from mookit.utilities.exceptions import EquivalenceMismatch, TransformError
from mookit.utilities.logging import logger

if TYPE_CHECKING:
    from typing import Any, Iterable, Mapping, Optional, Union

    from typing_extensions import Literal

    from mookit.foundation.report import Report
    from mookit.foundation.transformable import TransformableSet
    from mookit.lang.ast import Program
    from mookit.lang.checker import CheckedProgram
    from mookit.runtime.values import Trace

    Formats = Literal['json', 'tree', 'plist']
    Path = Union[str, os.PathLike]
    ManifestLike = Union[Path, Mapping[str, Any], Manifest]

__all__ = [
    'load', 'compile_source',                               # loading
    'transform', 'explain', 'run', 'run_dist', 'check_equiv',  # interface functions
    'TransformResult', 'Equivalence',                       # results
    'TREE', 'JSON', 'PLIST',                                # format macros
    'RAF',                                                  # protocol macros
]

# report formats
TREE = 'tree'
JSON = 'json'
PLIST = 'plist'

# proxy protocols
RAF = 'RAF'


class TransformResult(Info):
    """Result of :func:`transform`."""

    #: Program name.
    name: 'str'
    #: Checked source program.
    original: 'CheckedProgram'
    #: Checked transformed program.
    checked: 'CheckedProgram'
    #: Transformable set of the source program.
    tset: 'TransformableSet'
    #: Transformability report.
    report: 'Report'
    #: Transformed program file, if written.
    program_file: 'Optional[str]' = None
    #: Report file, if written.
    report_file: 'Optional[str]' = None

    if TYPE_CHECKING:
        def __init__(self, name: 'str', original: 'CheckedProgram', checked: 'CheckedProgram', tset: 'TransformableSet', report: 'Report', program_file: 'Optional[str]' = None, report_file: 'Optional[str]' = None) -> 'None': ...  # pylint: disable=unused-argument,super-init-not-called,multiple-statements,line-too-long

    @property
    def program(self) -> 'Program':
        """Transformed program as generated."""
        return self.checked.source


class Equivalence(Info):
    """Result of :func:`check_equiv`."""

    #: Trace of the source program.
    original: 'Trace'
    #: Trace of the transformed program in one address space.
    transformed: 'Trace'
    #: Trace of the distributed run, if a manifest was given.
    distributed: 'Optional[Trace]' = None
    #: Unified diff of the first mismatching pair of traces.
    diff: 'str' = ''

    if TYPE_CHECKING:
        def __init__(self, original: 'Trace', transformed: 'Trace', distributed: 'Optional[Trace]' = None, diff: 'str' = '') -> 'None': ...  # pylint: disable=unused-argument,super-init-not-called,multiple-statements,line-too-long

    @property
    def equal(self) -> 'bool':
        """Whether all traces are equal."""
        return not self.diff

    def verify(self) -> 'Equivalence':
        """Raise if any pair of traces differs.

        Raises:
            EquivalenceMismatch: With the diff as message.

        """
        if self.diff:
            raise EquivalenceMismatch(self.diff.rstrip('\n'))
        return self


def _name(fin: 'Path') -> 'str':
    return os.path.splitext(os.path.basename(os.fspath(fin)))[0]


def compile_source(source: 'Union[str, bytes]', *, generated: 'Optional[bool]' = None) -> 'CheckedProgram':
    """Parse and check MiniOO source text.

    Args:
        source: program source
        generated: check in generated mode; detected by default

    """
    return check_program(parse_program(source), generated=generated)


def load(fin: 'Path', *, generated: 'Optional[bool]' = None) -> 'CheckedProgram':
    """Parse and check a MiniOO source file.

    Args:
        fin: file name to be read
        generated: check in generated mode; detected by default

    Raises:
        FileNotFoundError: If ``fin`` does not exist.
        ParseError: On syntax errors.
        CheckError: On static errors.

    """
    with open(fin, 'rb') as file:
        data = file.read()
    logger.debug('loaded %s (%d bytes)', os.fspath(fin), len(data))
    return compile_source(data, generated=generated)


def _transform(checked: 'CheckedProgram', name: 'str', protocols: 'Iterable[str]') -> 'TransformResult':
    if checked.generated:
        raise TransformError(f'{name} is already transformed')
    transformer = Transformer(checked, protocols)
    program = transformer.run()
    return TransformResult(name=name, original=checked, checked=check_program(program, generated=True),
                           tset=transformer.tset, report=make_report(transformer.tset, name))


def transform(fin: 'Path', out: 'Optional[Path]' = None, *,                       # basic settings
              protocols: 'Iterable[str]' = (RAF,), format: 'Formats' = JSON) -> 'TransformResult':  # output settings # pylint: disable=redefined-builtin
    """Transform a MiniOO program into its componentised form.

    Arguments:
        fin: file name to be read
        out: output directory; nothing is written if omitted
        protocols: proxy protocols to generate
        format: report format

    Returns:
        The transformed program, its transformable set and report.

    """
    name = _name(fin)
    result = _transform(load(fin), name, protocols)
    if out is None:
        return result

    os.makedirs(out, exist_ok=True)
    program_file = os.path.join(os.fspath(out), f'{name}.moo')
    ProgramIO(program_file)(result.program)
    report_file = Reporter.dump(result.report, os.fspath(out), format)
    logger.info('transformed %s into %s', os.fspath(fin), program_file)
    return result._replace(program_file=program_file, report_file=report_file)  # type: ignore[return-value]


def explain(fin: 'Path') -> 'Report':
    """Report which classes of a program are transformable and why the others are not.

    Arguments:
        fin: file name to be read

    """
    return _transform(load(fin), _name(fin), ()).report


def run(fin: 'Union[Path, CheckedProgram]', fout: 'Optional[Path]' = None, *,
        step_budget: 'int' = DEFAULT_STEP_BUDGET, trace: 'Optional[Trace]' = None) -> 'Trace':
    """Run a program (source or transformed) in one address space.

    Arguments:
        fin: file name to be read, or a checked program
        fout: trace file to be written
        step_budget: maximum number of interpreter steps
        trace: trace to append printed lines to; keeps the lines
            printed before a runtime error

    Raises:
        MooRuntimeError: On runtime errors.

    """
    checked = fin if isinstance(fin, Info) else load(fin)  # type: CheckedProgram
    trace = Interpreter(checked, step_budget=step_budget, trace=trace).run()
    if fout is not None:
        TraceIO(os.fspath(fout))(trace)
    return trace


def _manifest(manifest: 'ManifestLike') -> 'Manifest':
    if isinstance(manifest, Manifest):
        return manifest
    return load_manifest(manifest)


def run_dist(fin: 'Path', manifest: 'ManifestLike', fout: 'Optional[Path]' = None, *,
             step_budget: 'int' = DEFAULT_STEP_BUDGET, trace: 'Optional[Trace]' = None) -> 'Trace':
    """Run a program across the nodes of a deployment.

    A source program is transformed first, with proxies of the
    manifest's protocol.

    Arguments:
        fin: file name to be read
        manifest: deployment manifest (file name or decoded)
        fout: trace file to be written
        step_budget: maximum number of interpreter steps per node
        trace: trace sink of the entry node

    Raises:
        TransportError: On transport failure; the trace written to
            ``fout`` ends with the failure marker.
        MooRuntimeError: On runtime errors, local or remote.

    """
    manifest = _manifest(manifest)
    checked = load(fin)
    if not checked.generated:
        checked = _transform(checked, _name(fin), (manifest.protocol,)).checked
    deployment = Deployment(manifest, checked, step_budget=step_budget, source=os.fspath(fin), trace=trace)
    try:
        with deployment:
            trace = deployment.run()
    finally:
        if fout is not None and deployment.nodes:
            TraceIO(os.fspath(fout))(deployment.entry.trace)
    return trace


def _diff(one: 'Trace', other: 'Trace', left: 'str', right: 'str') -> 'str':
    if trace_equal(one, other):
        return ''
    lines = difflib.unified_diff(list(one), list(other), fromfile=left, tofile=right, lineterm='')
    return '\n'.join(lines) + '\n'


def check_equiv(fin: 'Path', transformed: 'Optional[Path]' = None, manifest: 'Optional[ManifestLike]' = None, *,
                step_budget: 'int' = DEFAULT_STEP_BUDGET) -> 'Equivalence':
    """Check that transformation and distribution preserve a program's trace.

    The source program, its transformed form in one address space and,
    given a manifest, its distributed form are run; the traces must be
    line-wise identical.

    Arguments:
        fin: source file name
        transformed: transformed file name; transformed on the fly if omitted
        manifest: deployment manifest for the distributed run
        step_budget: maximum number of interpreter steps per run

    """
    original = load(fin, generated=False)
    manifest = None if manifest is None else _manifest(manifest)
    protocol = RAF if manifest is None else manifest.protocol
    if transformed is None:
        checked = _transform(original, _name(fin), (protocol,)).checked
    else:
        checked = load(transformed, generated=True)

    expected = run(original, step_budget=step_budget)
    local = run(checked, step_budget=step_budget)
    diff = _diff(expected, local, 'original', 'transformed')

    distributed = None
    if manifest is not None:
        source = os.fspath(fin if transformed is None else transformed)
        with Deployment(manifest, checked, step_budget=step_budget, source=source) as deployment:
            distributed = deployment.run()
        diff = diff or _diff(expected, distributed, 'original', 'distributed')

    if diff:
        logger.warning('traces of %s differ', os.fspath(fin))
    return Equivalence(original=expected, transformed=local, distributed=distributed, diff=diff)
