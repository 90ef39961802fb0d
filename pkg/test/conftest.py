# -*- coding: utf-8 -*-
"""Shared fixtures of the :mod:`mookit` test suites."""
import glob
import os

import pytest

from mookit.interface import compile_source, load

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CORPUS = os.path.join(ROOT, 'sample', 'corpus')
MANIFESTS = os.path.join(ROOT, 'sample', 'manifest')

#: Bundled programs, sorted by file name.
PROGRAMS = sorted(glob.glob(os.path.join(CORPUS, '*.moo')))


def corpus(name: 'str') -> 'str':
    """Path of a bundled program."""
    return os.path.join(CORPUS, f'{name}.moo')


def manifest(name: 'str') -> 'str':
    """Path of a bundled manifest."""
    return os.path.join(MANIFESTS, f'{name}.json')


@pytest.fixture
def running_example():
    return load(corpus('running_example'))


@pytest.fixture
def check():
    """Check a source snippet."""
    return compile_source
