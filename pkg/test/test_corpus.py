# -*- coding: utf-8 -*-
"""Equivalence over the bundled programs."""
import os

import pytest

from mookit.interface import check_equiv, transform
from mookit.utilities.exceptions import EquivalenceMismatch

from conftest import PROGRAMS, corpus, manifest


@pytest.mark.parametrize('path', PROGRAMS, ids=os.path.basename)
def test_transformed_equivalent(path):
    result = check_equiv(path)
    assert result.equal, result.diff
    assert result.diff == ''
    assert result.distributed is None
    assert result.verify() is result


@pytest.mark.parametrize('path', PROGRAMS, ids=os.path.basename)
def test_two_nodes_equivalent(path):
    result = check_equiv(path, manifest=manifest('two_nodes'))
    assert result.equal, result.diff
    assert result.distributed == result.original


def test_mismatch_raises(tmp_path):
    other = transform(corpus('running_example'), tmp_path).program_file
    result = check_equiv(corpus('sharing'), other)
    assert not result.equal
    assert result.diff.startswith('--- original\n+++ transformed\n')
    with pytest.raises(EquivalenceMismatch) as info:
        result.verify()
    assert info.value.exit_code == 4
