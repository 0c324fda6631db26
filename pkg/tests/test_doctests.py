"""Run the docstring examples shipped inside the package modules."""

import doctest

import pytest

from cyclepat import census, paths, perms, series, verify


@pytest.mark.parametrize("module", [perms, paths, series, census, verify])
def test_module_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
