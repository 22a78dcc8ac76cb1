import doctest

import pytest

import klrpoly.bruhat
import klrpoly.paths
import klrpoly.perm
import klrpoly.poly


@pytest.mark.parametrize(
    "module",
    [klrpoly.perm, klrpoly.poly, klrpoly.bruhat, klrpoly.paths],
    ids=lambda m: m.__name__,
)
def test_module_doctests(module):
    result = doctest.testmod(module)
    assert result.attempted > 0
    assert result.failed == 0
