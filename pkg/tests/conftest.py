import itertools

import pytest

from klrpoly.bruhat import bruhat_leq
from klrpoly.perm import Permutation


@pytest.fixture(scope="session")
def s3():
    return [Permutation(word) for word in itertools.permutations((1, 2, 3))]


@pytest.fixture(scope="session")
def s4():
    return [Permutation(word) for word in itertools.permutations((1, 2, 3, 4))]


@pytest.fixture(scope="session")
def comparable_s3(s3):
    return [(u, v) for u in s3 for v in s3 if bruhat_leq(u, v)]


@pytest.fixture(scope="session")
def comparable_s4(s4):
    return [(u, v) for u in s4 for v in s4 if bruhat_leq(u, v)]
