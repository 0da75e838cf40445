import numpy as np
import pytest

from pivotfun.groups import cyclic, klein_four
from pivotfun.matkernel import Tolerance
from pivotfun.repg import character_list


@pytest.fixture
def tol():
    return Tolerance()


@pytest.fixture
def rng():
    return np.random.default_rng(20270)


@pytest.fixture
def z2():
    return cyclic(2)


@pytest.fixture
def z3():
    return cyclic(3)


@pytest.fixture
def klein():
    return klein_four()


@pytest.fixture
def z2_objs(z2):
    return character_list(z2)


@pytest.fixture
def z3_objs(z3):
    return character_list(z3)


@pytest.fixture
def klein_objs(klein):
    return character_list(klein)
