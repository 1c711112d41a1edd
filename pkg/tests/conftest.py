import pytest

from leonardpairs.exactfield import PrimeField, Rationals
from leonardpairs.params import ParameterArray

Q = Rationals
GF7 = PrimeField(7)
GF13 = PrimeField(13)
GF17 = PrimeField(17)


def e1():
    return ParameterArray(Q, [-3, -1, 1, 3], [-3, -1, 1, 3], [-6, -8, -6], [6, 8, 6])


def e2():
    return ParameterArray(GF13, [7, 11, 2, 6], [10, 12, 1, 3], [3, 4, 3], [1, 10, 1])


@pytest.fixture
def E1():
    return e1()


@pytest.fixture
def E2():
    return e2()
