from fractions import Fraction

import pytest

from hwweights.rootsys import root_system


@pytest.fixture
def A1():
    return root_system("A1")


@pytest.fixture
def A2():
    return root_system("A2")


@pytest.fixture
def B2():
    return root_system("B2")


@pytest.fixture
def G2():
    return root_system("G2")


def Q(s):
    return Fraction(s)
