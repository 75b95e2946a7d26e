import pytest

from sl2pn.baseline import complete_inventory
from sl2pn.group import SL2Group
from sl2pn.modarith import PrimePower
from sl2pn.reps import inventory


@pytest.fixture(scope="session")
def pp9():
    return PrimePower(3, 2)


@pytest.fixture(scope="session")
def pp25():
    return PrimePower(5, 2)


@pytest.fixture(scope="session")
def G9(pp9):
    return SL2Group(pp9)


@pytest.fixture(scope="session")
def nonquotient9(pp9):
    return inventory(pp9)


@pytest.fixture(scope="session")
def full9(pp9):
    return complete_inventory(pp9)


@pytest.fixture(scope="session")
def full25(pp25):
    return complete_inventory(pp25)
