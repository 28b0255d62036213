import pytest

from repknit.arquiver import knit
from repknit.quiver import DynkinQuiver


@pytest.fixture(scope="session")
def a2():
    return DynkinQuiver("A2", ["1", "2"], [("1", "2")])


@pytest.fixture(scope="session")
def a2_xi():
    return {"1": 1, "2": 0}


@pytest.fixture(scope="session")
def a2_window(a2, a2_xi):
    return knit(a2, a2_xi, (-30, 30), margin=8)


@pytest.fixture(scope="session")
def a2_shifted_xi():
    # the height used by the mixed-support counterexample configuration
    return {"1": 2, "2": 1}


@pytest.fixture(scope="session")
def a2_shifted_window(a2, a2_shifted_xi):
    return knit(a2, a2_shifted_xi, (-30, 32), margin=8)


@pytest.fixture(scope="session")
def a3():
    return DynkinQuiver("A3", ["1", "2", "3"], [("1", "2"), ("2", "3")])


@pytest.fixture(scope="session")
def a3_window(a3):
    return knit(a3, {"1": 2, "2": 1, "3": 0}, (-36, 36), margin=10)


@pytest.fixture(scope="session")
def a4():
    return DynkinQuiver("A4", ["1", "2", "3", "4"],
                        [("1", "2"), ("2", "3"), ("1", "4")])


@pytest.fixture(scope="session")
def a4_xi():
    return {"1": 2, "2": 1, "3": 0, "4": 1}


@pytest.fixture(scope="session")
def a4_window(a4, a4_xi):
    return knit(a4, a4_xi, (-44, 40), margin=12)


@pytest.fixture(scope="session")
def d4():
    return DynkinQuiver("D4", ["1", "2", "3", "4"],
                        [("1", "2"), ("2", "3"), ("2", "4")])


@pytest.fixture(scope="session")
def d4_window(d4):
    return knit(d4, {"1": 2, "2": 1, "3": 0, "4": 0}, (-46, 46), margin=13)
