import numpy as np
import pytest

from arbc.codes import bch_build, hamming74

_ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240501)


@pytest.fixture(scope="session")
def ham74():
    return hamming74()


@pytest.fixture(scope="session")
def bch15_7():
    return bch_build(4, 2)


@pytest.fixture(scope="session")
def bch15_11():
    return bch_build(4, 1)


@pytest.fixture(scope="session")
def bch63_24():
    return bch_build(6, 7)


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
