import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


@pytest.fixture
def swap2():
    return np.array([[0.0, 1.0], [1.0, 0.0]])


@pytest.fixture
def two2():
    return np.array([[0.0, 2.0], [2.0, 0.0]])


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE

    if ACCEPTANCE:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
