import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from simplex_gauss.exactnum import NumberField  # noqa: E402
from simplex_gauss.gaussnd import monkemeyer_matrices  # noqa: E402


@pytest.fixture(scope="session")
def cube_field():
    # a = 2**(1/3) - 1
    return NumberField([-1, 3, 3, 1], (0, 1))


@pytest.fixture(scope="session")
def golden_field():
    # a = (sqrt5 - 1) / 2
    return NumberField([-1, 1, 1], (0, 1))


@pytest.fixture(scope="session")
def sqrt2_field():
    # a = sqrt2 - 1
    return NumberField([-1, 2, 1], (0, 1))


@pytest.fixture(scope="session")
def slow_field():
    # real root of a^3 + a^2 - 1
    return NumberField([-1, 0, 1, 1], (0, 1))


@pytest.fixture(scope="session")
def plane():
    return monkemeyer_matrices(2)


@pytest.fixture(scope="session")
def space():
    return monkemeyer_matrices(3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
