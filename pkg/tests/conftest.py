import pytest

from toricwedge import CharacteristicMatrix, SimplicialComplex, simplex_boundary

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def two_points():
    return SimplicialComplex([1, 2], [[1], [2]])


@pytest.fixture
def four_cycle():
    return SimplicialComplex([1, 2, 3, 4], [[1, 2], [2, 3], [3, 4], [4, 1]])


@pytest.fixture
def triangle():
    return simplex_boundary(3)


@pytest.fixture
def cp2_lambda():
    return CharacteristicMatrix.from_rows([[1, 0, -1], [0, 1, -1]])
