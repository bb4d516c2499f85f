import pytest

from quiverpoly.quivercore import RankArray, hom_ranks

INTRO_ROWS = [[1], [1, 3], [1, 2, 3], [0, 1, 1, 1]]
EXRANK_ROWS = [[2], [2, 3], [1, 2, 4], [0, 1, 2, 3]]

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def intro():
    return RankArray.from_rows(INTRO_ROWS)


@pytest.fixture(scope="session")
def exrank():
    return RankArray.from_rows(EXRANK_ROWS)


@pytest.fixture(scope="session")
def maximal():
    return hom_ranks((2, 3, 2))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
