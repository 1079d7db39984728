import pytest

from kleincolor import fixtures


def u(*ks):
    return frozenset(ks)


@pytest.fixture
def prism():
    return fixtures.prism()


@pytest.fixture
def prism_col():
    return fixtures.prism_coloring()


@pytest.fixture
def theta():
    return fixtures.theta()


@pytest.fixture
def k4():
    return fixtures.k4()


ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
