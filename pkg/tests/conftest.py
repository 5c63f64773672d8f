import pytest

from mtlideals.fixtures import FIXTURES, load_fixture
from mtlideals.subsets import subset_from_names

from oracle import Raw

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def algs():
    return {name: load_fixture(name) for name in FIXTURES}


@pytest.fixture(scope="session")
def raws():
    return {name: Raw(f.source) for name, f in FIXTURES.items()}


def S(alg, *names):
    return subset_from_names(alg, names)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
