import pytest

from toric_horo import corpus
from toric_horo.fan import fan_from_polytope

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def fixtures():
    return corpus.corpus()


@pytest.fixture(scope="session")
def polytopes(fixtures):
    return {k: v for k, v in fixtures.items() if k != "fulton"}


@pytest.fixture(scope="session")
def square():
    return corpus.polytope("square")


@pytest.fixture(scope="session")
def asymquad():
    return corpus.polytope("asymquad")


@pytest.fixture(scope="session")
def cube():
    return corpus.polytope("cube3")


@pytest.fixture(scope="session")
def square_fan(square):
    return fan_from_polytope(square)


@pytest.fixture(scope="session")
def fulton():
    return corpus.fulton_fan()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
