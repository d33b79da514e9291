import pytest

from blobdecomp import validate_params

FAMILIES = [(5, 2), (7, 3), (7, 5)]


@pytest.fixture
def p52():
    return validate_params(5, 2, 6)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
