import pytest

from ptdirac.reference import TABLE_PARAMS

# Filled by test_acceptance; printed once at the end of the run.
ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def table_params():
    return TABLE_PARAMS


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
