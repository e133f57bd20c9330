import pytest

from helpers import fig3_network, table_i_text
from tempcontrol.temporal_graph import parse_contact_list


@pytest.fixture(scope="session")
def table_i():
    return parse_contact_list(table_i_text())


@pytest.fixture(scope="session")
def fig3():
    return fig3_network()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
