import sys

import pytest

from rootposets import build_root_system


@pytest.fixture(scope="session")
def C2():
    return build_root_system("C2")


@pytest.fixture(scope="session")
def G2():
    return build_root_system("G2")


@pytest.fixture(scope="session")
def F4():
    return build_root_system("F4")



def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
