import sys

import pytest

from nucleus.counting import build_table


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the long enumeration sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def big_table():
    """One exact table large enough for every sweep in the suite."""
    return build_table(2206)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None) if mod else None
    if not results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for key in sorted(results):
        desc, status = results[key]
        terminalreporter.write_line(f"criterion {key} [{status}] {desc}")
