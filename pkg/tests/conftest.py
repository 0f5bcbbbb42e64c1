import pytest

from acceptance_log import RESULTS


def pytest_addoption(parser):
    parser.addoption(
        "--run-large",
        action="store_true",
        default=False,
        help="run the multi-hour n=18/19 computations",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-large"):
        return
    skip = pytest.mark.skip(reason="needs --run-large (hours of runtime)")
    for item in items:
        if "large" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, detail in RESULTS:
        line = f"{status:<4} {label}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
