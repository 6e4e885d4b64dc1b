import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False, help="run extended n = 9, 10 checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    if call.when == "call":
        item.call_passed = outcome.get_result().passed


@pytest.fixture
def record(request):
    """Collect detail strings for a criterion; one summary line is emitted per test."""
    details: list[str] = []
    yield details.append
    status = "PASS" if getattr(request.node, "call_passed", False) else "FAIL"
    ACCEPTANCE_LINES.append(f"{status}  {request.node.name}  {'; '.join(details)}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
