import pytest

from signedhodge.signed_graph import SignedGraph


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run the slow rank-4/n=5 checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def example():
    """Positive {1,2}, negative {1,2} and {2,3}, half-edge at 1."""
    return SignedGraph(3, pos=[(1, 2)], neg=[(1, 2), (2, 3)], half=[1])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
