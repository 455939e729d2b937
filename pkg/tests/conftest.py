import pytest

from rigidkit.colored import Z2, ColoredGraph, zk
from rigidkit.pebble import PebbleGame


@pytest.fixture(autouse=True)
def audit_pebble_games():
    # every pebble operation in every test re-checks the game invariants
    PebbleGame.AUDIT = True
    yield
    PebbleGame.AUDIT = False


@pytest.fixture
def no_audit():
    """For scale checks, where per-operation audits would dominate."""
    PebbleGame.AUDIT = False
    yield


def z2graph(n, edges):
    return ColoredGraph(Z2, n, tuple((t, h, tuple(c)) for t, h, c in edges))


def zkgraph(k, n, edges):
    return ColoredGraph(zk(k), n, tuple(edges))


K4_PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def zero_k4():
    return z2graph(4, [(a, b, (0, 0)) for a, b in K4_PAIRS])


def corpus(name):
    from rigidkit.cli import corpus_graphs
    return dict(corpus_graphs())[name]


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
