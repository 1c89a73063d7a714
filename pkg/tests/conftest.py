import sys
from pathlib import Path

import pytest
from hypothesis import settings

from ideal_persistence.corpus import load_ideal
from ideal_persistence.graphs import SimpleGraph, edge_ideal
from ideal_persistence.monomial import MonomialIdeal

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

RP2_FACES = ["123", "124", "135", "146", "156", "236", "245", "256", "345", "346"]


def squarefree(n, words):
    return MonomialIdeal(n, [[1 if str(i + 1) in w else 0 for i in range(n)] for w in words])


@pytest.fixture(scope="session")
def rp2():
    return squarefree(6, RP2_FACES)


@pytest.fixture(scope="session")
def c5():
    return edge_ideal(SimpleGraph.cycle(5))


@pytest.fixture(scope="session")
def c6():
    return edge_ideal(SimpleGraph.cycle(6))


@pytest.fixture(scope="session")
def c7():
    return edge_ideal(SimpleGraph.cycle(7))


@pytest.fixture(scope="session")
def square_bridge_triangle_graph():
    return SimpleGraph(7, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (4, 5), (5, 6), (4, 6)])


@pytest.fixture(scope="session")
def square_bridge_triangle():
    return load_ideal("square_bridge_triangle").ideal


# one summary line per acceptance criterion

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): an acceptance criterion")
    config.addinivalue_line("markers", "slow: long-running test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        if hasattr(rep, "wasxfail"):
            status = "FAIL (recorded as unattainable: " + rep.wasxfail.strip() + ")"
        elif rep.passed:
            status = "PASS"
        elif rep.skipped:
            status = "SKIP"
        else:
            status = "FAIL"
        _acceptance[number] = f"criterion {number} [{title}]: {status} ({rep.duration:.1f}s)"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_acceptance):
        terminalreporter.write_line(_acceptance[number])
