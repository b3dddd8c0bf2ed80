import re

import pytest

from facetray import (Graph, complete_bipartite, complete_graph, cycle_graph,
                      path_graph)

# Fixed K_5-minor-free corpus used by the certification and property suites.
CORPUS = {
    "P2": path_graph(2),
    "P4": path_graph(4),
    "P6": path_graph(6),
    "star5": Graph(6, ((1, 2), (1, 3), (1, 4), (1, 5), (1, 6))),
    "tree8": Graph(8, ((1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (5, 7), (1, 8))),
    "C3": cycle_graph(3),
    "C4": cycle_graph(4),
    "C5": cycle_graph(5),
    "C6": cycle_graph(6),
    "C7": cycle_graph(7),
    "C8": cycle_graph(8),
    "C6_chord": Graph(6, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 4))),
    "diamond": Graph(4, ((1, 2), (1, 3), (2, 3), (1, 4), (2, 4))),
    "grid2x3": Graph(6, ((1, 2), (2, 3), (4, 5), (5, 6), (1, 4), (2, 5), (3, 6))),
    "K33": complete_bipartite(3, 3),
    "K4": complete_graph(4),
}


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


_CRITERION_RESULTS = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    match = re.search(r"test_acceptance\.py::test_criterion_(\d+)", item.nodeid)
    if match and report.when == "call":
        _CRITERION_RESULTS[int(match.group(1))] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERION_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERION_RESULTS):
        outcome = _CRITERION_RESULTS[num]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status}")
