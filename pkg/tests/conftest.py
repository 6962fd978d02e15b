from fractions import Fraction

import pytest

from egfasym.params import validate

FAMILIES = {
    "A143405": (1, 2, 1, -1, 0),
    "A355291": (1, 2, 1, 1, -2),
    "A002872": (Fraction(1, 2), 2, 1, 1, Fraction(-3, 2)),
    "A002874": (Fraction(1, 3), 3, 1, 1, Fraction(-4, 3)),
}


@pytest.fixture(params=sorted(FAMILIES))
def family(request):
    return request.param, validate(*FAMILIES[request.param])


@pytest.fixture
def a143405():
    return validate(*FAMILIES["A143405"])


_acceptance_results = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        _acceptance_results.append((report.nodeid.split("::", 1)[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_results:
        terminalreporter.write_line(f"[{'PASS' if outcome == 'passed' else 'FAIL'}] {name}")
