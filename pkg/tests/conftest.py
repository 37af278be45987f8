from pathlib import Path

import pytest

CORPUS = Path(__file__).parent / "corpus"

CRITERIA = {
    1: "running example: three procedures return {a,b} {c} {b}",
    2: "running example: four split programs",
    3: "x-reduct example at {b,c}",
    4: "star translation and its refinement",
    5: "property catalog of (non-)equivalences",
    6: "randomized LPOD theorems and head forms",
    7: "DLPOD divergence examples",
    8: "randomized DLPOD inclusion",
    9: "preferred answer set under c, i and p",
    10: "byte-identical JSON across runs",
}

_outcomes: dict = {}


@pytest.fixture
def corpus():
    return CORPUS


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    n = marker.args[0]
    failed = report.failed or (report.when == "call" and report.skipped)
    if failed:
        _outcomes[n] = False
    elif report.when == "call":
        _outcomes.setdefault(n, True)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        status = {True: "PASS", False: "FAIL", None: "NOT RUN"}[_outcomes.get(n)]
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {title}")
