"""Collects acceptance-criterion outcomes and prints one verdict line per criterion."""

from __future__ import annotations

import pytest

_OUTCOMES: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _OUTCOMES.setdefault(number, {"title": title, "failed": [], "passed": 0, "xfailed": []})
    if rep.when == "call" or rep.failed or rep.skipped:
        if hasattr(rep, "wasxfail"):
            entry["xfailed"].append(item.name)
        elif rep.failed:
            entry["failed"].append(item.name)
        elif rep.when == "call" and rep.passed:
            entry["passed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        e = _OUTCOMES[number]
        verdict = "FAIL" if e["failed"] or not e["passed"] else "PASS"
        line = f"{verdict} criterion {number}: {e['title']} ({e['passed']} checks passed"
        if e["failed"]:
            line += f"; failed: {', '.join(e['failed'])}"
        if e["xfailed"]:
            line += f"; documented discrepancy: {', '.join(e['xfailed'])}"
        terminalreporter.write_line(line + ")")
