import json
from collections import defaultdict
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

_criteria = {}
_outcomes = defaultdict(list)


def load_fixture(name):
    return json.loads((FIXTURES / name).read_text(encoding="utf-8"))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    _criteria[number] = title
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        state = "skipped" if report.skipped else report.outcome
        reason = ""
        if report.skipped and isinstance(report.longrepr, tuple):
            reason = report.longrepr[2]
        _outcomes[number].append((state, reason))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        states = [s for s, _ in _outcomes[number]]
        if "failed" in states:
            verdict = "FAIL"
        elif states and all(s == "skipped" for s in states):
            verdict = "SKIP"
        elif states:
            verdict = "PASS"
        else:
            verdict = "NOT RUN"
        reasons = {r for s, r in _outcomes[number] if s == "skipped" and r}
        line = f"criterion {number}: {verdict:<4}  {_criteria[number]}"
        if verdict == "SKIP" and reasons:
            line += f"  ({'; '.join(sorted(reasons))})"
        terminalreporter.write_line(line)
