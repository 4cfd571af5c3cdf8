from __future__ import annotations

import pytest

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            n = mark.args[0]
            _CRITERIA.setdefault(n, {"ids": set(), "failed": False, "ran": 0, "duration": 0.0})
            _CRITERIA[n]["ids"].add(item.nodeid)


def pytest_runtest_logreport(report):
    for n, rec in _CRITERIA.items():
        if report.nodeid in rec["ids"]:
            if report.when == "call":
                rec["ran"] += 1
                rec["duration"] += report.duration
            if report.failed:
                rec["failed"] = True


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        rec = _CRITERIA[n]
        if not rec["ran"] and not rec["failed"]:
            status = "NOT RUN"
        else:
            status = "FAIL" if rec["failed"] else "PASS"
        terminalreporter.write_line(f"criterion {n:>2}: {status}  ({rec['duration']:.2f} s)")


@pytest.fixture
def rng():
    import random
    return random.Random(20240601)
