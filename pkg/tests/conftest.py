import time

import hypothesis
import pytest

from infoflow.core import DEFAULT_BASE, set_log_base

hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=1000, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile("default")

_acceptance: dict[int, dict] = {}


@pytest.fixture(autouse=True)
def _reset_log_base():
    yield
    set_log_base(DEFAULT_BASE)


def pytest_runtest_setup(item):
    item._started = time.perf_counter()


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    row = _acceptance.setdefault(number, {"title": title, "ok": True, "tests": 0})
    row["tests"] += 1
    if call.excinfo is not None:
        row["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        row = _acceptance[number]
        status = "PASS" if row["ok"] else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {row['title']} ({row['tests']} checks)")
