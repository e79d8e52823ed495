"""Shared pytest plumbing: the acceptance-criteria verdict banner.

test_acceptance.py records one verdict per criterion through the record_ac
fixture; the terminal summary prints them as [AC#] PASS/FAIL lines so the
gate can be read off a full run at a glance.
"""
import pytest

_AC_RESULTS: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def record_ac():
    def _record(num: int, title: str, passed: bool, detail: str = ""):
        _AC_RESULTS[num] = (title, passed, detail)
    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _AC_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_AC_RESULTS):
        title, passed, detail = _AC_RESULTS[num]
        line = f"[AC{num}] {'PASS' if passed else 'FAIL'} {title}"
        if detail:
            line += f" | {detail}"
        terminalreporter.write_line(line, green=passed, red=not passed)
