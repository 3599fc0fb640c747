import pytest

CRITERIA = {}


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion."""
    def record(number, ok, summary):
        prev = CRITERIA.get(number)
        CRITERIA[number] = (ok and (prev is None or prev[0]), summary)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {summary}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        ok, summary = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {summary}")
