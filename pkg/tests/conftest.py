import pytest

VERDICTS: list[str] = []


@pytest.fixture
def verdict():
    """Print and record one pass/fail line, then assert it."""

    def _report(ac: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {ac}" + (f": {detail}" if detail else "")
        print(line)
        VERDICTS.append(line)
        assert ok, line

    return _report


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance verdicts")
        for line in VERDICTS:
            terminalreporter.write_line(line)
