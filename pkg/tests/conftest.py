import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def announce(capsys):
    """Print one PASS/FAIL line for an acceptance criterion, then assert it."""

    def _announce(number: int, ok: bool, detail: str) -> None:
        line = f"CRITERION {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print(f"\n{line}")
        assert ok, line

    return _announce


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
