import pytest

ACCEPTANCE_LINES: dict[int, str] = {}


def record(number: int, title: str, passed: bool, elapsed: float, detail: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    line = f"criterion {number:2d} {status}  {title}  ({elapsed:.2f} s)"
    if detail:
        line += f"  {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
