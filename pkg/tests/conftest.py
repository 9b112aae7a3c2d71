import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

#: (criterion number, description, passed) collected by test_acceptance
ACCEPTANCE: list[tuple[int, str, bool]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, text, ok in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:2d}. {text}")
