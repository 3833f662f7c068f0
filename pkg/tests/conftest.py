import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# criterion number -> (passed, seconds, title); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, float, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, secs, title = ACCEPTANCE[k]
        terminalreporter.write_line(f"ACCEPTANCE {k:2d}: {'PASS' if ok else 'FAIL'} ({secs:.2f} s) {title}")
