import sys


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance PASS/FAIL lines after the run."""
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(results):
        terminalreporter.write_line(results[i])
