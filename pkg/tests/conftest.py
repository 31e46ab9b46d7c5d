"""Print one pass/fail line per acceptance criterion at the end of the run."""

_results = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    name = report.nodeid.split("::", 1)[1]
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _results[name] = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in _results.items():
        terminalreporter.write_line(f"{verdict}  {name}")
