import re

_CRITERION = re.compile(r"test_acceptance\.py::test_(\d+)_")
_results: dict[int, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = _CRITERION.search(report.nodeid)
    if match:
        _results[int(match.group(1))] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    # One pass/fail line per acceptance item, immune to stdout capture.
    if not _results:
        return
    terminalreporter.section("acceptance")
    for number in sorted(_results):
        outcome, duration = _results[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(
            f"ACCEPTANCE {number}: {status} ({duration:.2f}s)"
        )
