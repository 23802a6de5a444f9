import re

_AC = re.compile(r"test_acceptance\.py::test_ac(\d+)_(\w+)")
_results: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = _AC.search(report.nodeid)
    if not m:
        return
    n, name = int(m.group(1)), m.group(2)
    if report.when == "call" or report.failed:
        status = "PASS" if report.passed else "FAIL"
        if n not in _results or status == "FAIL":
            _results[n] = (status, name.replace("_", " "))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        status, name = _results[n]
        terminalreporter.write_line(f"AC{n:<3d}{status}  {name}")
