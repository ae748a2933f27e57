import re

_ACCEPTANCE = re.compile(r"test_acceptance\.py::test_(criterion_\d+)_(\w+)")
_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = _ACCEPTANCE.search(report.nodeid)
    if m:
        number = m.group(1).replace("_", " ")
        title = m.group(2).replace("_", " ")
        _results[number] = (title, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(_results, key=lambda k: int(k.split()[1])):
        title, outcome = _results[number]
        verdict = {"passed": "PASS", "failed": "FAIL"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"{verdict}  {number}: {title}")
