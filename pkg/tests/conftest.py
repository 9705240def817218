import pytest

ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or report.when == "teardown":
        return
    number = mark.args[0]
    if report.when == "setup" and report.passed:
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    ACCEPTANCE[number] = (report.passed, doc, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, doc, seconds = ACCEPTANCE[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {doc}  ({seconds:.2f}s)")
