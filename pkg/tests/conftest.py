import re

_CRITERIA: dict[int, tuple[str, str]] = {}
_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_collection_modifyitems(items):
    for item in items:
        if _PATTERN.search(item.nodeid):
            doc = (item.function.__doc__ or "").strip().splitlines()
            item.user_properties.append(("criterion", doc[0] if doc else ""))


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        doc = dict(report.user_properties).get("criterion", "")
        _CRITERIA[int(m.group(1))] = ("PASS" if report.outcome == "passed" else "FAIL", doc)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        status, doc = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {doc}")
