import re

from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

CRITERION = re.compile(r"test_criterion_(\d+)_(\w+?)(\[|$)")

_criteria: dict[int, dict] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    m = CRITERION.match(name)
    if not m:
        return
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    num, label = int(m.group(1)), m.group(2).replace("_", " ")
    entry = _criteria.setdefault(num, {"label": label, "passed": 0, "failed": 0, "seconds": 0.0})
    entry["passed" if report.passed else "failed"] += 1
    entry["seconds"] += report.duration


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        e = _criteria[num]
        verdict = "PASS" if e["failed"] == 0 else "FAIL"
        terminalreporter.write_line(
            f"criterion {num:2d} {verdict}  {e['label']}  "
            f"({e['passed']} passed, {e['failed']} failed, {e['seconds']:.1f}s)"
        )
