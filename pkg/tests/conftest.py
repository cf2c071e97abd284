import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: dict[int, dict] = {}
_CRIT_RE = re.compile(r"test_c(\d\d)_")


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    m = _CRIT_RE.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        entry = _CRITERIA.setdefault(int(m.group(1)), {"ok": True, "failed": []})
        if report.failed:
            entry["ok"] = False
            entry["failed"].append(report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        entry = _CRITERIA.get(k)
        if entry is None:
            status = "NOT RUN"
        else:
            status = "PASS" if entry["ok"] else "FAIL"
        line = f"{k:2d}. {status:4s} {CRITERIA[k]}"
        if entry and entry["failed"]:
            line += f"  [failed: {', '.join(entry['failed'])}]"
        terminalreporter.write_line(line)
