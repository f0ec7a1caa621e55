import re

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call" and outcome != "error":
                continue
            m = _CRITERION.search(rep.nodeid)
            if m:
                lines.append((int(m.group(1)), m.group(2), "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for num, name, status in sorted(lines):
            terminalreporter.write_line(f"criterion {num} [{name}]: {status}")
