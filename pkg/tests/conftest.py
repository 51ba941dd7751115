import re


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\w+)", rep.nodeid)
            if m:
                results.append((m.group(1), "PASS" if status == "passed" else "FAIL"))
    if results:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, verdict in sorted(results):
            terminalreporter.write_line(f"criterion {name}: {verdict}")
