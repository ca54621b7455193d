def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    rows = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in report.nodeid and report.when == "call":
                rows.append((report.nodeid.split("::")[-1], outcome.upper()))
    if rows:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(rows):
            terminalreporter.write_line(f"{outcome:6s} {name}")
