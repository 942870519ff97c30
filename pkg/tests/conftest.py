"""Shared pytest wiring.

The acceptance module records one line per criterion; the hook below prints
those lines in the terminal summary so every run ends with an explicit
pass/fail roll call.
"""

ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
