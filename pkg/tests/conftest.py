"""Replay the acceptance scoreboard after pytest's own summary.

Passing tests have their stdout captured, so without this hook the
``criterion NN`` lines would only surface for failures.
"""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    for name in ("tests.test_acceptance", "test_acceptance"):
        module = sys.modules.get(name)
        if module is not None and getattr(module, "SCOREBOARD", None):
            terminalreporter.section("acceptance criteria")
            for line in module.SCOREBOARD:
                terminalreporter.write_line(line)
            return
