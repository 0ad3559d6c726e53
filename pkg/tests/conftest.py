import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
os.environ.setdefault("ZEROSUM_THREADS", "1")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
