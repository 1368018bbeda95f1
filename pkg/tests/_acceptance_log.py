"""Shared sink for the acceptance pass/fail lines, printed after capture ends."""

LINES = []


def record(criterion, ok):
    LINES.append("ACCEPTANCE %-38s %s (exact)" % (criterion, "PASS" if ok else "FAIL"))
