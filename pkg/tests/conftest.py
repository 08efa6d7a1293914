"""Shared pytest plumbing: the acceptance-verdict summary section."""

from typing import List

VERDICT_LINES: List[str] = []


def record_verdict(line: str):
    VERDICT_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if not VERDICT_LINES:
        return
    terminalreporter.section("acceptance verdicts")
    for line in VERDICT_LINES:
        terminalreporter.write_line(line)
