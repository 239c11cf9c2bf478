"""Shared pytest plumbing: collects acceptance-criterion verdicts and prints
one line per criterion in the terminal summary."""

from __future__ import annotations

_acceptance_results: list[tuple[int, str, bool]] = []


def record_acceptance(index: int, name: str, passed: bool) -> None:
    _acceptance_results.append((index, name, passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for index, name, passed in sorted(_acceptance_results):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {index}: {status} - {name}")
