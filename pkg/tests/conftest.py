from __future__ import annotations

import pytest

ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the summary hook prints them all."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE.append((label, bool(ok), detail))
        print(f"[{'PASS' if ok else 'FAIL'}] {label} {detail}")
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {label}  {detail}")
