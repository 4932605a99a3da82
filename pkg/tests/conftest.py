import random

import pytest

# Acceptance outcomes, printed as one line each at the end of the session.
ACCEPTANCE: list[tuple[str, str, bool]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid, desc, ok in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{cid}] {desc}")


@pytest.fixture
def rng():
    return random.Random(20261014)
