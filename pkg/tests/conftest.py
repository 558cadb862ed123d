import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

STRETCH = os.environ.get("POLYAN_STRETCH") == "1"

# (criterion, description, passed, detail) rows filled in by test_acceptance
ACCEPTANCE_RESULTS = []


def pytest_collection_modifyitems(config, items):
    if STRETCH:
        return
    skip = pytest.mark.skip(reason="stretch check; set POLYAN_STRETCH=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, ok, detail in sorted(ACCEPTANCE_RESULTS, key=lambda row: str(row[0]).zfill(3)):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num}. {desc} -- {detail}")


@pytest.fixture
def rng():
    return random.Random(20240917)
