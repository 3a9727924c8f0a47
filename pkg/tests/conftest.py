import sys
from pathlib import Path

import pytest

from dbrings.maps import read_map

FIXTURES = Path(__file__).parent / "fixtures"
sys.path.insert(0, str(Path(__file__).parent))

# (file stem, window rows, window cols, alphabet) as stated for each printed map
PRINTED_RINGS = {
    "ring_2_2_k2": (2, 2, 2),
    "ring_3_2_k2": (3, 2, 2),
    "ring_2_2_k3": (2, 2, 3),
    "ring_2_3_k2": (2, 3, 2),
    "ring_4_2_k2": (4, 2, 2),
}
PRINTED_MAPS = {
    "map_84_20_3_2_k4": (84, 20, 3, 2, 4),
    "map_84_38_3_2_k4": (84, 38, 3, 2, 4),
    "map_6_6_2_2_k4": (6, 6, 2, 2, 4),
    "map_10_10_2_2_k4": (10, 10, 2, 2, 4),
}


def load_fixture(stem):
    return read_map(FIXTURES / f"{stem}.dbmap")


@pytest.fixture
def fixture_map():
    return load_fixture


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    import re

    outcomes = {}
    for status in ("passed", "failed", "error", "skipped"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            match = re.search(r"test_acceptance\.py::test_criterion_(\d+)", nodeid)
            if match and getattr(rep, "when", "call") in ("call", "setup"):
                num = int(match.group(1))
                if status != "passed" or num not in outcomes:
                    outcomes[num] = "PASS" if status == "passed" else "FAIL"
    if not outcomes:
        return
    from test_acceptance import CRITERIA, EXACT_MODE_DIFFS

    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        terminalreporter.write_line(f"criterion {num:2d}: {outcomes.get(num, 'NOT RUN')}  {CRITERIA[num]}")
    if EXACT_MODE_DIFFS:
        terminalreporter.write_line(
            f"(info) exact arithmetic differs from {len(EXACT_MODE_DIFFS)} printed cells rounded through doubles:"
        )
        for d in EXACT_MODE_DIFFS:
            terminalreporter.write_line(f"  {d.key} {d.column}: exact {d.computed} printed {d.printed}")
