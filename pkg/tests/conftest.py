import random
from pathlib import Path

import pytest

from posknots.braid import BraidWord, closure_info

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE_LINES: list[str] = []


def random_knot_braids(count, max_strands=7, max_length=18, seed=20261016):
    """Seeded sample of positive braid words whose closures are knots."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_strands)
        length = rng.randint(n - 1, max_length)
        b = BraidWord(n, tuple(rng.randint(1, n - 1) for _ in range(length)))
        if closure_info(b).is_knot:
            out.append(b)
    return out


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
