import sys
from math import gcd
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semimodules import SemigroupPair, make_semimodule  # noqa: E402

SMALL_PAIRS = [(a, b) for b in range(3, 12) for a in range(2, b) if gcd(a, b) == 1 and a + b <= 14]


@pytest.fixture
def s57():
    return SemigroupPair(5, 7)


@pytest.fixture
def s34():
    return SemigroupPair(3, 4)


@pytest.fixture
def s23():
    return SemigroupPair(2, 3)


@pytest.fixture
def fig1(s57):
    return make_semimodule(s57, [0, 9, 11, 8])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
