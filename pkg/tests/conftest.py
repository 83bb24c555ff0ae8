import random

import pytest

from smirnov_dominance.lattice import LatticePath
from smirnov_dominance.oracle import enumerate_all_paths


def paths(m, n):
    return enumerate_all_paths(m, n).paths


def random_tuple(rng: random.Random, m: int, n: int) -> LatticePath:
    return LatticePath(m, tuple(sorted(rng.randint(0, m) for _ in range(n))))


@pytest.fixture
def rng():
    return random.Random(20261019)


ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
