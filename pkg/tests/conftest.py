import random

import pytest

from redei_directions.directions import PointSet

SMALL_PRIMES = [5, 7, 11, 13]
MID_PRIMES = [17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101]

_acceptance_lines: list[str] = []


@pytest.fixture
def record_criterion():
    def record(number: int, text: str, ok: bool, elapsed: float):
        _acceptance_lines.append(f"criterion {number:2d} {'PASS' if ok else 'FAIL'} ({elapsed:6.2f}s) {text}")

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines):
            terminalreporter.write_line(line)


def random_pointset(rng: random.Random, p: int, lo: int = 2, hi: int | None = None) -> PointSet:
    hi = p - 1 if hi is None else hi
    n = rng.randint(lo, hi)
    cells = rng.sample(range(p * p), n)
    return PointSet.of(((c // p, c % p) for c in cells), p)
