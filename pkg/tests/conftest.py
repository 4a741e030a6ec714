from __future__ import annotations

import numpy as np
import pytest

from mtpt import FAMILIES, Instance, generate_instance


def small_instances(count: int, seed: int, *, max_n: int = 10, max_p: int = 12, max_dues: int = 4):
    """Seeded small instances cycling through every generator family."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        family = FAMILIES[i % len(FAMILIES)]
        n = int(rng.integers(0, max_n + 1))
        p_max = int(rng.integers(1, max_p + 1))
        dues = int(rng.integers(1, max_dues + 1))
        out.append(generate_instance(n, p_max, family, int(rng.integers(2**31)), max_dues=dues))
    return out


@pytest.fixture
def two_jobs() -> Instance:
    return Instance.from_pairs([(3, 4), (3, 4)])


@pytest.fixture
def three_jobs() -> Instance:
    return Instance.from_pairs([(3, 8), (5, 8), (7, 8)])


# one line per acceptance criterion, shown in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def report(criterion: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
