from pathlib import Path

import numpy as np
import pytest

from centralloops import fixtures
from centralloops.magma import CayleyTable

TABLES = Path(__file__).resolve().parents[1] / "tables"

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def random_latin_square(n: int, rng: np.random.Generator) -> CayleyTable:
    """Random Latin square by randomized backtracking (fine for n <= 8)."""
    grid = -np.ones((n, n), dtype=np.int64)

    def fill(cell: int) -> bool:
        if cell == n * n:
            return True
        r, c = divmod(cell, n)
        used = set(grid[r, :c].tolist()) | set(grid[:r, c].tolist())
        for v in rng.permutation(n):
            if v not in used:
                grid[r, c] = v
                if fill(cell + 1):
                    return True
        grid[r, c] = -1
        return False

    assert fill(0)
    return CayleyTable(grid)


@pytest.fixture(scope="session")
def c12():
    return fixtures.c12_loop()


@pytest.fixture(scope="session")
def loop5():
    return fixtures.loop5()


@pytest.fixture(scope="session")
def groups():
    return fixtures.group_fixtures(8)


@pytest.fixture(scope="session")
def steiner_loops():
    return {
        "trivial": fixtures.trivial_loop(),
        "Z2": fixtures.cyclic_group(2),
        "Z2^2": fixtures.elementary_abelian_2group(2),
        "Z2^3": fixtures.elementary_abelian_2group(3),
        "Z2^4": fixtures.elementary_abelian_2group(4),
    }


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, msg = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {msg}")
