import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corank import pairwise_distances, rank_matrix, three_point_swap  # noqa: E402


def ranks_of(points):
    return rank_matrix(pairwise_distances(points))


@pytest.fixture
def fig4():
    pair = three_point_swap()
    return ranks_of(pair.high), ranks_of(pair.low)


def random_instance(seed, n=None):
    rng = np.random.default_rng(seed)
    if n is None:
        n = int(rng.integers(3, 51))
    x = rng.normal(size=(n, 4))
    return x, x[:, :2] + 0.3 * rng.normal(size=(n, 2))


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE:
        terminalreporter.write_line(line)
