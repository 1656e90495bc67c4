"""Synthetic mappings with known structure."""

from dataclasses import dataclass

import numpy as np

from corank.errors import InputError


@dataclass(frozen=True)
class MappingPair:
    high: np.ndarray
    low: np.ndarray
    description: str = ""

    def __post_init__(self):
        if len(self.high) != len(self.low):
            raise InputError(f"high has {len(self.high)} points, low has {len(self.low)}")


def three_point_swap():
    """Points a, b, c on a line at 1, 2, 4; the embedding swaps a and c."""
    high = np.array([[1.0], [2.0], [4.0]])
    low = np.array([[4.0], [2.0], [1.0]])
    return MappingPair(high, low, "three points on a line, outer two swapped")


def gen_swapped_row(n):
    """Equidistant points on a line with neighbors swapped pairwise.

    Point i sits at position i in the original and at position ``i ^ 1`` in the
    embedding, i.e. the low-dimensional order reads p2, p1, p4, p3, ...
    """
    if n < 2 or n % 2:
        raise InputError(f"n must be even and >= 2, got {n}")
    idx = np.arange(n)
    high = idx.astype(float)[:, None]
    low = (idx ^ 1).astype(float)[:, None]
    return MappingPair(high, low, f"row of {n} points, adjacent pairs swapped")


def _arc_length(t):
    return 0.5 * (t * np.sqrt(1.0 + t * t) + np.arcsinh(t))


def _inverse_arc_length(s, t_min, t_max):
    grid = np.linspace(t_min, t_max, 4097)
    t = np.interp(s, _arc_length(grid), grid)
    for _ in range(4):
        t = t - (_arc_length(t) - s) / np.sqrt(1.0 + t * t)
    return np.clip(t, t_min, t_max)


def gen_swiss_roll(n, seed=0, t_min=1.5 * np.pi, t_max=4.5 * np.pi, height=21.0):
    """Sample a swiss roll uniformly by surface area.

    Returns ``(points_3d, ground_truth_2d)``. The spiral parameter t is drawn
    so that arc length along the spiral is uniform; the ground truth is the
    unrolled strip (arc length, height).
    """
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    if not (0 < t_min < t_max) or height <= 0:
        raise InputError("need 0 < t_min < t_max and height > 0")
    rng = np.random.default_rng(seed)
    s = rng.uniform(_arc_length(t_min), _arc_length(t_max), n)
    h = rng.uniform(0.0, height, n)
    t = _inverse_arc_length(s, t_min, t_max)
    high = np.column_stack([t * np.cos(t), h, t * np.sin(t)])
    low = np.column_stack([_arc_length(t), h])
    return high, low


def tear_strip(low, gap, axis=0):
    """Cut a 2-D layout at the median of ``axis`` and push the upper half away.

    Returns the torn layout and a boolean mask of the points that were moved.
    """
    low = np.asarray(low, dtype=float)
    cut = np.median(low[:, axis])
    moved = low[:, axis] > cut
    torn = low.copy()
    torn[moved, axis] += gap
    return torn, moved


def gen_random_points(n, d, seed=0):
    """Uniform points in the unit cube ``[0, 1]^d``."""
    if n < 2 or d < 1:
        raise InputError(f"need n >= 2 and d >= 1, got n={n}, d={d}")
    return np.random.default_rng(seed).uniform(0.0, 1.0, (n, d))
