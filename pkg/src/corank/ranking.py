"""Rank matrices and rank errors."""

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from corank._validate import as_distances, as_ranks, same_size


def _rank_rows(d, rows):
    block = d[rows].copy()
    # the point itself always comes first, even when duplicates sit at distance 0
    block[np.arange(len(rows)), rows] = -np.inf
    order = np.argsort(block, axis=1, kind="stable")
    out = np.empty(block.shape, dtype=np.int32)
    np.put_along_axis(out, order, np.arange(d.shape[1], dtype=np.int32)[None, :], axis=1)
    return out


def rank_matrix(d, n_jobs=1):
    """Neighbor ranks for every row of the distance matrix ``d``.

    ``rank[i, j]`` is the number of points strictly closer to i than j, plus
    the equally distant points with a lower index. Self-rank is 0, so every
    row holds a permutation of ``0..N-1`` with the diagonal at 0.

    Rows are independent, so ``n_jobs > 1`` splits them across threads; the
    result does not depend on the split.
    """
    d = as_distances(d)
    n = d.shape[0]
    if n_jobs == 1:
        return _rank_rows(d, np.arange(n))
    chunks = np.array_split(np.arange(n), max(1, min(n_jobs, n)))
    with ThreadPoolExecutor(max_workers=n_jobs) as pool:
        return np.vstack(list(pool.map(lambda rows: _rank_rows(d, rows), chunks)))


def rank_errors(rho, r):
    """Elementwise absolute rank difference ``|rho - r|``."""
    rho, r = as_ranks(rho), as_ranks(r)
    same_size(rho, r)
    return np.abs(rho.astype(np.int64) - r).astype(rho.dtype)
