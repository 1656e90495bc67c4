"""Literal, slow reference implementations used only by the tests."""

import numpy as np


def ranks_by_counting(d):
    n = len(d)
    rank = np.zeros((n, n), dtype=int)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            rank[i, j] = sum(
                1 for k in range(n) if d[i, k] < d[i, j] or (d[i, k] == d[i, j] and k < j)
            )
    return rank


def ordered_pairs(rho, r):
    n = len(rho)
    return [(rho[i, j], r[i, j]) for i in range(n) for j in range(n) if i != j]


def coranking_by_loop(rho, r):
    n = len(rho)
    q = np.zeros((n - 1, n - 1), dtype=int)
    for k, l in ordered_pairs(rho, r):
        q[k - 1, l - 1] += 1
    return q


def qnx_count_by_pairs(rho, r, K):
    return sum(1 for k, l in ordered_pairs(rho, r) if k <= K and l <= K)


def quality_counts_by_pairs(rho, r, tolerance="strict"):
    """Count grid and region sizes by testing every pair at every cell."""
    pairs = np.array(ordered_pairs(rho, r))
    lo = pairs.min(axis=1)
    err = np.abs(pairs[:, 0] - pairs[:, 1])
    m = len(rho) - 1
    counts = np.zeros((m, m), dtype=int)
    region = np.zeros(m, dtype=int)
    for ks in range(1, m + 1):
        sig = lo <= ks
        region[ks - 1] = sig.sum()
        for kt in range(1, m + 1):
            tol = err < kt if tolerance == "strict" else err <= kt
            counts[ks - 1, kt - 1] = np.count_nonzero(sig & tol)
    return counts, region
