"""Co-ranking matrix and derived pair-count statistics.

Arrays are 0-based: ``q[k - 1, l - 1]`` counts the ordered pairs with high
rank k and low rank l. Likewise ``h[m - 1, e]`` counts pairs whose smaller
rank is m and whose rank error is e.
"""

from dataclasses import dataclass, fields

import numpy as np

from corank._validate import as_ranks, same_size
from corank.errors import InputError


def _offdiag_pairs(rho, r):
    rho, r = as_ranks(rho), as_ranks(r)
    same_size(rho, r)
    mask = ~np.eye(rho.shape[0], dtype=bool)
    return rho[mask].astype(np.int64), r[mask].astype(np.int64), rho.shape[0]


def coranking_matrix(rho, r):
    """Histogram of (high rank, low rank) over all ordered pairs i != j."""
    a, b, n = _offdiag_pairs(rho, r)
    m = n - 1
    q = np.bincount((a - 1) * m + (b - 1), minlength=m * m)
    return q.reshape(m, m)


@dataclass(frozen=True)
class BlockCounts:
    K: int
    preserved: int
    mild_intrusions: int
    mild_extrusions: int
    hard_intrusions: int
    hard_extrusions: int
    outside: int
    diagonal_beyond: int

    def total(self):
        return sum(getattr(self, f.name) for f in fields(self) if f.name != "K")


def block_counts(q, K):
    """Split the pair mass of ``q`` around the K-neighborhood boundary.

    ``outside`` holds off-diagonal pairs with both ranks above K and
    ``diagonal_beyond`` the rank-preserving pairs above K, so that all fields
    together account for every ordered pair.
    """
    q = np.asarray(q, dtype=np.int64)
    m = q.shape[0]
    if not 1 <= K <= m:
        raise InputError(f"K must lie in [1, {m}], got {K}")
    inner = q[:K, :K]
    diag_inner = int(np.trace(inner))
    # row index = high rank, column index = low rank; intrusion means low < high
    mild_intr = int(np.tril(inner, -1).sum())
    mild_extr = int(np.triu(inner, 1).sum())
    outer = q[K:, K:]
    diag_outer = int(np.trace(outer))
    return BlockCounts(
        K=int(K),
        preserved=diag_inner,
        mild_intrusions=mild_intr,
        mild_extrusions=mild_extr,
        hard_intrusions=int(q[K:, :K].sum()),
        hard_extrusions=int(q[:K, K:].sum()),
        outside=int(outer.sum()) - diag_outer,
        diagonal_beyond=diag_outer,
    )


def min_error_histogram(rho, r):
    """Counts of pairs by (min(rho, r), |rho - r|).

    Grouping by the smaller rank turns the "significant in either space"
    condition into a prefix over rows, so every quality-map cell becomes a
    2-D prefix sum of this table.
    """
    a, b, n = _offdiag_pairs(rho, r)
    m = n - 1
    lo = np.minimum(a, b)
    err = np.abs(a - b)
    h = np.bincount((lo - 1) * m + err, minlength=m * m)
    return h.reshape(m, m)
