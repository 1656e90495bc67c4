"""Quality measures on top of the co-ranking statistics.

Covers the one-parameter neighborhood curves (Q_NX, LCMC and the local/global
split at K_max) and the two-parameter quality map, where ``kappa_s`` bounds the
ranks that matter and ``kappa_t`` bounds the rank errors that are forgiven.
"""

from dataclasses import dataclass

import numpy as np

from corank._validate import as_distances, as_ranks, same_size
from corank.coranking import min_error_histogram
from corank.errors import InputError
from corank.ranking import rank_matrix

NORMALIZATIONS = ("region", "raw")
TOLERANCES = ("strict", "inclusive")


@dataclass(frozen=True)
class QualityCurve:
    """Values indexed by K = 1..N-1 (stored at ``values[K - 1]``)."""

    values: np.ndarray
    kind: str

    @property
    def n(self):
        return len(self.values) + 1

    def at(self, K):
        return float(self.values[K - 1])


@dataclass(frozen=True)
class SplitSummary:
    k_max: int
    q_local: float
    q_global: float


@dataclass(frozen=True)
class QualityMap:
    """Grid with ``values[kappa_s - 1, kappa_t - 1]``."""

    values: np.ndarray
    normalization: str = "region"
    tolerance: str = "strict"

    @property
    def n(self):
        return self.values.shape[0] + 1

    def at(self, kappa_s, kappa_t):
        return float(self.values[kappa_s - 1, kappa_t - 1])


@dataclass(frozen=True)
class BaselineSpec:
    samples: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.samples < 1:
            raise InputError("baseline needs at least one sample")


def _check_modes(normalization, tolerance):
    if normalization not in NORMALIZATIONS:
        raise InputError(f"normalization must be one of {NORMALIZATIONS}, got {normalization!r}")
    if tolerance not in TOLERANCES:
        raise InputError(f"tolerance must be one of {TOLERANCES}, got {tolerance!r}")


def neighborhood_counts(q):
    """Number of pairs with both ranks <= K, for K = 1..N-1."""
    p = np.cumsum(np.cumsum(np.asarray(q, dtype=np.int64), axis=0), axis=1)
    return np.diagonal(p).copy()


def qnx_curve(q):
    counts = neighborhood_counts(q)
    n = len(counts) + 1
    K = np.arange(1, n)
    return QualityCurve(counts / (K * n), "qnx")


def lcmc_curve(qnx):
    if qnx.kind != "qnx":
        raise InputError("lcmc_curve expects a Q_NX curve")
    K = np.arange(1, qnx.n)
    return QualityCurve(qnx.values - K / (qnx.n - 1), "lcmc")


def split_summary(qnx):
    """K_max and the mean Q_NX on either side of it (both sides include K_max)."""
    lcmc = lcmc_curve(qnx).values
    k_max = int(np.argmax(lcmc)) + 1  # argmax returns the first maximum
    v = qnx.values
    q_local = float(v[:k_max].sum() / k_max)
    q_global = float(v[k_max - 1 :].sum() / (qnx.n - k_max))
    return SplitSummary(k_max, q_local, q_global)


def weighted_pair_count(rho, r, K):
    """Pairs counted by the significance/tolerance weights of Q_NX at K."""
    rho, r = as_ranks(rho), as_ranks(r)
    same_size(rho, r)
    n = rho.shape[0]
    if not 1 <= K <= n - 1:
        raise InputError(f"K must lie in [1, {n - 1}], got {K}")
    offdiag = ~np.eye(n, dtype=bool)
    hi_in, lo_in = rho <= K, r <= K
    significant = ~(~hi_in & ~lo_in)
    tolerated = ~((hi_in & ~lo_in) | (~hi_in & lo_in))
    return int(np.count_nonzero(significant & tolerated & offdiag))


def qnx_via_weights(rho, r, K):
    """Q_NX(K) evaluated pair by pair through its weight-function form."""
    return weighted_pair_count(rho, r, K) / (K * rho.shape[0])


def quality_counts(h, tolerance="strict"):
    """Integer grid of significant, tolerated pairs and the region sizes.

    Returns ``(counts, region)`` with ``counts[kappa_s - 1, kappa_t - 1]`` and
    ``region[kappa_s - 1]`` = number of pairs whose smaller rank is <= kappa_s.
    """
    _check_modes("region", tolerance)
    p = np.cumsum(np.cumsum(np.asarray(h, dtype=np.int64), axis=0), axis=1)
    region = p[:, -1].copy()
    if tolerance == "strict":
        # error < kappa_t  <=>  error <= kappa_t - 1
        counts = p
    else:
        counts = np.concatenate([p[:, 1:], region[:, None]], axis=1)
    return counts, region


def quality_map(h, normalization="region", tolerance="strict"):
    """Two-parameter quality for every (kappa_s, kappa_t) at once.

    ``raw`` divides by ``kappa_s * N`` as in the original definition and can
    exceed 1; ``region`` divides by the exact number of significant pairs and
    always lies in [0, 1].
    """
    _check_modes(normalization, tolerance)
    counts, region = quality_counts(h, tolerance)
    if normalization == "raw":
        n = counts.shape[0] + 1
        denom = np.arange(1, n, dtype=np.int64)[:, None] * n
    else:
        denom = region[:, None]
    return QualityMap(counts / denom, normalization, tolerance)


def random_baseline(rho, low_distances, spec, normalization="region", tolerance="strict",
                    permutations=None):
    """Average quality map over randomly relabeled low-dimensional layouts.

    Each sample hands the low-dimensional positions to the data indices in a
    uniformly random order, recomputes the low ranks and scores them against
    the fixed high ranks. ``permutations`` overrides the random draws.
    """
    _check_modes(normalization, tolerance)
    rho = as_ranks(rho)
    d = as_distances(low_distances)
    same_size(rho, d)
    n = rho.shape[0]
    if permutations is None:
        rng = np.random.default_rng(spec.seed)
        permutations = [rng.permutation(n) for _ in range(spec.samples)]
    acc = np.zeros((n - 1, n - 1))
    for perm in permutations:
        perm = np.asarray(perm)
        r = rank_matrix(d[np.ix_(perm, perm)])
        acc += quality_map(min_error_histogram(rho, r), normalization, tolerance).values
    return QualityMap(acc / len(permutations), normalization, tolerance)


def _check_compatible(a, b):
    if a.values.shape != b.values.shape:
        raise InputError(f"map shapes differ: {a.values.shape} vs {b.values.shape}")
    if (a.normalization, a.tolerance) != (b.normalization, b.tolerance):
        raise InputError("maps use different normalization or tolerance modes")


def centered(qmap, baseline):
    """Quality map minus its random-mapping baseline."""
    _check_compatible(qmap, baseline)
    return QualityMap(qmap.values - baseline.values, qmap.normalization, qmap.tolerance)


def scalar_summary(qmap, baseline):
    """Mean map value over the cells that beat the baseline; 0 if none do."""
    _check_compatible(qmap, baseline)
    better = (qmap.values - baseline.values) > 0
    if not better.any():
        return 0.0
    return float(qmap.values[better].mean())
