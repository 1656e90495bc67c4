"""Distance matrices from point sets.

Three metric kinds are supported: plain Euclidean, precomputed (the caller
already holds a distance matrix) and geodesic, i.e. shortest paths through the
symmetrized k-nearest-neighbor graph. Geodesic distances approximate intrinsic
manifold distances and are what one wants for curled-up data such as the swiss
roll.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, dijkstra
from scipy.spatial.distance import cdist

from corank._validate import as_distances, as_points
from corank.errors import DisconnectedGraphError, InputError
from corank.ranking import rank_matrix

METRIC_KINDS = ("euclidean", "precomputed", "geodesic")


@dataclass(frozen=True)
class MetricSpec:
    kind: str = "euclidean"
    k: int | None = None

    def __post_init__(self):
        if self.kind not in METRIC_KINDS:
            raise InputError(f"unknown metric kind {self.kind!r}")
        if self.kind == "geodesic":
            if self.k is None or int(self.k) < 1:
                raise InputError("geodesic metric requires an integer k >= 1")
        elif self.k is not None:
            raise InputError(f"metric {self.kind!r} takes no k")

    @classmethod
    def parse(cls, text):
        """Parse ``euclidean``, ``precomputed`` or ``geodesic:K``."""
        kind, sep, arg = text.strip().partition(":")
        if kind == "geodesic":
            try:
                k = int(arg)
            except ValueError:
                raise InputError(f"bad geodesic metric {text!r}, expected geodesic:K") from None
            return cls("geodesic", k)
        if sep:
            raise InputError(f"metric {kind!r} takes no argument")
        return cls(kind)

    def __str__(self):
        return f"geodesic:{self.k}" if self.kind == "geodesic" else self.kind


def pairwise_distances(points, metric=MetricSpec()):
    """Return the N x N distance matrix of ``points`` under ``metric``."""
    if isinstance(metric, str):
        metric = MetricSpec.parse(metric)
    x = as_points(points)
    if metric.kind == "euclidean":
        return _euclidean(x)
    if metric.kind == "geodesic":
        return geodesic_distances(x, metric.k)
    raise InputError("precomputed metric needs a distance matrix, not points")


def _euclidean(x):
    d = cdist(x, x)
    # cdist is symmetric up to rounding; force exact symmetry and zero diagonal
    d = np.minimum(d, d.T)
    np.fill_diagonal(d, 0.0)
    return d


def _check_k(k, n):
    k = int(k)
    if not 1 <= k <= n - 1:
        raise InputError(f"k must lie in [1, {n - 1}], got {k}")
    return k


def _adjacency(ranks, k):
    a = (ranks >= 1) & (ranks <= k)
    return a | a.T


def knn_graph(d, k):
    """Symmetrized k-nearest-neighbor graph as a sparse weighted adjacency.

    Neighbors are chosen with the same tie rule as :func:`rank_matrix`, so j is
    a neighbor of i exactly when ``rank[i, j] <= k``. Edge weights are the
    distances; zero-weight edges between duplicate points are kept explicitly.
    """
    d = as_distances(d)
    k = _check_k(k, d.shape[0])
    return _graph_from_ranks(d, rank_matrix(d), k)


def _graph_from_ranks(d, ranks, k):
    rows, cols = np.nonzero(_adjacency(ranks, k))
    return csr_matrix((d[rows, cols], (rows, cols)), shape=d.shape)


def _smallest_connecting_k(ranks, k):
    # connectivity is monotone in k
    lo, hi = k + 1, ranks.shape[0] - 1
    while lo < hi:
        mid = (lo + hi) // 2
        n_comp, _ = connected_components(csr_matrix(_adjacency(ranks, mid)), directed=False)
        if n_comp == 1:
            hi = mid
        else:
            lo = mid + 1
    return lo


def geodesic_distances(points, k, n_jobs=1):
    """Shortest-path lengths through the kNN graph of ``points``.

    Raises :class:`DisconnectedGraphError` when the graph falls apart instead of
    returning infinite distances.
    """
    x = as_points(points)
    d = _euclidean(x)
    k = _check_k(k, d.shape[0])
    ranks = rank_matrix(d)
    graph = _graph_from_ranks(d, ranks, k)
    n_comp, _ = connected_components(graph, directed=False)
    if n_comp > 1:
        raise DisconnectedGraphError(n_comp, k, _smallest_connecting_k(ranks, k))

    n = d.shape[0]
    if n_jobs == 1:
        g = dijkstra(graph, directed=False)
    else:
        chunks = np.array_split(np.arange(n), max(1, min(n_jobs, n)))
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            parts = pool.map(lambda idx: dijkstra(graph, directed=False, indices=idx), chunks)
            g = np.vstack(list(parts))
    g = np.minimum(g, g.T)
    np.fill_diagonal(g, 0.0)
    return g
