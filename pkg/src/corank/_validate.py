import numpy as np

from corank.errors import InputError


def as_points(points):
    x = np.asarray(points, dtype=float)
    if x.ndim == 1:
        x = x[:, None]
    if x.ndim != 2:
        raise InputError(f"points must be a 2-D array, got shape {x.shape}")
    if x.shape[0] < 2:
        raise InputError(f"need at least 2 points, got {x.shape[0]}")
    if x.shape[1] < 1:
        raise InputError("points must have at least one coordinate")
    if not np.all(np.isfinite(x)):
        raise InputError("points contain non-finite coordinates")
    return x


def as_distances(d):
    d = np.asarray(d, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise InputError(f"distance matrix must be square, got shape {d.shape}")
    if d.shape[0] < 2:
        raise InputError("distance matrix must cover at least 2 points")
    if not np.all(np.isfinite(d)):
        raise InputError("distance matrix contains non-finite entries")
    if np.any(d < 0):
        raise InputError("distance matrix contains negative entries")
    if np.any(np.diagonal(d) != 0):
        raise InputError("distance matrix diagonal must be zero")
    if not np.array_equal(d, d.T):
        raise InputError("distance matrix must be symmetric")
    return d


def as_ranks(rank):
    rank = np.asarray(rank)
    if rank.ndim != 2 or rank.shape[0] != rank.shape[1] or rank.shape[0] < 2:
        raise InputError(f"rank matrix must be square with N >= 2, got {rank.shape}")
    return rank


def same_size(a, b):
    if a.shape != b.shape:
        raise InputError(f"size mismatch: {a.shape} vs {b.shape}")
