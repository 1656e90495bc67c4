"""Per-point quality contributions and point colors."""

import colorsys
from dataclasses import dataclass

import numpy as np

from corank._validate import as_ranks, same_size
from corank.errors import InputError
from corank.measures import TOLERANCES


@dataclass(frozen=True)
class LocalQualityVector:
    values: np.ndarray
    kappa_s: int
    kappa_t: int
    tolerance: str = "strict"


def _accepted_pairs(rho, r, kappa_s, kappa_t, tolerance):
    rho, r = as_ranks(rho), as_ranks(r)
    same_size(rho, r)
    n = rho.shape[0]
    for name, value in (("kappa_s", kappa_s), ("kappa_t", kappa_t)):
        if not 1 <= value <= n - 1:
            raise InputError(f"{name} must lie in [1, {n - 1}], got {value}")
    if tolerance not in TOLERANCES:
        raise InputError(f"tolerance must be one of {TOLERANCES}, got {tolerance!r}")
    err = np.abs(rho.astype(np.int64) - r)
    significant = np.minimum(rho, r) <= kappa_s
    tolerated = err < kappa_t if tolerance == "strict" else err <= kappa_t
    accepted = significant & tolerated
    np.fill_diagonal(accepted, False)
    return accepted


def pointwise_quality(rho, r, kappa_s, kappa_t, tolerance="strict"):
    """Symmetric per-point share of the raw quality at (kappa_s, kappa_t).

    Point i collects half of every accepted pair it takes part in, whether as
    the base point (i, j) or as the neighbor (j, i). The values sum to the raw
    quality-map value.
    """
    accepted = _accepted_pairs(rho, r, kappa_s, kappa_t, tolerance)
    n = accepted.shape[0]
    per_point = accepted.sum(axis=1) + accepted.sum(axis=0)
    return LocalQualityVector(per_point / (2 * kappa_s * n), kappa_s, kappa_t, tolerance)


def pointwise_quality_naive(rho, r, kappa_s, kappa_t, tolerance="strict"):
    """One-sided variant that only credits the base point of each pair.

    Kept as a diagnostic: when two far points trade places around a middle
    point, only the middle point's row changes, so only it is penalized.
    """
    accepted = _accepted_pairs(rho, r, kappa_s, kappa_t, tolerance)
    n = accepted.shape[0]
    return LocalQualityVector(accepted.sum(axis=1) / (kappa_s * n), kappa_s, kappa_t, tolerance)


def _round_half_up(x):
    return np.floor(np.asarray(x) * 255.0 + 0.5).astype(np.uint8)


def colorize(values, scheme="red_green"):
    """Map values to RGB bytes after min-max scaling to [0, 1].

    ``red_green`` runs the hue from red (worst) to green (best);
    ``grayscale`` from black to white. A constant vector maps to the top color.
    """
    if isinstance(values, LocalQualityVector):
        values = values.values
    v = np.asarray(values, dtype=float)
    if v.ndim != 1 or len(v) < 1:
        raise InputError("colorize expects a non-empty 1-D vector")
    lo, hi = v.min(), v.max()
    v = np.ones_like(v) if hi == lo else (v - lo) / (hi - lo)
    if scheme == "grayscale":
        return np.repeat(_round_half_up(v)[:, None], 3, axis=1)
    if scheme == "red_green":
        rgb = np.array([colorsys.hsv_to_rgb(120.0 * x / 360.0, 1.0, 1.0) for x in v])
        return _round_half_up(rgb)
    raise InputError(f"unknown color scheme {scheme!r}")
