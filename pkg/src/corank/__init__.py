"""Rank-based quality assessment of dimensionality-reduction embeddings."""

from corank.coranking import (
    BlockCounts,
    block_counts,
    coranking_matrix,
    min_error_histogram,
)
from corank.datasets import (
    MappingPair,
    gen_random_points,
    gen_swapped_row,
    gen_swiss_roll,
    tear_strip,
    three_point_swap,
)
from corank.errors import DisconnectedGraphError, InputError
from corank.geometry import (
    MetricSpec,
    geodesic_distances,
    knn_graph,
    pairwise_distances,
)
from corank.local_quality import (
    LocalQualityVector,
    colorize,
    pointwise_quality,
    pointwise_quality_naive,
)
from corank.measures import (
    BaselineSpec,
    QualityCurve,
    QualityMap,
    SplitSummary,
    centered,
    lcmc_curve,
    qnx_curve,
    qnx_via_weights,
    quality_map,
    random_baseline,
    scalar_summary,
    split_summary,
)
from corank.ranking import rank_errors, rank_matrix

__version__ = "0.1.0"

__all__ = [
    "BaselineSpec",
    "BlockCounts",
    "DisconnectedGraphError",
    "InputError",
    "LocalQualityVector",
    "MappingPair",
    "MetricSpec",
    "QualityCurve",
    "QualityMap",
    "SplitSummary",
    "block_counts",
    "centered",
    "colorize",
    "coranking_matrix",
    "gen_random_points",
    "gen_swapped_row",
    "gen_swiss_roll",
    "geodesic_distances",
    "knn_graph",
    "lcmc_curve",
    "min_error_histogram",
    "pairwise_distances",
    "pointwise_quality",
    "pointwise_quality_naive",
    "qnx_curve",
    "qnx_via_weights",
    "quality_map",
    "random_baseline",
    "rank_errors",
    "rank_matrix",
    "scalar_summary",
    "split_summary",
    "tear_strip",
    "three_point_swap",
]
