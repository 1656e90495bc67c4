"""Command-line interface: ``corank {gen,coranking,qnx,qmap,local}``."""

import argparse
import sys

import numpy as np

from corank import datasets
from corank.coranking import block_counts, coranking_matrix, min_error_histogram
from corank.errors import InputError
from corank.geometry import MetricSpec, geodesic_distances, pairwise_distances
from corank.io import (
    read_distance_matrix,
    read_points,
    write_local_csv,
    write_matrix_csv,
    write_pgm,
    write_points,
    write_svg_scatter,
)
from corank.local_quality import colorize, pointwise_quality, pointwise_quality_naive
from corank.measures import (
    BaselineSpec,
    centered,
    lcmc_curve,
    qnx_curve,
    quality_map,
    random_baseline,
    scalar_summary,
    split_summary,
)
from corank.ranking import rank_matrix


class _Side:
    def __init__(self, path, metric, n_jobs):
        self.metric = MetricSpec.parse(metric)
        if self.metric.kind == "precomputed":
            self.points = None
            self.distances = read_distance_matrix(path)
        else:
            self.points = read_points(path)
            if self.metric.kind == "geodesic":
                self.distances = geodesic_distances(self.points, self.metric.k, n_jobs=n_jobs)
            else:
                self.distances = pairwise_distances(self.points, self.metric)
        self.ranks = rank_matrix(self.distances, n_jobs=n_jobs)


def _load(args):
    high = _Side(args.high, args.metric_high, args.jobs)
    low = _Side(args.low, args.metric_low, args.jobs)
    if high.ranks.shape != low.ranks.shape:
        raise InputError(f"high has {high.ranks.shape[0]} points, low has {low.ranks.shape[0]}")
    return high, low


def _emit_matrix(matrix, path, header=None):
    if path:
        write_matrix_csv(matrix, path, header)
    else:
        if header:
            print(",".join(header))
        for row in np.atleast_2d(matrix).tolist():
            print(",".join(map(repr, row)))


def cmd_gen(args):
    if args.kind == "swaps":
        pair = datasets.gen_swapped_row(args.n if args.n is not None else 20)
        high, low = pair.high, pair.low
    elif args.kind == "swissroll":
        high, low = datasets.gen_swiss_roll(
            args.n if args.n is not None else 500, args.seed,
            args.t_min, args.t_max, args.height,
        )
        if args.tear:
            low, _ = datasets.tear_strip(low, args.tear)
    else:
        high = datasets.gen_random_points(args.n if args.n is not None else 100, args.dim, args.seed)
        if not 1 <= args.dim_low <= args.dim:
            raise InputError("--dim-low must lie in [1, --dim]")
        low = high[:, : args.dim_low]
    write_points(high, args.out_high)
    write_points(low, args.out_low)
    return 0


def cmd_coranking(args):
    high, low = _load(args)
    q = coranking_matrix(high.ranks, low.ranks)
    _emit_matrix(q, args.csv)
    if args.heatmap:
        write_pgm(q, args.heatmap)
    if args.blocks is not None:
        b = block_counts(q, args.blocks)
        for name, value in vars(b).items():
            print(f"{name}={value}")
    return 0


def cmd_qnx(args):
    high, low = _load(args)
    qnx = qnx_curve(coranking_matrix(high.ranks, low.ranks))
    lcmc = lcmc_curve(qnx)
    table = np.column_stack([np.arange(1, qnx.n), qnx.values, lcmc.values]).astype(object)
    table[:, 0] = table[:, 0].astype(int)
    _emit_matrix(table, args.csv, ["K", "Q_NX", "LCMC"])
    if args.split:
        s = split_summary(qnx)
        print(f"k_max={s.k_max}")
        print(f"q_local={s.q_local!r}")
        print(f"q_global={s.q_global!r}")
    return 0


def cmd_qmap(args):
    high, low = _load(args)
    h = min_error_histogram(high.ranks, low.ranks)
    qmap = quality_map(h, args.normalization, args.tolerance)
    _emit_matrix(qmap.values, args.csv)
    if args.heatmap:
        write_pgm(qmap.values, args.heatmap)
    baseline = None
    if args.baseline:
        spec = BaselineSpec(args.baseline, args.seed)
        baseline = random_baseline(high.ranks, low.distances, spec, args.normalization, args.tolerance)
        if args.baseline_csv:
            write_matrix_csv(baseline.values, args.baseline_csv)
        if args.centered_csv:
            write_matrix_csv(centered(qmap, baseline).values, args.centered_csv)
    elif args.baseline_csv or args.centered_csv:
        raise InputError("--baseline-csv/--centered-csv need --baseline M")
    if args.scalar:
        if baseline is None:
            baseline = type(qmap)(np.zeros_like(qmap.values), qmap.normalization, qmap.tolerance)
        print(f"scalar={scalar_summary(qmap, baseline)!r}")
    return 0


def cmd_local(args):
    high, low = _load(args)
    ks = args.ks
    if ks is None:
        ks = split_summary(qnx_curve(coranking_matrix(high.ranks, low.ranks))).k_max
    kt = args.kt if args.kt is not None else 1
    fn = pointwise_quality_naive if args.naive else pointwise_quality
    local = fn(high.ranks, low.ranks, ks, kt, args.tolerance)
    colors = colorize(local, args.scheme)
    if args.csv:
        write_local_csv(local.values, colors, args.csv)
    else:
        print("index,value,r,g,b")
        for i, (v, (r, g, b)) in enumerate(zip(local.values.tolist(), colors.tolist())):
            print(f"{i},{v!r},{r},{g},{b}")
    if args.svg:
        if low.points is None:
            raise InputError("--svg needs low-dimensional points, not a distance matrix")
        write_svg_scatter(low.points, colors, args.svg)
    return 0


def _pair_parser():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--high", required=True, help="original data (points or distance matrix)")
    p.add_argument("--low", required=True, help="embedding (points or distance matrix)")
    p.add_argument("--metric-high", default="euclidean",
                   help="euclidean | precomputed | geodesic:K (default: euclidean)")
    p.add_argument("--metric-low", default="euclidean", help="as --metric-high")
    p.add_argument("--jobs", type=int, default=1, help="worker threads for ranks and geodesics")
    return p


def build_parser():
    parser = argparse.ArgumentParser(
        prog="corank", description="Co-ranking quality assessment of embeddings.")
    sub = parser.add_subparsers(dest="command", required=True)
    pair = _pair_parser()

    g = sub.add_parser("gen", help="write a synthetic high/low point pair")
    g.add_argument("kind", choices=["swaps", "swissroll", "random"])
    g.add_argument("--n", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--t-min", type=float, default=1.5 * np.pi)
    g.add_argument("--t-max", type=float, default=4.5 * np.pi)
    g.add_argument("--height", type=float, default=21.0)
    g.add_argument("--tear", type=float, default=0.0, help="swissroll: gap cut into the ground truth")
    g.add_argument("--dim", type=int, default=3, help="random: original dimension")
    g.add_argument("--dim-low", type=int, default=2, help="random: coordinates kept in the embedding")
    g.add_argument("--out-high", required=True)
    g.add_argument("--out-low", required=True)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("coranking", parents=[pair], help="co-ranking matrix")
    c.add_argument("--csv")
    c.add_argument("--heatmap", help="PGM output path")
    c.add_argument("--blocks", type=int, metavar="K", help="print intrusion/extrusion counts at K")
    c.set_defaults(func=cmd_coranking)

    q = sub.add_parser("qnx", parents=[pair], help="Q_NX and LCMC curves")
    q.add_argument("--csv")
    q.add_argument("--split", action="store_true", help="print k_max, q_local, q_global")
    q.set_defaults(func=cmd_qnx)

    m = sub.add_parser("qmap", parents=[pair], help="two-parameter quality map")
    m.add_argument("--normalization", choices=["region", "raw"], default="region")
    m.add_argument("--tolerance", choices=["strict", "inclusive"], default="strict")
    m.add_argument("--baseline", type=int, metavar="M", help="random-mapping samples")
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--csv")
    m.add_argument("--heatmap", help="PGM output path")
    m.add_argument("--baseline-csv")
    m.add_argument("--centered-csv")
    m.add_argument("--scalar", action="store_true", help="print the scalar summary")
    m.set_defaults(func=cmd_qmap)

    lq = sub.add_parser("local", parents=[pair], help="pointwise quality and colors")
    lq.add_argument("--ks", type=int, help="rank significance (default: K_max)")
    lq.add_argument("--kt", type=int, help="error tolerance (default: 1)")
    lq.add_argument("--tolerance", choices=["strict", "inclusive"], default="strict")
    lq.add_argument("--scheme", choices=["red_green", "grayscale"], default="red_green")
    lq.add_argument("--naive", action="store_true", help="one-sided per-point measure")
    lq.add_argument("--csv")
    lq.add_argument("--svg")
    lq.set_defaults(func=cmd_local)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"corank: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
