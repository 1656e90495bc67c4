"""Text ingestion and CSV / PGM / SVG writers."""

import re

import numpy as np

from corank._validate import as_points
from corank.errors import InputError

_SPLIT = re.compile(r"[,\s]+")
SYMMETRY_TOL = 1e-9


def _read_table(path):
    rows, width = [], None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = [f for f in _SPLIT.split(line) if f]
            try:
                row = [float(f) for f in fields]
            except ValueError:
                raise InputError(f"{path}:{lineno}: non-numeric field in {line!r}") from None
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise InputError(f"{path}:{lineno}: expected {width} fields, got {len(row)}")
            rows.append(row)
    if not rows:
        raise InputError(f"{path}: no data rows")
    return np.array(rows, dtype=float)


def read_points(path):
    x = _read_table(path)
    if x.shape[0] < 2:
        raise InputError(f"{path}: need at least 2 points, got {x.shape[0]}")
    return as_points(x)


def read_distance_matrix(path):
    """Read a square distance matrix, tolerating float noise in the symmetry."""
    d = _read_table(path)
    if d.shape[0] != d.shape[1]:
        raise InputError(f"{path}: distance matrix is {d.shape[0]}x{d.shape[1]}, not square")
    if d.shape[0] < 2:
        raise InputError(f"{path}: need at least 2 points")
    if not np.all(np.isfinite(d)):
        raise InputError(f"{path}: non-finite entries")
    if np.any(d < 0):
        i, j = np.argwhere(d < 0)[0]
        raise InputError(f"{path}: negative distance at row {i + 1}, column {j + 1}")
    if np.max(np.abs(np.diagonal(d))) > SYMMETRY_TOL:
        raise InputError(f"{path}: diagonal is not zero")
    if np.max(np.abs(d - d.T)) > SYMMETRY_TOL:
        raise InputError(f"{path}: matrix is not symmetric within {SYMMETRY_TOL}")
    d = (d + d.T) / 2
    np.fill_diagonal(d, 0.0)
    return d


def _fmt_row(row):
    return ",".join(map(repr, row))


def write_matrix_csv(matrix, path, header=None):
    """Write a 1-D or 2-D array as CSV with round-trippable numbers."""
    m = np.asarray(matrix)
    if m.ndim == 1:
        m = m[:, None]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        if header:
            fh.write(",".join(header) + "\n")
        for row in m.tolist():
            fh.write(_fmt_row(row) + "\n")


write_points = write_matrix_csv


def pgm_pixels(matrix):
    """Gray levels with zero as white and the maximum entry as black."""
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2:
        raise InputError("heatmap needs a 2-D matrix")
    if np.any(m < 0) or not np.all(np.isfinite(m)):
        raise InputError("heatmap values must be finite and non-negative")
    vmax = m.max() if m.size else 0.0
    if vmax == 0:
        return np.full(m.shape, 255, dtype=np.uint8)
    return np.floor(255.0 * (1.0 - m / vmax) + 0.5).astype(np.uint8)


def write_pgm(matrix, path):
    """Binary P5 grayscale image, one pixel per matrix entry."""
    px = pgm_pixels(matrix)
    with open(path, "wb") as fh:
        fh.write(f"P5\n{px.shape[1]} {px.shape[0]}\n255\n".encode("ascii"))
        fh.write(np.ascontiguousarray(px).tobytes())


def read_pgm(path):
    with open(path, "rb") as fh:
        data = fh.read()
    tokens, pos = [], 0
    while len(tokens) < 4:
        while data[pos:pos + 1].isspace():
            pos += 1
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        tokens.append(data[start:pos])
    if tokens[0] != b"P5":
        raise InputError(f"{path}: not a binary PGM")
    width, height = int(tokens[1]), int(tokens[2])
    pos += 1  # single whitespace byte ends the header
    return np.frombuffer(data[pos:pos + width * height], dtype=np.uint8).reshape(height, width)


def write_svg_scatter(points2d, colors, path, radius=3, size=1000):
    """Scatter plot with one filled circle per point.

    Coordinates are min-max scaled into a ``size`` x ``size`` view box, with
    the y axis pointing up.
    """
    p = np.asarray(points2d, dtype=float)
    if p.ndim == 1:
        p = p[:, None]
    if p.shape[1] == 1:
        p = np.column_stack([p[:, 0], np.zeros(len(p))])
    if p.shape[1] != 2:
        raise InputError(f"SVG scatter needs 1-D or 2-D points, got {p.shape[1]}-D")
    c = np.asarray(colors)
    if c.shape != (len(p), 3):
        raise InputError(f"need one RGB triple per point: {len(p)} points, colors {c.shape}")
    lo, span = p.min(axis=0), np.ptp(p, axis=0)
    span[span == 0] = 1.0
    margin = 2 * radius
    scaled = margin + (p - lo) / span * (size - 2 * margin)
    scaled[:, 1] = size - scaled[:, 1]
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" '
        f'width="{size}" height="{size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for (x, y), (r, g, b) in zip(scaled.tolist(), c.tolist()):
        lines.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{radius}" fill="rgb({r},{g},{b})"/>')
    lines.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_local_csv(values, colors, path):
    """Per-point table: index, raw value, r, g, b."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("index,value,r,g,b\n")
        for i, (v, (r, g, b)) in enumerate(zip(np.asarray(values).tolist(), np.asarray(colors).tolist())):
            fh.write(f"{i},{v!r},{r},{g},{b}\n")
