"""Text serialisation of grid images and modulus tables (SVG and CSV)."""

from __future__ import annotations

import csv
import io
import math

from .scmap import GridImage


def _num(x: float) -> str:
    return f"{x:.15g}"


def grid_to_csv(grid: GridImage) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["line_id", "point_index", "re", "im"])
    for i, line in enumerate(grid.polylines):
        for j, z in enumerate(line):
            w.writerow([i, j, _num(z.real), _num(z.imag)])
    return buf.getvalue()


def grid_to_svg(grid: GridImage, margin: float = 0.05) -> str:
    """Polylines as SVG paths; the y axis is flipped so the picture is upright."""
    pts = [z for line in grid.polylines for z in line]
    if grid.vertices is not None:
        pts.extend(z for z in grid.vertices.points)
    xs = [z.real for z in pts]
    ys = [-z.imag for z in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-12)
    pad = margin * span
    vb = (x0 - pad, y0 - pad, x1 - x0 + 2 * pad, y1 - y0 + 2 * pad)

    def path(zs, closed=False):
        d = " ".join(("M" if k == 0 else "L") + f"{_num(z.real)},{_num(-z.imag)}"
                     for k, z in enumerate(zs))
        return d + (" Z" if closed else "")

    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">'.format(*map(_num, vb)),
        '<g fill="none" stroke="black" stroke-width="1" vector-effect="non-scaling-stroke">',
    ]
    for k, line in enumerate(grid.polylines):
        out.append(f'<path id="line{k}" vector-effect="non-scaling-stroke" d="{path(line)}"/>')
    out.append("</g>")
    if grid.vertices is not None:
        out.append('<path id="polygon" fill="none" stroke="red" stroke-width="1" '
                   f'vector-effect="non-scaling-stroke" d="{path(grid.vertices.points, True)}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def table_to_csv(table, fmt=lambda v: f"{v:.6f}") -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "n", "modulus"])
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            w.writerow([i + 1, j + 1, fmt(float(v))])
    return buf.getvalue()


def json_number(x):
    """15 significant digits; non-finite values become strings."""
    if isinstance(x, complex):
        return {"re": json_number(x.real), "im": json_number(x.imag)}
    if isinstance(x, float):
        if not math.isfinite(x):
            return str(x)
        return float(f"{x:.15g}")
    return x
