"""SVG rendering of a rank-2 divisor: one panel per polyhedral coefficient.

Each panel shows the lattice around the coefficient, the shaded region
(convex hull of the vertices plus the recession cone, clipped to the view
window), coordinate axes and a caption naming the support points.  Output
is a plain UTF-8 SVG string built deterministically, so equal inputs give
byte-identical files.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import ceil, floor

from .convexq import extreme_rays, primitive
from .ppdivisor import PPDivisor

PANEL_W = 260
PANEL_H = 280
PLOT_H = 230
MARGIN = 18


class UnsupportedRank(ValueError):
    """Figures are only drawn for rank-2 lattices."""


def render_figure(dv: PPDivisor, path=None) -> str:
    """Render the divisor as SVG; write to `path` when given.

    Raises UnsupportedRank unless the divisor's lattice rank is 2.
    """
    if dv.lattice_rank != 2:
        raise UnsupportedRank(f"can only draw rank-2 polyhedra, got rank {dv.lattice_rank}")
    panels = []
    for i, (poly, sup) in enumerate(dv.terms):
        panels.append(_panel(i, poly, sup, dv))
    width = 3 * PANEL_W
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{PANEL_H}" '
        f'viewBox="0 0 {width} {PANEL_H}">',
    ]
    parts.extend(panels)
    parts.append("</svg>")
    svg = "\n".join(parts) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return svg


def _panel(index: int, poly, sup, dv: PPDivisor) -> str:
    xs = [v[0] for v in poly.vertices] + [Fraction(0)]
    ys = [v[1] for v in poly.vertices] + [Fraction(0)]
    xmin = floor(min(xs)) - 1
    ymin = floor(min(ys)) - 1
    xmax = max(ceil(max(xs)) + 2, xmin + 4)
    ymax = max(ceil(max(ys)) + 2, ymin + 4)
    ox = index * PANEL_W + MARGIN
    scale = min(
        Fraction(PANEL_W - 2 * MARGIN, xmax - xmin),
        Fraction(PLOT_H - 2 * MARGIN, ymax - ymin),
    )

    def to_px(pt):
        px = ox + (Fraction(pt[0]) - xmin) * scale
        py = MARGIN + (ymax - Fraction(pt[1])) * scale
        return float(px), float(py)

    body = []
    region = _clipped_region(poly, xmin, xmax, ymin, ymax)
    if region:
        pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in (to_px(p) for p in region))
        body.append(f'<polygon points="{pts}" fill="#d8d8d8" stroke="#707070" stroke-width="0.8"/>')
    for gx in range(xmin, xmax + 1):
        for gy in range(ymin, ymax + 1):
            x, y = to_px((gx, gy))
            body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="1.1" fill="#b0b0b0"/>')
    x0, y0 = to_px((xmin, 0)) if ymin <= 0 <= ymax else (None, None)
    if x0 is not None:
        x1, _ = to_px((xmax, 0))
        body.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y0:.2f}" stroke="#303030" stroke-width="1"/>')
    if xmin <= 0 <= xmax:
        xa, ya = to_px((0, ymin))
        _, yb = to_px((0, ymax))
        body.append(f'<line x1="{xa:.2f}" y1="{ya:.2f}" x2="{xa:.2f}" y2="{yb:.2f}" stroke="#303030" stroke-width="1"/>')
    for v in poly.vertices:
        x, y = to_px(v)
        body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.6" fill="#101010"/>')
    caption = _caption(index, sup)
    body.append(
        f'<text x="{ox:.2f}" y="{PLOT_H + 20}" font-size="11" font-family="monospace">{_escape(caption)}</text>'
    )
    label = f"Δ{index}"
    body.append(
        f'<text x="{ox:.2f}" y="{MARGIN - 4}" font-size="12" font-family="monospace">{_escape(label)}</text>'
    )
    return f'<g id="panel-{index}">\n' + "\n".join(body) + "\n</g>"


def _caption(index: int, sup) -> str:
    if sup.p1_model is not None:
        pts = ", ".join(p.display() for p in sup.p1_model)
    else:
        pts = ", ".join(p.display() for p in sup.points)
    return f"D{index} = {{{pts}}}"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _clipped_region(poly, xmin, xmax, ymin, ymax):
    """Vertices (hull order) of (conv(V) + recession) clipped to the window.

    The polyhedron is homogenised to a pointed cone in Q^3 whose facet
    normals give exact halfplane constraints; adding the four window
    constraints, the clipped region's corners are the feasible pairwise
    line intersections.
    """
    generators = [primitive((v[0], v[1], 1)) for v in poly.vertices]
    generators += [(r[0], r[1], 0) for r in poly.recession.rays]
    facets = extreme_rays(generators, 3)  # (a, b, c): a x + b y + c >= 0
    window = [
        (1, 0, -xmin),
        (-1, 0, xmax),
        (0, 1, -ymin),
        (0, -1, ymax),
    ]
    cons = list(facets) + window
    corners = set()
    for (a1, b1, c1), (a2, b2, c2) in combinations(cons, 2):
        det = a1 * b2 - a2 * b1
        if det == 0:
            continue
        x = Fraction(-c1 * b2 + c2 * b1, det)
        y = Fraction(a2 * c1 - a1 * c2, det)
        if all(a * x + b * y + c >= 0 for a, b, c in cons):
            corners.add((x, y))
    return _hull_order(list(corners))


def _hull_order(points):
    """Convex polygon ordering (monotone chain); input points are all extreme."""
    if len(points) <= 2:
        return sorted(points)
    pts = sorted(points)

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
