"""CSV and SVG output for diagram points."""
from __future__ import annotations

import math

import numpy as np

from .diagram import DiagramPoint, y_lower, y_upper

SIZE = 1000
MARGIN = 60
CURVE_SAMPLES = 512


def to_csv(points: list[DiagramPoint]) -> str:
    lines = ["x,y,witness"]
    lines += [f"{p.x:.17g},{p.y:.17g},{p.witness}" for p in points]
    return "\n".join(lines) + "\n"


def _px(x: float, y: float) -> tuple[float, float]:
    span = SIZE - 2 * MARGIN
    return MARGIN + x * span, SIZE - MARGIN - y * span


def _polyline(xs, ys, **attrs) -> str:
    pts = " ".join("{:.3f},{:.3f}".format(*_px(x, y)) for x, y in zip(xs, ys))
    extra = " ".join(f'{k.rstrip("_").replace("_", "-")}="{v}"' for k, v in attrs.items())
    return f'<polyline points="{pts}" fill="none" {extra}/>'


def to_svg(points: list[DiagramPoint]) -> str:
    xs = np.linspace(0.0, 1.0, CURVE_SAMPLES)
    upper = [y_upper(float(x)) for x in xs]
    lower = [y_lower(float(x)) for x in xs]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        '<rect width="100%" height="100%" fill="white"/>',
        '<rect x="{0}" y="{0}" width="{1}" height="{1}" fill="none" stroke="#888"/>'
        .format(MARGIN, SIZE - 2 * MARGIN),
        _polyline(xs, upper, stroke="#1f4e9c", stroke_width=2, class_="curve-upper"),
        _polyline(xs, lower, stroke="#a12a2a", stroke_width=2, class_="curve-lower"),
        _polyline(xs, xs * xs, stroke="#444", stroke_dasharray="2,5",
                  class_="comparator"),
        _polyline(xs, 0.25 * math.pi * xs, stroke="#444", stroke_dasharray="2,5",
                  class_="comparator"),
    ]
    for p in points:
        cx, cy = _px(p.x, p.y)
        out.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="2" fill="#222"/>')
    for v in (0.0, 0.5, 1.0):
        x0, y0 = _px(v, 0.0)
        out.append(f'<text x="{x0:.1f}" y="{y0 + 20:.1f}" font-size="14" '
                   f'text-anchor="middle">{v:g}</text>')
        x0, y0 = _px(0.0, v)
        out.append(f'<text x="{x0 - 10:.1f}" y="{y0 + 5:.1f}" font-size="14" '
                   f'text-anchor="end">{v:g}</text>')
    out.append(f'<text x="{SIZE / 2:.0f}" y="{SIZE - 15}" font-size="16" '
               'text-anchor="middle">x = 2r/D</text>')
    out.append(f'<text x="20" y="{SIZE / 2:.0f}" font-size="16" '
               f'transform="rotate(-90 20 {SIZE / 2:.0f})" '
               'text-anchor="middle">y = &#960;r&#178;/A</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
