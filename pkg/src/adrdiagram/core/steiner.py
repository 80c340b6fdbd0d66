"""Steiner symmetrization of convex polygons."""
from __future__ import annotations

import math

import numpy as np

from .body import Polygon
from .hull import polygon_hull


def _chord_extent(xy: np.ndarray, xs: np.ndarray):
    """Lowest and highest y of the polygon on each vertical line x = xs[i]."""
    p = xy
    q = np.roll(xy, -1, axis=0)
    lo = np.full(xs.size, np.inf)
    hi = np.full(xs.size, -np.inf)
    for (x0, y0), (x1, y1) in zip(p, q):
        a, b = min(x0, x1), max(x0, x1)
        on = (xs >= a) & (xs <= b)
        if not on.any():
            continue
        if x1 == x0:
            ys_lo = np.full(on.sum(), min(y0, y1))
            ys_hi = np.full(on.sum(), max(y0, y1))
        else:
            s = (xs[on] - x0) / (x1 - x0)
            ys_lo = ys_hi = y0 + s * (y1 - y0)
        lo[on] = np.minimum(lo[on], ys_lo)
        hi[on] = np.maximum(hi[on], ys_hi)
    return lo, hi


def steiner_symmetrize(body: Polygon, axis_angle: float) -> Polygon:
    """Symmetrize about the line through the origin at ``axis_angle``.

    In the frame where the axis is horizontal every vertical chord is
    moved to be centred on the axis. Chord length is linear between vertex
    abscissae, so slicing there and joining the half-lengths is exact.
    """
    c, s = math.cos(axis_angle), math.sin(axis_angle)
    xy = body.as_array()
    # rotate by -axis_angle: axis -> x-axis
    loc = np.column_stack([c * xy[:, 0] + s * xy[:, 1], -s * xy[:, 0] + c * xy[:, 1]])
    scale = max(1.0, float(np.abs(loc).max()))
    tol = 1e-13 * scale
    xs = np.unique(loc[:, 0])
    # mirror-image vertices land on abscissae a few ulps apart
    xs = xs[np.concatenate([[True], np.diff(xs) > tol])]
    lo, hi = _chord_extent(loc, xs)
    half = 0.5 * np.maximum(hi - lo, 0.0)
    # endpoint chords of zero length come back as ~1e-17 from rounding
    half[half <= tol] = 0.0
    ring = np.vstack([np.column_stack([xs, -half]), np.column_stack([xs, half])])
    ring = polygon_hull(ring)
    out = np.column_stack([c * ring[:, 0] - s * ring[:, 1], s * ring[:, 0] + c * ring[:, 1]])
    return Polygon(tuple(map(tuple, out)))
