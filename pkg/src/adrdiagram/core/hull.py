"""Convex hulls of points and disks."""
from __future__ import annotations

import math

import numpy as np

from ..errors import DegenerateError
from .body import Arc, ArcGon, Point2, Segment

TWO_PI = 2.0 * math.pi
_MERGE_TOL = 1e-12


def polygon_hull(points) -> np.ndarray:
    """Andrew's monotone chain. CCW vertices, collinear points dropped."""
    pts = np.unique(np.asarray(points, dtype=float).reshape(-1, 2), axis=0)
    if len(pts) < 3:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0.0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(pts[::-1])
    return np.array(lower[:-1] + upper[:-1])


def _envelope_breaks(centers, radii):
    """Normal angles where two support functions c_i·u + r_i may cross."""
    angles = [0.0]
    n = len(radii)
    for i in range(n):
        for j in range(i + 1, n):
            dx, dy = centers[i] - centers[j]
            dist = math.hypot(dx, dy)
            dr = radii[i] - radii[j]
            if dist <= abs(dr):
                continue
            phi = math.atan2(dy, dx)
            off = math.acos(-dr / dist)
            angles.extend([(phi + off) % TWO_PI, (phi - off) % TWO_PI])
    angles = np.unique(np.asarray(angles))
    return angles


def convex_hull(points=(), disks=()) -> ArcGon:
    """Exact hull of points and disks ``((cx, cy), radius)``.

    The support function of the hull is the upper envelope of
    c_i·u + r_i. Pairwise crossing angles cut the circle into intervals,
    each owned by one generator; disks own arcs, and consecutive owners
    are joined by the common tangent segment at the crossing angle.
    """
    pts = [np.asarray(p, dtype=float) for p in points]
    dsk = [(np.asarray(c, dtype=float), float(r)) for c, r in disks]
    if any(r < 0 for _, r in dsk):
        raise ValueError("disk radius must be non-negative")
    if not dsk:
        verts = polygon_hull(pts) if pts else np.empty((0, 2))
        if len(verts) < 3:
            raise DegenerateError("hull of the points has empty interior")
        return ArcGon.from_polygon(verts)
    # prune points swallowed by a disk and points interior to the point hull
    pts = [p for p in pts
           if all(np.hypot(*(p - c)) > r + 1e-15 for c, r in dsk)]
    if len(pts) >= 3:
        pts = list(polygon_hull(pts))
    centers = np.array([c for c, _ in dsk] + pts).reshape(-1, 2)
    radii = np.array([r for _, r in dsk] + [0.0] * len(pts))

    breaks = _envelope_breaks(centers, radii)
    nxt = np.roll(breaks, -1)
    nxt[-1] += TWO_PI
    mids = 0.5 * (breaks + nxt)
    vals = centers @ np.vstack([np.cos(mids), np.sin(mids)]) + radii[:, None]
    owner = np.argmax(vals, axis=0)

    # runs of equal owner: (owner, start angle, end angle)
    runs = []
    for k in range(len(breaks)):
        if runs and runs[-1][0] == owner[k]:
            runs[-1][2] = nxt[k]
        else:
            runs.append([int(owner[k]), breaks[k], nxt[k]])
    if len(runs) > 1 and runs[0][0] == runs[-1][0]:
        runs[0][1] = runs[-1][1] - TWO_PI
        runs.pop()

    if len(runs) == 1:
        i = runs[0][0]
        if radii[i] <= 0.0:
            raise DegenerateError("hull is a single point")
        c = Point2(*centers[i])
        q = math.pi / 2.0
        return ArcGon(tuple(Arc(c, radii[i], k * q, (k + 1) * q) for k in range(4)))

    pieces = []
    for idx, (i, a0, a1) in enumerate(runs):
        c, r = centers[i], radii[i]
        if r > 0.0 and a1 - a0 > _MERGE_TOL:
            pieces.append(Arc(Point2(*c), r, a0, a1))
        j = runs[(idx + 1) % len(runs)][0]
        u = np.array([math.cos(a1), math.sin(a1)])
        p = c + r * u
        q = centers[j] + radii[j] * u
        if math.hypot(*(q - p)) > _MERGE_TOL:
            pieces.append(Segment(Point2(*p), Point2(*q)))
    body = ArcGon(tuple(pieces)) if len(pieces) >= 2 else None
    if body is None or sum(pc.chord_area() for pc in body.pieces) <= 1e-14:
        raise DegenerateError("hull has empty interior")
    return body
