"""Minkowski combinations t·A + (1 - t)·B of convex bodies."""
from __future__ import annotations

import bisect
import math

import numpy as np

from ..errors import DegenerateError
from .body import Arc, ArcGon, Point2, Segment
from .hull import polygon_hull
from .support import angle_grid, support_values

TWO_PI = 2.0 * math.pi
_TINY = 1e-13


def _check_t(t):
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t must lie in [0, 1], got {t}")


def polygon_from_support(thetas: np.ndarray, h: np.ndarray) -> np.ndarray:
    """Vertices of  ∩_k {x·u(θ_k) <= h_k}  for increasing angles in [0, 2π).

    Every half-plane is assumed to touch the body (h is a true support
    function), so the vertices are the crossings of consecutive lines.
    """
    th1 = np.roll(thetas, -1)
    h1 = np.roll(h, -1)
    sd = np.sin(th1 - thetas)
    x = (h * np.sin(th1) - h1 * np.sin(thetas)) / sd
    y = (h1 * np.cos(thetas) - h * np.cos(th1)) / sd
    return polygon_hull(np.column_stack([x, y]))


def _segment_normals(body):
    return [pc.normal_start % TWO_PI for pc in body.pieces if isinstance(pc, Segment)]


def _support_angles(n_angles, extra):
    """Uniform grid plus ``extra`` angles; grid nodes crowding them are dropped."""
    grid = angle_grid(n_angles)
    extra = np.unique(np.asarray(extra, dtype=float))
    if extra.size:
        gap = np.abs((grid[:, None] - extra[None, :] + math.pi) % TWO_PI - math.pi)
        grid = grid[gap.min(axis=1) > 1e-7]
    return np.sort(np.concatenate([grid, extra]))


def minkowski_interpolate(a: ArcGon, b: ArcGon, t: float,
                          n_angles: int = 4096) -> ArcGon:
    """Polygonal t·a + (1-t)·b from the combined support function.

    Flat sides of the combination can only have the normal of a flat side
    of ``a`` or ``b``, so those normals join the uniform grid. The
    polygon then circumscribes the true combination within about
    R·(π/n)²/2 in Hausdorff distance, R being the largest radius of
    curvature.
    """
    _check_t(t)
    th = _support_angles(n_angles, _segment_normals(a) + _segment_normals(b))
    h = t * support_values(a, th) + (1.0 - t) * support_values(b, th)
    verts = polygon_from_support(th, h)
    if len(verts) < 3:
        raise DegenerateError("combined support reconstructs to < 3 vertices")
    return ArcGon.from_polygon(verts)


# ---------------------------------------------------------------------------
# exact combination


def _normal_map(body: ArcGon):
    """Cover of the normal circle by features (start, end, center, radius).

    Arcs map to their own angular range; each corner maps to the cone of
    normals between its two neighbours with radius zero. Segments own a
    single normal and contribute only a breakpoint.
    """
    feats = []
    m = len(body.pieces)
    for i, pc in enumerate(body.pieces):
        if isinstance(pc, Arc):
            feats.append((pc.angle_start, pc.angle_end, pc.center, pc.radius))
        nxt = body.pieces[(i + 1) % m]
        a0 = pc.normal_end
        jump = (nxt.normal_start - a0) % TWO_PI
        if _TINY < jump < TWO_PI - _TINY:
            feats.append((a0, a0 + jump, pc.end_point, 0.0))
    starts = [f[0] % TWO_PI for f in feats]
    order = np.argsort(starts)
    return [starts[k] for k in order], [feats[k] for k in order]


def _feature_at(starts, feats, theta):
    k = bisect.bisect_right(starts, theta) - 1
    return feats[k]  # k = -1 wraps to the last feature


def minkowski_combination(a: ArcGon, b: ArcGon, t: float) -> ArcGon:
    """Exact t·a + (1-t)·b as an arcgon.

    Both normal maps are merged; on each common interval the combination
    is supported by the feature with centre t·c_a + (1-t)·c_b and radius
    t·R_a + (1-t)·R_b. Jumps of that point across a breakpoint become
    segments.
    """
    _check_t(t)
    if t == 1.0:
        return a
    if t == 0.0:
        return b
    sa, fa = _normal_map(a)
    sb, fb = _normal_map(b)
    breaks = np.unique(np.concatenate([sa, sb]) % TWO_PI)
    nxt = np.roll(breaks, -1)
    nxt[-1] += TWO_PI
    feats = []
    for lo, hi in zip(breaks, nxt):
        if hi - lo <= _TINY:
            continue
        mid = 0.5 * (lo + hi) % TWO_PI
        _, _, ca, ra = _feature_at(sa, fa, mid)
        _, _, cb, rb = _feature_at(sb, fb, mid)
        c = (t * ca[0] + (1.0 - t) * cb[0], t * ca[1] + (1.0 - t) * cb[1])
        feats.append((lo, hi, c, t * ra + (1.0 - t) * rb))

    # merge neighbours that carry the same circle
    merged = []
    for f in feats:
        if merged:
            p = merged[-1]
            if (abs(p[2][0] - f[2][0]) <= _TINY and abs(p[2][1] - f[2][1]) <= _TINY
                    and abs(p[3] - f[3]) <= _TINY):
                merged[-1] = (p[0], f[1], p[2], p[3])
                continue
        merged.append(f)
    if len(merged) > 1:
        p, f = merged[-1], merged[0]
        if (abs(p[2][0] - f[2][0]) <= _TINY and abs(p[2][1] - f[2][1]) <= _TINY
                and abs(p[3] - f[3]) <= _TINY):
            merged[0] = (p[0] - TWO_PI, f[1], f[2], f[3])
            merged.pop()
    if len(merged) == 1:
        _, _, c, r = merged[0]
        if r <= _TINY:
            raise DegenerateError("combination is a point")
        q = math.pi / 2.0
        return ArcGon(tuple(Arc(Point2(*c), r, k * q, (k + 1) * q) for k in range(4)))

    pieces = []
    for i, (lo, hi, c, r) in enumerate(merged):
        if r > _TINY and hi - lo > _TINY:
            pieces.append(Arc(Point2(*c), r, lo, hi))
        _, _, c2, r2 = merged[(i + 1) % len(merged)]
        u = (math.cos(hi), math.sin(hi))
        p = (c[0] + r * u[0], c[1] + r * u[1])
        q = (c2[0] + r2 * u[0], c2[1] + r2 * u[1])
        if math.hypot(q[0] - p[0], q[1] - p[1]) > _TINY:
            pieces.append(Segment(Point2(*p), Point2(*q)))
    if len(pieces) < 2:
        raise DegenerateError("combination has empty interior")
    return ArcGon(tuple(pieces))
