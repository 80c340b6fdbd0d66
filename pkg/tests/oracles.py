"""Slow, simple reference computations used only by the tests.

None of these call the library's measurement code; they work from boundary
samples or from the raw formulas, so agreement is a genuine cross-check.
"""
from __future__ import annotations

import itertools
import math

import mpmath
import numpy as np
from scipy import optimize


def brute_diameter(points: np.ndarray, chunk: int = 2048) -> float:
    """Largest pairwise distance by exhaustive comparison."""
    pts = np.asarray(points, dtype=float)
    best = 0.0
    for i in range(0, len(pts), chunk):
        block = pts[i:i + chunk]
        d2 = ((block[:, None, :] - pts[None, :, :]) ** 2).sum(axis=2)
        best = max(best, float(d2.max()))
    return math.sqrt(best)


def refined_diameter(points: np.ndarray, coarse: int = 4000) -> float:
    """Exhaustive on a subsample, then exhaustive between the neighbourhoods
    of the best coarse pairs. Exact whenever the diametral pair lies near
    one of the top coarse pairs, which holds for densely sampled convex
    curves."""
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    step = max(1, n // coarse)
    idx = np.arange(0, n, step)
    sub = pts[idx]
    d2 = ((sub[:, None, :] - sub[None, :, :]) ** 2).sum(axis=2)
    flat = np.argsort(d2, axis=None)[-40:]
    best = 0.0
    for f in flat:
        i, j = np.unravel_index(f, d2.shape)
        wi = pts[np.arange(idx[i] - step, idx[i] + step + 1) % n]
        wj = pts[np.arange(idx[j] - step, idx[j] + step + 1) % n]
        best = max(best, float(((wi[:, None, :] - wj[None, :, :]) ** 2).sum(axis=2).max()))
    return math.sqrt(best)


def triple_enumeration_inradius(thetas: np.ndarray, h: np.ndarray):
    """max t s.t. c·u_k + t <= h_k, by trying every triple of active rows.

    Returns (t, (cx, cy), frozenset of active indices). O(n³) candidates,
    checked for feasibility in order of decreasing t.
    """
    u = np.column_stack([np.cos(thetas), np.sin(thetas), np.ones_like(thetas)])
    tri = np.array(list(itertools.combinations(range(len(h)), 3)))
    mats = u[tri]
    rhs = h[tri]
    det = np.linalg.det(mats)
    good = np.abs(det) > 1e-12
    sol = np.linalg.solve(mats[good], rhs[good][..., None])[..., 0]
    tri = tri[good]
    order = np.argsort(-sol[:, 2])
    slack_tol = 1e-12 * (1.0 + np.abs(h).max())
    for k in order:
        cx, cy, t = sol[k]
        if np.all(u[:, 0] * cx + u[:, 1] * cy + t <= h + slack_tol):
            active = np.flatnonzero(np.abs(u[:, 0] * cx + u[:, 1] * cy + t - h) <= 1e-9)
            return float(t), (float(cx), float(cy)), frozenset(int(a) for a in active)
    raise AssertionError("no feasible triple")


def _inside_polygon(ring: np.ndarray, p) -> bool:
    d = ring - np.asarray(p)
    nxt = np.roll(d, -1, axis=0)
    return bool(np.all(d[:, 0] * nxt[:, 1] - d[:, 1] * nxt[:, 0] >= 0.0))


def grid_inradius(boundary: np.ndarray, grid: int = 60) -> tuple[float, np.ndarray]:
    """Largest distance from an interior point to a dense boundary sample."""
    ring = np.asarray(boundary, dtype=float)

    def depth(p):
        if not _inside_polygon(ring, p):
            return -np.inf
        return float(np.sqrt(((ring - p) ** 2).sum(axis=1)).min())

    lo, hi = ring.min(axis=0), ring.max(axis=0)
    xs = np.linspace(lo[0], hi[0], grid)
    ys = np.linspace(lo[1], hi[1], grid)
    best = max(((depth(np.array([x, y])), (x, y)) for x in xs for y in ys))
    res = optimize.minimize(lambda p: -depth(p), np.array(best[1]), method="Nelder-Mead",
                            options=dict(xatol=1e-10, fatol=1e-12, maxiter=4000))
    return -float(res.fun), res.x


def monte_carlo_area(boundary: np.ndarray, n: int, seed: int) -> tuple[float, float]:
    """Hit-or-miss area estimate and its standard error."""
    ring = np.asarray(boundary, dtype=float)
    lo, hi = ring.min(axis=0), ring.max(axis=0)
    rng = np.random.default_rng(seed)
    p = lo + rng.random((n, 2)) * (hi - lo)
    inside = np.ones(n, dtype=bool)
    nxt = np.roll(ring, -1, axis=0)
    for a, b in zip(ring, nxt):
        inside &= (b[0] - a[0]) * (p[:, 1] - a[1]) - (b[1] - a[1]) * (p[:, 0] - a[0]) >= 0.0
    box = float(np.prod(hi - lo))
    frac = inside.mean()
    return box * frac, box * math.sqrt(frac * (1.0 - frac) / n)


def shoelace(vertices) -> float:
    v = np.asarray(vertices, dtype=float)
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def central_difference(f, x: float, step: float = 1e-5) -> float:
    return (f(x + step) - f(x - step)) / (2.0 * step)


# ---------------------------------------------------------------------------
# high-precision reference for the isosceles nonagon against the slice

def mp_slice_minus_kc(D, dps: int = 60):
    """|K_S(D)| - |K_C(D)| from the raw formulas at ``dps`` digits.

    tau is the root in [2, 3] of the unshifted cubic, found by mpmath's
    solver; the K_C area uses the tau/(tau-2) form directly.
    """
    with mpmath.workdps(dps):
        D = mpmath.mpf(D)

        def cubic(t):
            return -t ** 3 + (D ** 2 / 2 + 5) * t ** 2 - (2 * D ** 2 + 4) * t + D ** 2

        tau = mpmath.findroot(cubic, (mpmath.mpf(2), mpmath.mpf(3)), solver="anderson")
        h1 = mpmath.sqrt(D ** 2 - tau ** 2)
        t2 = mpmath.asin(tau / D)
        eta2 = mpmath.asin(tau / 2 - 1)
        t1 = mpmath.asin(mpmath.cos(t2) / mpmath.tan(eta2))
        kc = tau / (tau - 2) * h1 + D ** 2 / 2 * (t2 - t1)
        ks = mpmath.sqrt(D ** 2 - 4) + D ** 2 / 2 * mpmath.asin(2 / D)
        return ks - kc, tau
