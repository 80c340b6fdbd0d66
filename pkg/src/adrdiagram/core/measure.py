"""Area, diameter and inradius of arcgons."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .. import kernels
from ..errors import DegenerateError, StructuralError
from .body import ArcGon, Point2, Segment, area
from .support import SupportSamples, angle_grid

DEFAULT_ANGLES = 4096
# polishing brackets examined per diameter call
_MAX_CANDIDATES = 8
_GOLDEN_ITERS = 64


def _check_n(n):
    if n < 64 or n & (n - 1):
        raise ValueError(f"n_angles must be a power of two >= 64, got {n}")


def width_function(body: ArcGon, thetas) -> np.ndarray:
    th = np.asarray(thetas, dtype=float)
    h = kernels.piece_support(body.packed, np.concatenate([th, th + math.pi]))
    return h[: th.size] + h[th.size:]


def diameter_with_angle(body: ArcGon, n_angles: int = DEFAULT_ANGLES):
    """Diameter and the direction attaining it.

    The width h(θ) + h(θ + π) is maximised on the grid first. Any true
    maximiser sits within half a cell of a grid node whose width is at
    most D·δ below the maximum (the width is D-Lipschitz), so every local
    grid maximum above that level gets a golden-section polish on the
    exact width over its two neighbouring cells.
    """
    _check_n(n_angles)
    half = n_angles // 2
    th = angle_grid(n_angles)[:half]
    w = width_function(body, th)
    delta = 2.0 * math.pi / n_angles
    k_best = int(np.argmax(w))
    w_best = float(w[k_best])
    wl, wr = np.roll(w, 1), np.roll(w, -1)
    # the width has period pi, so the wrap at index 0 is legitimate
    peak = (w >= wl) & (w >= wr) & (w >= w_best - 1.01 * w_best * delta)
    cand = np.flatnonzero(peak)
    if cand.size > _MAX_CANDIDATES:
        cand = cand[np.argsort(w[cand])[::-1][:_MAX_CANDIDATES]]
    if cand.size == 0:
        cand = np.array([k_best])
    lo = th[cand] - delta
    hi = th[cand] + delta
    ang, val = kernels.golden_width(body.packed, np.ascontiguousarray(lo),
                                    np.ascontiguousarray(hi), _GOLDEN_ITERS)
    j = int(np.argmax(val))
    if val[j] >= w_best:
        return float(val[j]), float(ang[j] % math.pi)
    return w_best, float(th[k_best])


def diameter(body: ArcGon, n_angles: int = DEFAULT_ANGLES) -> float:
    return diameter_with_angle(body, n_angles)[0]


def calipers_diameter(vertices) -> float:
    """Rotating-calipers diameter of a convex polygon (CCW vertices)."""
    p = np.asarray(vertices, dtype=float)
    n = len(p)
    if n < 2:
        return 0.0
    if n == 2:
        return float(np.hypot(*(p[1] - p[0])))

    def tri_area2(a, b, c):
        return abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))

    best = 0.0
    j = 1
    for i in range(n):
        a, b = p[i], p[(i + 1) % n]
        while tri_area2(a, b, p[(j + 1) % n]) > tri_area2(a, b, p[j]):
            j = (j + 1) % n
        best = max(best, float(np.hypot(*(p[j] - a))), float(np.hypot(*(p[j] - b))))
    return best


# ---------------------------------------------------------------------------
# inradius


def _initial_basis(thetas):
    """Three constraints whose normals positively span the plane."""
    targets = np.array([0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0])
    diff = np.abs((thetas[None, :] - targets[:, None] + math.pi)
                  % (2.0 * math.pi) - math.pi)
    basis = np.argmin(diff, axis=1).astype(np.int64)
    if diff[np.arange(3), basis].max() > math.pi / 6.0:
        raise ValueError("constraint angles do not cover the circle")
    return basis


@dataclass(frozen=True)
class ChebyshevResult:
    radius: float
    center: Point2
    active: tuple  # indices of the three basic constraints
    iterations: int


def chebyshev_center(thetas, h, tol: float = 1e-13) -> ChebyshevResult:
    """Largest disk inside the half-planes x·u(θ_k) <= h_k."""
    th = np.ascontiguousarray(thetas, dtype=float)
    hv = np.ascontiguousarray(h, dtype=float)
    ux, uy = np.cos(th), np.sin(th)
    scale = max(1.0, float(np.abs(hv).max()))
    cx, cy, t, basis, status, it = kernels.chebyshev_lp(
        ux, uy, hv, _initial_basis(th), tol * scale, 50 * th.size + 100)
    if status == 1:
        raise DegenerateError("Chebyshev LP unbounded")
    if status == 2:
        raise StructuralError("Chebyshev LP hit its iteration cap")
    return ChebyshevResult(float(t), Point2(float(cx), float(cy)),
                           tuple(int(b) for b in basis), int(it))


def samples_inradius(s: SupportSamples) -> ChebyshevResult:
    """Inradius of the polygon cut out by a sampled support function."""
    return chebyshev_center(s.thetas, s.h)


def _segment_normals(body):
    return np.array([pc.normal_start for pc in body.pieces
                     if isinstance(pc, Segment)], dtype=float)


def inradius(body: ArcGon, n_angles: int = DEFAULT_ANGLES):
    """Return ``(r, incenter)``.

    The LP runs on the grid angles plus every segment normal, which is
    already exact for polygons. Arcs are handled by cutting planes: the
    exact boundary distance from the current centre names the contact
    normals, those angles join the constraint set, and the LP is solved
    again until its value and the exact distance agree.
    """
    _check_n(n_angles)
    pk = body.packed
    th = np.concatenate([angle_grid(n_angles),
                         _segment_normals(body) % (2.0 * math.pi)])
    h = kernels.piece_support(pk, th)
    scale = max(1.0, float(np.abs(h).max()))
    best_r, best_c = -math.inf, None
    for _ in range(12):
        res = chebyshev_center(th, h)
        if res.radius <= 0.0:
            raise DegenerateError("body has empty interior")
        dist, normals = kernels.piece_distances(pk, res.center.x, res.center.y)
        r_exact = float(dist.min())
        if r_exact > best_r:
            best_r, best_c = r_exact, res.center
        if res.radius - best_r <= 1e-13 * scale:
            break
        near = normals[dist <= r_exact + (res.radius - r_exact)] % (2.0 * math.pi)
        h_new = kernels.piece_support(pk, np.ascontiguousarray(near))
        th = np.concatenate([th, near])
        h = np.concatenate([h, h_new])
    return best_r, best_c


@dataclass(frozen=True)
class BodyMetrics:
    area: float
    diameter: float
    inradius: float
    x: float
    y: float

    @classmethod
    def from_measures(cls, a: float, d: float, r: float) -> "BodyMetrics":
        if not (a > 0 and d > 0 and r > 0):
            raise DegenerateError(f"invalid measures A={a}, D={d}, r={r}")
        return cls(a, d, r, 2.0 * r / d, math.pi * r * r / a)

    def check(self, tol: float = 1e-9) -> None:
        if not (0.0 < self.x <= 1.0 + tol and 0.0 < self.y <= 1.0 + tol):
            raise StructuralError(f"diagram point ({self.x}, {self.y}) outside (0,1]^2")


def measure(body: ArcGon, n_angles: int = DEFAULT_ANGLES) -> BodyMetrics:
    r, _ = inradius(body, n_angles)
    return BodyMetrics.from_measures(area(body), diameter(body, n_angles), r)
