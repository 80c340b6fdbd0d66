"""Support functions sampled on a uniform angle grid."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .. import kernels
from ..errors import DegenerateError, StructuralError
from .body import ArcGon


def angle_grid(n: int) -> np.ndarray:
    return 2.0 * math.pi * np.arange(n) / n


def _check_n(n: int) -> None:
    if n < 64 or n & (n - 1):
        raise ValueError(f"n_angles must be a power of two >= 64, got {n}")


@dataclass(frozen=True, eq=False)
class SupportSamples:
    """h[k] = support value at angle 2*pi*k/n_angles.

    Positivity means the reference origin is interior. The discrete
    convexity test h[k-1] + h[k+1] >= 2 h[k] cos(2pi/n) holds exactly for
    every true support function, so only rounding slack is allowed.
    """

    n_angles: int
    h: np.ndarray

    def __post_init__(self):
        _check_n(self.n_angles)
        h = np.asarray(self.h, dtype=float)
        if h.shape != (self.n_angles,):
            raise ValueError("h must have n_angles entries")
        if not np.all(h > 0.0):
            raise DegenerateError("support values must be positive "
                                  "(origin must be interior)")
        slack = 1e-9 * (1.0 + float(np.abs(h).max()))
        lhs = np.roll(h, 1) + np.roll(h, -1)
        rhs = 2.0 * h * math.cos(2.0 * math.pi / self.n_angles)
        if (lhs < rhs - slack).any():
            k = int(np.argmin(lhs - rhs))
            raise StructuralError(f"samples are not a support function near k={k}")
        h.setflags(write=False)
        object.__setattr__(self, "h", h)

    @property
    def thetas(self) -> np.ndarray:
        return angle_grid(self.n_angles)


def support_values(body: ArcGon, thetas) -> np.ndarray:
    """Exact support of ``body`` at arbitrary angles."""
    return kernels.piece_support(body.packed, np.ascontiguousarray(thetas, dtype=float))


def to_support(body: ArcGon, n_angles: int, center=None) -> SupportSamples:
    """Sample the support function, optionally about ``center``."""
    _check_n(n_angles)
    th = angle_grid(n_angles)
    h = support_values(body, th)
    if center is not None:
        h = h - (center[0] * np.cos(th) + center[1] * np.sin(th))
    return SupportSamples(n_angles, h)


def _sinusoid_points(th, h):
    """Point P_k with P_k.u(th[k]) = h[k] and P_k.u(th[k+1]) = h[k+1]."""
    th1 = np.roll(th, -1)
    h1 = np.roll(h, -1)
    sd = np.sin(th1 - th)
    x = (h * np.sin(th1) - h1 * np.sin(th)) / sd
    y = (h1 * np.cos(th) - h * np.cos(th1)) / sd
    return x, y


def _sinusoid_energy(px, py, a, b):
    """Integral over [a, b] of (h^2 - h'^2) for h = P.u."""
    return (0.5 * (px * px - py * py) * (np.sin(2 * b) - np.sin(2 * a))
            - px * py * (np.cos(2 * b) - np.cos(2 * a)))


_KINK_RATIO = 8.0


def support_area(s: SupportSamples) -> float:
    """Area from 1/2 * integral of (h^2 - h'^2) over the circle.

    h^2 is summed at the nodes and h' is the forward difference, a
    second-order estimate at cell midpoints when h is C^1. A corner of the
    body makes h' jump inside one cell and costs delta * jump^2 * p(1-p)
    there, p being the jump's position in the cell. Such cells are found
    by a spike of the discrete curvature radius against the cells on
    either side; on them h is taken as the larger of the sinusoids fitted
    to the neighbouring cells, which is exact for polygons.
    """
    h = s.h
    n = s.n_angles
    delta = 2.0 * math.pi / n
    th = s.thetas
    h1 = np.roll(h, -1)
    dh = (h1 - h) / delta
    # sum of h^2 at the nodes, written per cell so cells can be replaced
    cell = 0.5 * delta * (0.5 * (h * h + h1 * h1) - dh * dh)

    # discrete radius of curvature at the nodes, clipped at rounding noise
    rho = np.maximum(np.roll(h, 1) + np.roll(h, -1) - 2.0 * math.cos(delta) * h, 0.0)
    inner = rho + np.roll(rho, -1)
    outer = np.roll(rho, 1) + np.roll(rho, -2)
    noise = 1e-12 * float(np.abs(h).max())
    kink = np.flatnonzero(inner > _KINK_RATIO * outer + noise)
    if kink.size:
        px, py = _sinusoid_points(th, h)
        thk = th[kink]
        k0 = (kink - 1) % n
        k1 = (kink + 1) % n
        lx, ly = px[k0], py[k0]
        rx, ry = px[k1], py[k1]
        # the corner normal is where both sinusoids agree
        phi = np.arctan2(rx - lx, -(ry - ly))
        phi = thk + (phi - thk) % math.pi
        ok = phi <= thk + delta
        left = _sinusoid_energy(lx, ly, thk, phi)
        right = _sinusoid_energy(rx, ry, phi, thk + delta)
        cell[kink[ok]] = 0.5 * (left + right)[ok]
    return math.fsum(cell)


def hausdorff(a, b, n_angles: int = 8192) -> float:
    """Hausdorff distance of convex bodies: sup |h_a - h_b| on a grid."""
    th = angle_grid(n_angles)

    def sampled(x):
        if isinstance(x, SupportSamples):
            if x.n_angles != n_angles:
                raise ValueError("support grids differ")
            return x.h
        return support_values(x, th)

    return float(np.abs(sampled(a) - sampled(b)).max())


def support_dominates(outer: ArcGon, inner: ArcGon, n_angles: int = 4096,
                      tol: float = 1e-12) -> bool:
    """True when h_inner <= h_outer (+tol) on the grid, i.e. inner is inside."""
    th = angle_grid(n_angles)
    return bool((support_values(inner, th) <= support_values(outer, th) + tol).all())
