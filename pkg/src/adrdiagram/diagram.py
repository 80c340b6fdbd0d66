"""Bound curves of the (A, D, r) diagram and a self-certifying sampler.

Diagram coordinates are x = 2r/D and y = πr²/A. At fixed (D, r) the
smallest area is the two-cap body (top curve y⁺) and the largest is the
slice or the equilateral nonagon (bottom curve y⁻), switching at D*.
Every vertical segment between the curves is filled by a continuous
family of bodies with the same D and r:

* x <= 2/D*: the Minkowski combinations of the two-cap body and the slice;
* x >= 2/D*: the nonagon shrunk onto the hull of a diametral chord and
  the incircle, after which the chord slides until it is centred on the
  incircle, ending at the two-cap body.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .core.body import ArcGon, dumps
from .core.hull import convex_hull
from .core.measure import measure
from .core.minkowski import minkowski_combination
from .core.support import support_dominates
from .errors import CertificationError, DegenerateError, DomainError
from .roots import bisect
from .shapes import (SQRT3, d_star, nonagon_E, nonagon_E_area, slice_area,
                     slice_body, two_cap_body)

ANALYTIC_TOL = 1e-9
MEASURED_TOL = 1e-6
PATH_SAMPLES = 256
WORKERS_ENV = "ADRDIAGRAM_WORKERS"


def _check_x(x: float) -> None:
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x}")


def y_upper(x: float) -> float:
    """Top boundary: the two-cap body."""
    _check_x(x)
    if x == 0.0:
        return 0.0
    return math.pi * x / (x * (math.pi - 2.0 * math.acos(x)) + 2.0 * math.sqrt(1.0 - x * x))


def _y_lower_slice(x: float) -> float:
    return math.pi * x * x / (2.0 * x * math.sqrt(1.0 - x * x) + 2.0 * math.asin(x))


def _y_lower_nonagon(x: float) -> float:
    den = (2.0 * math.pi - 6.0 * math.acos(0.5 * SQRT3 * x)
           + 1.5 * SQRT3 * x * (math.sqrt(4.0 - 3.0 * x * x) - x))
    return math.pi * x * x / den


@lru_cache(maxsize=1)
def x_star() -> float:
    return 2.0 / d_star()


@lru_cache(maxsize=1)
def lower_branch_gap() -> float:
    """|difference| of the two lower-curve branches at x*."""
    xs = x_star()
    gap = abs(_y_lower_slice(xs) - _y_lower_nonagon(xs))
    if gap > ANALYTIC_TOL:
        raise CertificationError(f"lower curve jumps by {gap:.3g} at x*={xs}")
    return gap


def y_lower(x: float) -> float:
    """Bottom boundary: the slice left of x*, the nonagon right of it."""
    _check_x(x)
    if x == 0.0:
        return 0.0
    lower_branch_gap()
    return _y_lower_slice(x) if x <= x_star() else _y_lower_nonagon(x)


def psi(D: float, r: float) -> float:
    """Largest area of a convex body with diameter D and inradius r."""
    if not (r > 0.0 and D >= 2.0 * r):
        raise DomainError(f"psi needs D >= 2r > 0 (D={D}, r={r})")
    q = D / r
    if q <= d_star():
        val = (1.5 * SQRT3 * r * (math.sqrt(D * D - 3.0 * r * r) - r)
               + 1.5 * D * D * (math.pi / 3.0 - math.acos(SQRT3 * r / D)))
        ref = r * r * nonagon_E_area(q)
    else:
        val = r * math.sqrt(D * D - 4.0 * r * r) + 0.5 * D * D * math.asin(2.0 * r / D)
        ref = r * r * slice_area(q)
    if abs(val - ref) > 1e-12 * max(1.0, ref):
        raise CertificationError(f"psi({D}, {r}) disagrees with the scaled area")
    return val


@dataclass(frozen=True)
class DiagramPoint:
    x: float
    y: float
    witness: str

    @property
    def analytic(self) -> bool:
        return "(" not in self.witness


def classical_bounds_ok(p: DiagramPoint, eps: float = ANALYTIC_TOL) -> bool:
    """4A <= πD² (y >= x²) and A <= 2rD (y >= πx/4)."""
    return p.y >= p.x * p.x - eps and p.y >= 0.25 * math.pi * p.x - eps


def in_band(x: float, y: float, eps: float) -> bool:
    return y_lower(x) - eps <= y <= y_upper(x) + eps


def lower_curve_dominance(n: int = 10_000, eps: float = 1e-9):
    """Grid points where y⁻ falls below max(x², πx/4) - eps.

    Returned as a list of (x, shortfall) so callers can report instead of
    fail.
    """
    out = []
    for x in np.linspace(1.0 / n, 1.0, n):
        short = max(x * x, 0.25 * math.pi * x) - y_lower(float(x))
        if short > eps:
            out.append((float(x), float(short)))
    return out


# ---------------------------------------------------------------------------
# random bodies


def random_convex_body(seed: int, n_points: int = 12, retries: int = 100) -> ArcGon:
    """Hull of ``n_points`` uniform points in the unit square."""
    if n_points < 3:
        raise ValueError("n_points must be at least 3")
    rng = np.random.default_rng(seed)
    for _ in range(retries):
        pts = rng.random((n_points, 2))
        try:
            body = convex_hull(pts)
        except DegenerateError:
            continue
        if body.area() > 1e-12:
            return body
    raise DegenerateError(f"seed {seed}: no non-degenerate hull in {retries} tries")


# ---------------------------------------------------------------------------
# filling paths at fixed D (r = 1); parameter u in [0, 1], u = 0 is the
# largest body and u = 1 the two-cap body


class MinkowskiPath:
    kind = "MinkowskiPath"

    def __init__(self, D: float):
        self.D = D
        self.big = slice_body(D)
        self.small = two_cap_body(1.0, D)

    def body(self, u: float) -> ArcGon:
        return minkowski_combination(self.big, self.small, 1.0 - u)

    def tag(self, u: float) -> str:
        return f"MinkowskiPath({1.0 - u:.17g})"


class ShrinkPath:
    """First half: Minkowski shrink of the nonagon onto hull(A, B, disk)
    for its diametral chord [A1, M1]. Second half: the chord translates
    towards the incentre until its midpoint reaches it.

    During the translation the chord keeps length D, and its line stays
    within distance 1 of the incentre, so the hull has width 2 across the
    chord and inradius exactly 1. |A(s)| is convex in s and equals at most
    D - 1 at both ends, which keeps the diameter at D.
    """

    kind = "ShrinkPath"

    def __init__(self, D: float):
        self.D = D
        params, self.big = nonagon_E(D)
        self.a = np.array(params.A[0])
        self.b = np.array(params.M[0])
        self.mid = 0.5 * (self.a + self.b)
        self.chord_hull = convex_hull([self.a, self.b], [((0.0, 0.0), 1.0)])

    def body(self, u: float) -> ArcGon:
        if u <= 0.5:
            return minkowski_combination(self.big, self.chord_hull, 1.0 - 2.0 * u)
        s = 2.0 * u - 1.0
        shift = s * self.mid
        return convex_hull([self.a - shift, self.b - shift], [((0.0, 0.0), 1.0)])

    def tag(self, u: float) -> str:
        return f"ShrinkPath({u:.17g})"


def path_for(D: float):
    return MinkowskiPath(D) if D >= d_star() else ShrinkPath(D)


# ---------------------------------------------------------------------------
# columns


@dataclass
class ColumnReport:
    x: float
    D: float
    path: str
    samples: np.ndarray  # rows: u, area, diameter, inradius
    points: list = field(default_factory=list)

    @property
    def max_inradius_error(self) -> float:
        return float(np.abs(self.samples[:, 3] - 1.0).max()) if self.samples.size else 0.0

    @property
    def max_diameter_error(self) -> float:
        return float(np.abs(self.samples[:, 2] - self.D).max()) if self.samples.size else 0.0


def _certify(p: DiagramPoint, body=None) -> None:
    eps = ANALYTIC_TOL if p.analytic else MEASURED_TOL
    if not (in_band(p.x, p.y, eps) and classical_bounds_ok(p, eps)):
        raise CertificationError(
            f"witness {p.witness} at ({p.x!r}, {p.y!r}) leaves the diagram band",
            witness=dumps(body) if body is not None else None)


def column_endpoints(x: float):
    low_tag = "Slice" if x <= x_star() else "NonagonE"
    return [DiagramPoint(x, y_lower(x), low_tag), DiagramPoint(x, y_upper(x), "TwoCap")]


def fill_column(x: float, per_column: int, seed: int, column: int = 0) -> ColumnReport:
    """Endpoints plus ``per_column`` measured interior witnesses at abscissa x."""
    _check_x(x)
    if x == 1.0:
        p = DiagramPoint(1.0, 1.0, "TwoCap")
        return ColumnReport(1.0, 2.0, "none", np.empty((0, 4)), [p])
    if x <= 0.0:
        raise DomainError("x must be positive")
    D = 2.0 / x
    path = path_for(D)
    us = np.linspace(0.0, 1.0, PATH_SAMPLES)
    rows = np.empty((PATH_SAMPLES, 4))
    for i, u in enumerate(us):
        m = measure(path.body(float(u)))
        rows[i] = (u, m.area, m.diameter, m.inradius)
    rep = ColumnReport(x, D, path.kind, rows)
    if rep.max_inradius_error > MEASURED_TOL or rep.max_diameter_error > MEASURED_TOL:
        raise CertificationError(
            f"{path.kind} at D={D}: inradius error {rep.max_inradius_error:.3g}, "
            f"diameter error {rep.max_diameter_error:.3g}")
    if isinstance(path, MinkowskiPath):
        if np.any(np.diff(rows[:, 1]) > 1e-12 * rows[0, 1]):
            raise CertificationError(f"Minkowski path areas not monotone at D={D}")
        for u in (0.25, 0.5, 0.75):
            k = path.body(u)
            if not (support_dominates(path.big, k) and support_dominates(k, path.small)):
                raise CertificationError(f"Minkowski path lost inclusion at D={D}, u={u}")

    for p in column_endpoints(x):
        _certify(p)
        rep.points.append(p)

    lo, hi = y_lower(x), y_upper(x)
    rng = np.random.default_rng([seed, column])
    jitter = rng.random(per_column)
    areas = rows[:, 1]

    for k in range(per_column):
        y_target = lo + (k + 0.05 + 0.9 * jitter[k]) / per_column * (hi - lo)
        a_target = math.pi / y_target
        u = _locate(path, us, areas, a_target)
        body = path.body(u)
        m = measure(body)
        for val, want, name in ((m.inradius, 1.0, "inradius"), (m.diameter, D, "diameter")):
            if abs(val - want) > MEASURED_TOL:
                raise CertificationError(
                    f"{path.tag(u)}: {name} {val!r} differs from {want!r}",
                    witness=dumps(body))
        p = DiagramPoint(m.x, m.y, path.tag(u))
        _certify(p, body)
        rep.points.append(p)
    return rep


def _locate(path, us, areas, target: float) -> float:
    """Path parameter with area ``target``: bracket between samples, then
    bisect on the exact area (continuity gives a root in any bracket)."""
    diff = areas - target
    sign_change = np.flatnonzero(np.sign(diff[:-1]) != np.sign(diff[1:]))
    if sign_change.size == 0:
        return float(us[int(np.argmin(np.abs(diff)))])
    i = int(sign_change[0])
    return bisect(lambda u: path.body(u).area() - target, float(us[i]), float(us[i + 1]))


def column_abscissae(columns: int) -> np.ndarray:
    """Interior grid j/(columns+1); x = 1 is the disk and holds one point."""
    return np.arange(1, columns + 1) / (columns + 1.0)


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def _column_job(args):
    x, per_column, seed, j = args
    return fill_column(x, per_column, seed, j)


def diagram_report(columns: int = 50, per_column: int = 20, seed: int = 7,
                   workers: int | None = None) -> list[ColumnReport]:
    if columns < 2:
        raise ValueError("need at least two columns")
    if per_column < 1:
        raise ValueError("per_column must be positive")
    jobs = [(float(x), per_column, seed, j) for j, x in enumerate(column_abscissae(columns))]
    workers = worker_count() if workers is None else workers
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_column_job, jobs))
    return [_column_job(j) for j in jobs]


def diagram_fill(x_resolution: int = 50, per_column: int = 20, seed: int = 7,
                 workers: int | None = None) -> list[DiagramPoint]:
    """All certified points, sorted by (x, y)."""
    reports = diagram_report(x_resolution, per_column, seed, workers)
    pts = [p for rep in reports for p in rep.points]
    return sorted(pts, key=lambda p: (p.x, p.y, p.witness))
