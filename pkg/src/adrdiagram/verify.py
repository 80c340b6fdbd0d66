"""Named verification suites behind ``adrdiagram verify``.

Each check returns a :class:`Check`; a suite is a list of zero-argument
callables so the CLI can time and report them one by one.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .core.body import Polygon, area
from .core.hull import polygon_hull
from .core.measure import diameter, inradius, measure
from .core.steiner import steiner_symmetrize
from .core.support import support_area, to_support
from .diagram import (diagram_report, lower_curve_dominance, lower_branch_gap,
                      psi, random_convex_body, y_lower, y_upper)
from .shapes import (G_PRIME_ROOT, NCapSpec, TWO_SQRT3, area_gap, d_star,
                     g_crossover, nonagon_C, nonagon_C_area, nonagon_E,
                     nonagon_E_area, no_root_in_half_one, slice_area,
                     slice_body, slice_minus_kc, tau_cubic_roots,
                     tau_change_of_variable, two_cap_area, two_cap_body,
                     two_cap_volume_nd, two_cap_volume_revolution,
                     unit_ball_volume)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str
    seconds: float = 0.0


def _timed(fn):
    def run(*args, **kwargs):
        t0 = time.perf_counter()
        chk = fn(*args, **kwargs)
        chk.seconds = time.perf_counter() - t0
        return chk
    run.__name__ = fn.__name__
    return run


def diameter_grid(n: int = 200, pad: float = 1e-3) -> np.ndarray:
    return np.linspace(2.0 + pad, TWO_SQRT3 - pad, n)


# ---------------------------------------------------------------------------
# formulas


@_timed
def check_d_star():
    d = d_star()
    return Check("D* = 2.3888 +- 5e-4", abs(d - 2.3888) <= 5e-4, f"D* = {d:.15f}")


def _constructions(D):
    yield "K_E", nonagon_E(D)[1], nonagon_E_area(D)
    yield "K_C", nonagon_C(D)[1], nonagon_C_area(D)
    yield "K_S", slice_body(D), slice_area(D)
    yield "two-cap", two_cap_body(1.0, D), two_cap_area(1.0, D)


@_timed
def check_closed_forms():
    worst = 0.0
    where = ""
    for D in diameter_grid():
        for name, body, closed in _constructions(float(D)):
            rel = abs(area(body) - closed) / closed
            if rel > worst:
                worst, where = rel, f"{name} at D={D:.6f}"
    return Check("measured area = closed form (rel 1e-9, 200 D)", worst <= 1e-9,
                 f"worst rel error {worst:.2e} ({where})")


@_timed
def check_construction_fidelity():
    worst_r = worst_d = 0.0
    for D in diameter_grid():
        for _, body, _ in _constructions(float(D)):
            r, _ = inradius(body, 8192)
            worst_r = max(worst_r, abs(r - 1.0))
            worst_d = max(worst_d, abs(diameter(body, 8192) - D))
    ok = worst_r <= 1e-6 and worst_d <= 1e-6
    return Check("constructed r = 1, D = D (1e-6, n=8192)", ok,
                 f"max |r-1| {worst_r:.2e}, max |D'-D| {worst_d:.2e}")


@_timed
def check_kc_never_optimal():
    Ds = np.linspace(2.0 + 1e-6, TWO_SQRT3, 501)[1:]
    gaps = np.array([slice_minus_kc(float(D)) for D in Ds])
    direct = np.array([slice_area(float(D)) - nonagon_C_area(float(D)) for D in Ds])
    k = int(np.argmin(gaps))
    ok = bool((gaps > 0).all() and (direct > 0).all())
    return Check("|K_C| < |K_S| on 500 D in (2+1e-6, 2sqrt3]", ok,
                 f"min margin {gaps[k]:.3e} at D={Ds[k]:.6f}")


@_timed
def check_two_zone():
    Ds = np.linspace(2.0, 6.0, 101)[1:]
    certs = [no_root_in_half_one(float(D)) for D in Ds]
    worst = max(c.max_value for c in certs)
    ok = all(c.ok for c in certs)
    return Check("max of P on [1/2,1] < 0 for 100 D > 2", ok, f"largest max {worst:.4f}")


@_timed
def check_tau_cubic():
    Ds = np.linspace(2.0, TWO_SQRT3, 100)
    taus = []
    unique = True
    for D in Ds:
        tau, others = tau_cubic_roots(float(D))
        taus.append(tau)
        unique &= not any(abs(z.imag) <= 1e-12 and 2.0 <= z.real <= 3.0 for z in others)
    taus = np.array(taus)
    ends = abs(taus[0] - 2.0) <= 1e-9 and abs(taus[-1] - 3.0) <= 1e-9
    mono = bool(np.all(np.diff(taus) > 0))
    ok = unique and ends and mono
    return Check("tau root unique in [2,3], tau(2)=2, tau(2sqrt3)=3, increasing", ok,
                 f"unique={unique} ends={ends} monotone={mono}")


@_timed
def check_change_of_variable():
    worst = 0.0
    for D in np.linspace(2.0, TWO_SQRT3, 50):
        tau = tau_change_of_variable(float(D))
        g = (tau * tau - 5 * tau + 4) / (0.5 * tau * tau - 2 * tau + 1)
        worst = max(worst, abs(D * D - tau * g))
    return Check("D^2 = tau g(tau) along the tau root", worst <= 1e-9, f"max residual {worst:.2e}")


def g_prime_fd(D: float, step: float = 1e-5) -> float:
    return (g_crossover(D + step) - g_crossover(D - step)) / (2.0 * step)


@_timed
def check_g_analysis():
    end = g_crossover(TWO_SQRT3)
    end_ok = abs(end + math.asin(1.0 / math.sqrt(3.0))) <= 1e-12
    grid = np.linspace(2.0 + 1e-4, TWO_SQRT3 - 1e-4, 2000)
    signs = np.sign([g_prime_fd(float(D)) for D in grid])
    changes = np.flatnonzero(signs[:-1] != signs[1:])
    once = changes.size == 1
    lo, hi = (float(grid[changes[0]]), float(grid[changes[0] + 1])) if once else (0.0, 0.0)
    while once and hi - lo > 1e-7:
        mid = 0.5 * (lo + hi)
        if g_prime_fd(mid) > 0:
            lo = mid
        else:
            hi = mid
    bracket_ok = once and lo - 1e-6 <= G_PRIME_ROOT <= hi + 1e-6
    ok = end_ok and bracket_ok
    return Check("g(2sqrt3) = -arcsin(1/sqrt3); g' changes sign once at sqrt(96/23)", ok,
                 f"g(2sqrt3)+arcsin(1/sqrt3)={end + math.asin(1 / math.sqrt(3)):.1e}, "
                 f"sign changes={changes.size}, bracket=[{lo:.9f}, {hi:.9f}]")


@_timed
def check_crossover_sign():
    ok = area_gap(2.2) > 0 > area_gap(3.0) and area_gap(2.1) > 0
    return Check("|K_E| - |K_S| > 0 at 2.1, 2.2 and < 0 at 3", ok,
                 f"gap(2.2)={area_gap(2.2):.5f}, gap(3)={area_gap(3.0):.5f}")


FORMULAS = [check_d_star, check_closed_forms, check_construction_fidelity,
            check_kc_never_optimal, check_two_zone, check_tau_cubic,
            check_change_of_variable, check_g_analysis, check_crossover_sign]


# ---------------------------------------------------------------------------
# bounds


@_timed
def check_curves():
    xs = np.linspace(1e-4, 1.0, 10_000)
    up = np.array([y_upper(float(x)) for x in xs])
    lo = np.array([y_lower(float(x)) for x in xs])
    order = bool(np.all(up[:-1] > lo[:-1]) and abs(up[-1] - lo[-1]) <= 1e-12)
    gap = lower_branch_gap()
    return Check("y- < y+ on (0,1), equal at 1; y- continuous at x*", order and gap <= 1e-9,
                 f"branch gap {gap:.1e}")


@_timed
def check_dominance_report():
    bad = lower_curve_dominance()
    detail = "y- >= max(x^2, pi x/4) on the grid" if not bad else \
        f"y- below a classical bound on {len(bad)} grid points, x in [{bad[0][0]:.4f}, {bad[-1][0]:.4f}]"
    return Check("report: y- against classical bounds", True, detail)


def sandwich_violations(count: int = 10_000, seed0: int = 0):
    low = high = 0
    worst_low = worst_high = -math.inf
    for i in range(count):
        body = random_convex_body(seed0 + i)
        m = measure(body)
        a = m.area / m.inradius ** 2
        q = m.diameter / m.inradius
        lo_gap = two_cap_area(1.0, q) - 1e-9 - a
        hi_gap = a - psi(q, 1.0) - 1e-6
        worst_low, worst_high = max(worst_low, lo_gap), max(worst_high, hi_gap)
        low += lo_gap > 0
        high += hi_gap > 0
    return low, high, worst_low, worst_high


@_timed
def check_sandwich(count: int = 10_000):
    low, high, wl, wh = sandwich_violations(count)
    return Check(f"two-cap <= A/r^2 <= psi on {count} random bodies", low == 0 and high == 0,
                 f"violations low={low} high={high}")


def random_polygon(rng, n: int = 10) -> Polygon:
    while True:
        hull = polygon_hull(rng.normal(size=(n, 2)))
        if len(hull) >= 3:
            try:
                return Polygon(tuple(map(tuple, hull)))
            except ValueError:
                continue


@_timed
def check_steiner(count: int = 1000, seed: int = 11):
    rng = np.random.default_rng(seed)
    worst_a = 0.0
    d_up = r_down = 0
    for _ in range(count):
        p = random_polygon(rng, int(rng.integers(3, 16)))
        s = steiner_symmetrize(p, float(rng.uniform(0.0, 2.0 * math.pi)))
        worst_a = max(worst_a, abs(s.area() - p.area()) / p.area())
        pa, sa = p.to_arcgon(), s.to_arcgon()
        d_up += diameter(sa) > diameter(pa) + 1e-9
        r_down += inradius(sa)[0] < inradius(pa)[0] - 1e-9
    ok = worst_a <= 1e-12 and d_up == 0 and r_down == 0
    return Check(f"Steiner: area kept, D down, r up ({count} polygons)", ok,
                 f"max rel area change {worst_a:.1e}, D increases {d_up}, r decreases {r_down}")


@_timed
def check_support_identity(count: int = 100, seed: int = 5):
    rng = np.random.default_rng(seed)
    worst_poly = 0.0
    for _ in range(count):
        p = random_polygon(rng, int(rng.integers(3, 16))).to_arcgon()
        c = np.mean(p.vertices, axis=0)
        worst_poly = max(worst_poly, abs(support_area(to_support(p, 4096, center=c)) - area(p)))
    smooth = max(abs(support_area(to_support(b, 4096)) - area(b))
                 for b in (slice_body(2.0), slice_body(2.5), slice_body(3.0)))
    ok = worst_poly <= 1e-3 and smooth <= 1e-6
    return Check("support-function area at n=4096", ok,
                 f"polygons max err {worst_poly:.1e}, disk/slices max err {smooth:.1e}")


BOUNDS = [check_curves, check_dominance_report, check_sandwich, check_steiner,
          check_support_identity]


# ---------------------------------------------------------------------------
# paths


@_timed
def check_diagram(columns: int = 50, per_column: int = 20, seed: int = 7):
    reps = diagram_report(columns, per_column, seed)
    n = sum(len(r.points) for r in reps)
    r_err = max(r.max_inradius_error for r in reps)
    d_err = max(r.max_diameter_error for r in reps)
    samples = min(len(r.samples) for r in reps)
    ok = n == columns * (per_column + 2) and r_err <= 1e-6 and d_err <= 1e-6
    return Check(f"diagram fill {columns}x{per_column} certified", ok,
                 f"{n} points, {samples} path samples per column, "
                 f"max |r-1| {r_err:.1e}, max |D'-D| {d_err:.1e}")


PATHS = [check_diagram]


# ---------------------------------------------------------------------------
# n-dimensional


@_timed
def check_nd():
    worst = 0.0
    for n in (2, 3, 4, 5):
        for q in (2.5, 3.0, 5.0):
            spec = NCapSpec(n, 1.0, q)
            worst = max(worst, abs(two_cap_volume_nd(spec) / two_cap_volume_revolution(spec) - 1.0))
    ball = max(abs(two_cap_volume_nd(NCapSpec(n, 1.0, 2.0)) - unit_ball_volume(n))
               for n in (2, 3, 4, 5))
    ok = worst <= 1e-8 and ball <= 1e-12
    return Check("n-dim two-cap volume vs revolution quadrature", ok,
                 f"max rel error {worst:.1e}; ball limit error {ball:.1e}")


ND = [check_nd]

SUITES = {
    "formulas": FORMULAS,
    "bounds": BOUNDS,
    "paths": PATHS,
    "nd": ND,
}
SUITES["all"] = FORMULAS + BOUNDS + PATHS + ND


def run_suite(name: str) -> list[Check]:
    return [fn() for fn in SUITES[name]]
