"""Extremal bodies for area at fixed diameter and inradius.

Lengths are normalised to inradius 1 unless a function takes ``r``. The
two smoothed nonagons live inside a triangle circumscribed about the unit
circle; side i touches the circle at the point with normal angle eta_i.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate

from .core.body import Arc, ArcGon, Point2, Segment, disk
from .core.hull import convex_hull
from .errors import CertificationError, DomainError
from .roots import bisect

SQRT3 = math.sqrt(3.0)
TWO_SQRT3 = 2.0 * SQRT3
# the derivative of g changes sign here
G_PRIME_ROOT = math.sqrt(96.0 / 23.0)
_CENTER_TOL = 1e-9


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


# ---------------------------------------------------------------------------
# two-cap body: hull of a disk of radius r and two antipodal points


def two_cap_body(r: float, D: float) -> ArcGon:
    _require(r > 0 and D > 2.0 * r, f"two-cap body needs D > 2r (D={D}, r={r})")
    return convex_hull([(-0.5 * D, 0.0), (0.5 * D, 0.0)], [((0.0, 0.0), r)])


def two_cap_area(r: float, D: float) -> float:
    _require(r > 0 and D >= 2.0 * r, f"two-cap area needs D >= 2r (D={D}, r={r})")
    root = math.sqrt((D - 2.0 * r) * (D + 2.0 * r))
    # arccos(2r/D) as an atan2: accurate when 2r/D is close to 1
    return r * root + r * r * (math.pi - 2.0 * math.atan2(root, 2.0 * r))


@dataclass(frozen=True)
class NCapSpec:
    """Two-cap body in dimension n: hull of an r-ball and two points D apart."""

    n: int
    r: float
    D: float

    def __post_init__(self):
        _require(isinstance(self.n, (int, np.integer)) and self.n >= 2,
                 f"dimension must be an integer >= 2, got {self.n}")
        _require(self.r > 0, "r must be positive")
        _require(self.D >= 2.0 * self.r, "D must be at least 2r")


def unit_ball_volume(k: int) -> float:
    """Volume of the unit ball in R^k, through log-gamma."""
    return math.exp(0.5 * k * math.log(math.pi) - math.lgamma(0.5 * k + 1.0))


def _sin_power_tail(n: int, a: float) -> float:
    """Integral of sin^n over [a, pi/2] by the reduction recurrence."""
    s, c = math.sin(a), math.cos(a)
    even, odd = 0.5 * math.pi - a, c
    val = even if n % 2 == 0 else odd
    for k in range(2 if n % 2 == 0 else 3, n + 1, 2):
        val = s ** (k - 1) * c / k + (k - 1) / k * val
    return val


def two_cap_volume_nd(spec: NCapSpec) -> float:
    n, r, D = spec.n, spec.r, spec.D
    w = unit_ball_volume(n - 1)
    a = math.acos(min(1.0, 2.0 * r / D))
    caps = 2.0 * w * r ** n * _sin_power_tail(n, a)
    cones = w * r ** (n - 1) * max(0.0, D * D - 4.0 * r * r) ** (0.5 * (n + 1)) / (n * D ** n)
    return caps + cones


def two_cap_volume_revolution(spec: NCapSpec) -> float:
    """Independent value: integrate the cross-section measure along the axis.

    The body is a solid of revolution with profile radius rho(x): the ball
    up to the tangency abscissa 2r²/D, then a straight cone to the apex
    at D/2. Its volume is 2·ω_{n-1}·∫_0^{D/2} rho^{n-1} dx.
    """
    n, r, D = spec.n, spec.r, spec.D
    w = unit_ball_volume(n - 1)
    apex = 0.5 * D
    xt = 2.0 * r * r / D
    rho_t = math.sqrt(max(0.0, r * r - xt * xt))
    opts = dict(epsabs=0.0, epsrel=1e-13, limit=200)
    ball, _ = integrate.quad(lambda x: (r * r - x * x) ** (0.5 * (n - 1)), 0.0, xt, **opts)
    cone = 0.0
    if apex > xt:
        cone, _ = integrate.quad(
            lambda x: (rho_t * (apex - x) / (apex - xt)) ** (n - 1), xt, apex, **opts)
    return 2.0 * w * (ball + cone)


# ---------------------------------------------------------------------------
# symmetric slice: disk of diameter D cut by the strip |y| <= 1


def slice_body(D: float) -> ArcGon:
    _require(D >= 2.0, f"slice needs D >= 2, got {D}")
    R = 0.5 * D
    x0 = math.sqrt(max(0.0, R * R - 1.0))
    if x0 == 0.0:
        return disk(1.0)
    alpha = math.asin(1.0 / R)
    O = Point2(0.0, 0.0)
    return ArcGon((
        Segment(Point2(-x0, -1.0), Point2(x0, -1.0)),
        Arc(O, R, -alpha, alpha),
        Segment(Point2(x0, 1.0), Point2(-x0, 1.0)),
        Arc(O, R, math.pi - alpha, math.pi + alpha),
    ))


def slice_area(D: float) -> float:
    _require(D >= 2.0, f"slice needs D >= 2, got {D}")
    root = math.sqrt((D - 2.0) * (D + 2.0))
    return root + 0.5 * D * D * math.atan2(2.0, root)


def slice_area_derivative(D: float) -> float:
    _require(D >= 2.0, f"slice needs D >= 2, got {D}")
    return D * math.asin(2.0 / D)


# ---------------------------------------------------------------------------
# smoothed nonagons


@dataclass(frozen=True)
class NonagonParams:
    variant: str  # "Equilateral" or "Isosceles"
    D: float
    tau: float
    eta: tuple
    h_side: tuple
    t1: float
    t2: float
    A: tuple
    B: tuple
    M: tuple


def _side_points(eta: float, half: float, tau: float):
    """Contact segment [A, B] on the side with normal eta, and the apex M
    of the triangle opposite to that side."""
    n = np.array([math.cos(eta), math.sin(eta)])
    t = np.array([-math.sin(eta), math.cos(eta)])
    return n - half * t, n + half * t, (1.0 - tau) * n


def _arc_through(p, q, c, R) -> Arc:
    a0 = math.atan2(p[1] - c[1], p[0] - c[0])
    a1 = math.atan2(q[1] - c[1], q[0] - c[0])
    while a1 <= a0:
        a1 += 2.0 * math.pi
    return Arc(Point2(*c), R, a0, a1)


def _paired_center(p1, q1, p2, q2, label: str):
    """Common centre of two arcs cut from one circle of diameter D.

    Each pair (p, q) is antipodal on that circle, so both midpoints must
    coincide.
    """
    c1 = 0.5 * (np.asarray(p1) + np.asarray(q1))
    c2 = 0.5 * (np.asarray(p2) + np.asarray(q2))
    gap = float(np.hypot(*(c1 - c2)))
    if gap > _CENTER_TOL:
        raise CertificationError(f"arc centres for {label} disagree by {gap:.3g}")
    return 0.5 * (c1 + c2)


def _assemble(chain, D: float) -> ArcGon:
    """chain: list of ("S", p, q) or ("A", p, q, center). Arcs whose ends
    coincide are dropped (they vanish at the end of the parameter range)."""
    pieces = []
    for item in chain:
        kind, p, q = item[:3]
        if math.hypot(q[0] - p[0], q[1] - p[1]) < 1e-12:
            continue
        if kind == "S":
            pieces.append(Segment(Point2(*p), Point2(*q)))
        else:
            pieces.append(_arc_through(p, q, item[3], 0.5 * D))
    return ArcGon(tuple(pieces))


def _ke_check(D):
    _require(2.0 < D < TWO_SQRT3, f"K_E needs 2 < D < 2*sqrt(3), got {D}")


def nonagon_E(D: float):
    """Nonagon inscribed in the equilateral triangle: 3 segments, 6 arcs."""
    _ke_check(D)
    tau = 0.5 * (3.0 + math.sqrt(D * D - 3.0))
    h = math.sqrt(D * D - tau * tau)
    eta = (-0.5 * math.pi, math.pi / 6.0, 5.0 * math.pi / 6.0)
    A, B, M = zip(*(_side_points(e, h, tau) for e in eta))
    c13 = _paired_center(B[0], M[0], M[2], A[2], "B1M3/M1A3")
    c21 = _paired_center(B[1], M[1], M[0], A[0], "B2M1/M2A1")
    c32 = _paired_center(B[2], M[2], M[1], A[1], "B3M2/M3A2")
    body = _assemble([
        ("S", A[0], B[0]), ("A", B[0], M[2], c13), ("A", M[2], A[1], c32),
        ("S", A[1], B[1]), ("A", B[1], M[0], c21), ("A", M[0], A[2], c13),
        ("S", A[2], B[2]), ("A", B[2], M[1], c32), ("A", M[1], A[0], c21),
    ], D)
    params = NonagonParams(
        "Equilateral", D, tau, eta, (h, h, h),
        math.acos(SQRT3 / D), math.asin(tau / D),
        tuple(Point2(*p) for p in A), tuple(Point2(*p) for p in B),
        tuple(Point2(*p) for p in M))
    return params, body


def nonagon_E_area(D: float) -> float:
    _require(2.0 <= D < TWO_SQRT3, f"K_E area needs 2 <= D < 2*sqrt(3), got {D}")
    root = math.sqrt(D * D - 3.0)
    t1 = math.acos(SQRT3 / D)
    tau = 0.5 * (3.0 + root)
    t2 = math.atan2(tau, math.sqrt((D - tau) * (D + tau)))
    flat = 1.5 * SQRT3 * (root - 1.0)
    main = 1.5 * D * D * (math.pi / 3.0 - t1) + flat
    alt = 0.75 * D * D * (t2 - t1) + flat
    if abs(main - alt) > 1e-12 * max(1.0, abs(main)):
        raise CertificationError(f"K_E area forms disagree at D={D}: {main} vs {alt}")
    return main


def _tau_shift(D: float) -> float:
    """tau - 2 for the K_C cubic.

    With tau = 2 + h and e = D² - 4 the cubic reads
    -e + 4h + (1 + e/2)h² - h³ = 0, which keeps full relative precision in
    h as D -> 2. It is -e <= 0 at h = 0 and 4 - e/2 >= 0 at h = 1.
    """
    e = (D - 2.0) * (D + 2.0)

    def f(h):
        return -e + h * (4.0 + h * ((1.0 + 0.5 * e) - h))

    return bisect(f, 0.0, 1.0)


def tau_cubic_roots(D: float):
    """The root of the tau cubic in [2, 3] and the two remaining roots.

    The cubic is -4+D² <= 0 at tau = 2 and 6 - D²/2 >= 0 at tau = 3 on
    [2, 2√3], so bisection finds a root there; deflating by it leaves a
    quadratic whose roots are returned (complex when its discriminant is
    negative) so callers can confirm none of them lies in [2, 3].
    """
    _require(2.0 <= D <= TWO_SQRT3 * (1.0 + 1e-15),
             f"tau cubic needs 2 <= D <= 2*sqrt(3), got {D}")
    tau = 2.0 + _tau_shift(D)
    # monic form t^3 + a2 t^2 + a1 t + a0; divide by (t - tau)
    a2 = -(0.5 * D * D + 5.0)
    a1 = 2.0 * D * D + 4.0
    b1 = a2 + tau
    b0 = a1 + tau * b1
    others = np.roots([1.0, b1, b0])
    return tau, tuple(complex(z) for z in others)


def solve_tau_cubic(D: float) -> float:
    tau, others = tau_cubic_roots(D)
    for z in others:
        if abs(z.imag) <= 1e-12 and 2.0 - 1e-12 <= z.real <= 3.0 + 1e-12:
            raise CertificationError(f"tau cubic has a second root {z.real} in [2, 3]")
    return tau


def _kc_scalars(D: float):
    _require(2.0 <= D <= TWO_SQRT3 * (1.0 + 1e-15),
             f"K_C needs 2 <= D <= 2*sqrt(3), got {D}")
    hh = _tau_shift(D)
    tau = 2.0 + hh
    # contact half-lengths: side 1 gets h1, the two equal sides h1/(tau-2);
    # written through hh so nothing blows up as tau -> 2
    h_side = math.sqrt((hh + 0.5 * hh * hh) / (1.0 - 0.5 * hh * hh))
    h1 = hh * h_side
    eta2 = math.asin(0.5 * hh)
    # sin t2 = tau/D and cos t2 = h1/D
    t2 = math.atan2(tau, h1)
    # arcsin(cos t2 / tan eta2) with the quotient expanded in hh
    t1 = math.asin(min(1.0, 2.0 * h_side * math.sqrt(1.0 - 0.25 * hh * hh) / D))
    return tau, hh, h1, h_side, eta2, t1, t2


def _kc_arc_span(hh: float) -> float:
    """t2 - t1 = arcsin((1-hh)·sqrt((2+hh)/(2-hh))), evaluated as an atan2.

    The cosine of that angle is sqrt(hh(2-hh²)/(2-hh)), so the small side
    stays accurate near hh = 0 where the arcsine argument is close to 1.
    """
    sin_part = (1.0 - hh) * math.sqrt((2.0 + hh) / (2.0 - hh))
    cos_part = math.sqrt(hh * (2.0 - hh * hh) / (2.0 - hh))
    return math.atan2(sin_part, cos_part)


def nonagon_C(D: float):
    """Nonagon inscribed in an isosceles triangle: 3 segments, 4 arcs."""
    _require(2.0 < D <= TWO_SQRT3, f"K_C needs 2 < D <= 2*sqrt(3), got {D}")
    tau, hh, h1, h_side, eta2, t1, t2 = _kc_scalars(D)
    eta = (-0.5 * math.pi, eta2, math.pi - eta2)
    halves = (h1, h_side, h_side)
    A, B, M = zip(*(_side_points(e, s, tau) for e, s in zip(eta, halves)))
    c_lo = _paired_center(B[1], B[2], M[0], A[0], "B2M1/B3A1")
    c_hi = _paired_center(M[0], B[0], A[2], A[1], "M1A3/B1A2")
    body = _assemble([
        ("S", A[0], B[0]), ("A", B[0], A[1], c_hi),
        ("S", A[1], B[1]), ("A", B[1], M[0], c_lo), ("A", M[0], A[2], c_hi),
        ("S", A[2], B[2]), ("A", B[2], A[0], c_lo),
    ], D)
    params = NonagonParams(
        "Isosceles", D, tau, eta, halves, t1, t2,
        tuple(Point2(*p) for p in A), tuple(Point2(*p) for p in B),
        (Point2(*M[0]),))
    return params, body


def nonagon_C_area(D: float) -> float:
    """Closed-form area; D = 2 is accepted as the disk limit."""
    tau, hh, h1, h_side, eta2, t1, t2 = _kc_scalars(D)
    first = (2.0 + hh) * h_side
    span = _kc_arc_span(hh)
    if abs((t2 - t1) - span) > 1e-12:
        raise CertificationError(
            f"K_C arc angle forms disagree at D={D}: {t2 - t1} vs {span}")
    return first + 0.5 * D * D * (t2 - t1)


def slice_minus_kc(D: float) -> float:
    """|K_S(D)| - |K_C(D)| without cancellation.

    Both areas equal π(D²/4) plus terms of order sqrt(D - 2); the π part
    is removed symbolically, leaving differences of small quantities.
    """
    tau, hh, h1, h_side, eta2, t1, t2 = _kc_scalars(D)
    s = math.sqrt((D - 2.0) * (D + 2.0))
    sin_part = (1.0 - hh) * math.sqrt((2.0 + hh) / (2.0 - hh))
    cos_part = math.sqrt(hh * (2.0 - hh * hh) / (2.0 - hh))
    # arctan(a) - arctan(b) = arctan((a - b) / (1 + ab))
    a, b = cos_part / sin_part if sin_part > 0 else math.inf, 0.5 * s
    if math.isinf(a):
        angle = 0.5 * math.pi - math.atan(b)
    else:
        angle = math.atan((a - b) / (1.0 + a * b))
    return s - (2.0 + hh) * h_side + 0.5 * D * D * angle


def tau_change_of_variable(D: float) -> float:
    """tau for the K_C cubic, checked against D² = tau·g(tau)."""
    _require(2.0 <= D <= TWO_SQRT3 * (1.0 + 1e-15),
             f"change of variable needs 2 <= D <= 2*sqrt(3), got {D}")
    tau = solve_tau_cubic(D)
    g = (tau * tau - 5.0 * tau + 4.0) / (0.5 * tau * tau - 2.0 * tau + 1.0)
    hh = tau - 2.0
    g_h = 2.0 + hh / (1.0 - 0.5 * hh * hh)
    if abs(D * D - tau * g) > 1e-9 or abs(g - g_h) > 1e-9:
        raise CertificationError(f"D^2 = tau g(tau) fails at D={D}")
    return tau


# ---------------------------------------------------------------------------
# crossover between the equilateral nonagon and the slice


def area_gap(D: float) -> float:
    """|K_E(D)| - |K_S(D)|."""
    return nonagon_E_area(D) - slice_area(D)


@lru_cache(maxsize=1)
def d_star() -> float:
    """Diameter where the equilateral nonagon and the slice have equal area.

    The gap vanishes at 2, rises, then falls and stays negative; 2.2 and 3
    sit on either side of its only other zero.
    """
    lo, hi = 2.2, 3.0
    if not (area_gap(lo) > 0.0 > area_gap(hi)):
        raise CertificationError("crossover bracket lost its sign change")
    return bisect(area_gap, lo, hi)


def g_crossover(D: float) -> float:
    _require(2.0 <= D <= TWO_SQRT3, f"g needs 2 <= D <= 2*sqrt(3), got {D}")
    return math.pi - 3.0 * math.acos(SQRT3 / D) - math.asin(2.0 / D)


def g_crossover_derivative(D: float) -> float:
    """g'(D); positive exactly when D < sqrt(96/23)."""
    _require(2.0 < D <= TWO_SQRT3, f"g' needs 2 < D <= 2*sqrt(3), got {D}")
    return (2.0 / (D * math.sqrt(D * D - 4.0))
            - 3.0 * SQRT3 / (D * math.sqrt(D * D - 3.0)))


# ---------------------------------------------------------------------------
# two free zones


def two_zone_polynomial(D: float, X: float) -> float:
    return ((X - 0.25 * (D * D - 1.0)) * X - 0.5) * X + 0.25


@dataclass(frozen=True)
class ZoneCertificate:
    D: float
    max_value: float
    argmax: float
    p_half: float
    p_one: float

    @property
    def ok(self) -> bool:
        return self.max_value < 0.0 and self.p_half < 0.0 and self.p_one < 0.0


def no_root_in_half_one(D: float) -> ZoneCertificate:
    """Exact maximum of P on [1/2, 1].

    The maximum of a cubic on an interval is attained at an endpoint or at
    a root of P', and those roots come from the quadratic formula.
    """
    _require(D > 2.0, f"two-zone certificate needs D > 2, got {D}")
    b = -0.5 * (D * D - 1.0)
    disc = b * b + 6.0  # P'(X) = 3X² + bX - 1/2
    crit = [(-b + s * math.sqrt(disc)) / 6.0 for s in (1.0, -1.0)]
    cands = [0.5, 1.0] + [x for x in crit if 0.5 < x < 1.0]
    vals = [two_zone_polynomial(D, x) for x in cands]
    k = int(np.argmax(vals))
    return ZoneCertificate(D, vals[k], cands[k], two_zone_polynomial(D, 0.5),
                           two_zone_polynomial(D, 1.0))
