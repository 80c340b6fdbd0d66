"""Exact planar convex bodies bounded by segments and circular arcs."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from ..errors import ArcgonFormatError, DegenerateError, StructuralError

TWO_PI = 2.0 * math.pi
CLOSE_TOL = 1e-9
# slack on the turning checks; junction normals are recomputed from
# coordinates so they carry a few ulps of noise
TURN_TOL = 1e-9


class Point2(NamedTuple):
    x: float
    y: float


def _finite_point(p) -> Point2:
    x, y = float(p[0]), float(p[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise StructuralError(f"non-finite coordinate ({x}, {y})")
    return Point2(x, y)


@dataclass(frozen=True)
class Segment:
    start: Point2
    end: Point2

    def __post_init__(self):
        object.__setattr__(self, "start", _finite_point(self.start))
        object.__setattr__(self, "end", _finite_point(self.end))
        if self.length <= 0.0:
            raise StructuralError("segment has zero length")

    @property
    def length(self) -> float:
        return math.hypot(self.end.x - self.start.x, self.end.y - self.start.y)

    @property
    def start_point(self) -> Point2:
        return self.start

    @property
    def end_point(self) -> Point2:
        return self.end

    @property
    def normal_start(self) -> float:
        """Outward normal angle, assuming the body lies to the left."""
        return math.atan2(-(self.end.x - self.start.x), self.end.y - self.start.y)

    normal_end = normal_start

    @property
    def turning(self) -> float:
        return 0.0

    def chord_area(self) -> float:
        return 0.5 * (self.start.x * self.end.y - self.end.x * self.start.y)

    def sample(self, n):
        s = np.linspace(0.0, 1.0, n, endpoint=False)
        return np.column_stack([self.start.x + s * (self.end.x - self.start.x),
                                self.start.y + s * (self.end.y - self.start.y)])


@dataclass(frozen=True)
class Arc:
    """Counterclockwise arc from ``angle_start`` to ``angle_end`` (radians)."""

    center: Point2
    radius: float
    angle_start: float
    angle_end: float

    def __post_init__(self):
        object.__setattr__(self, "center", _finite_point(self.center))
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise StructuralError(f"arc radius must be positive, got {self.radius}")
        if not (0.0 < self.sweep < TWO_PI):
            raise StructuralError(f"arc sweep {self.sweep} outside (0, 2pi)")

    @property
    def sweep(self) -> float:
        return self.angle_end - self.angle_start

    def point_at(self, angle: float) -> Point2:
        return Point2(self.center.x + self.radius * math.cos(angle),
                      self.center.y + self.radius * math.sin(angle))

    @property
    def start_point(self) -> Point2:
        return self.point_at(self.angle_start)

    @property
    def end_point(self) -> Point2:
        return self.point_at(self.angle_end)

    @property
    def normal_start(self) -> float:
        return self.angle_start

    @property
    def normal_end(self) -> float:
        return self.angle_end

    @property
    def turning(self) -> float:
        return self.sweep

    def chord_area(self) -> float:
        p, q = self.start_point, self.end_point
        phi = self.sweep
        return (0.5 * (p.x * q.y - q.x * p.y)
                + 0.5 * self.radius ** 2 * (phi - math.sin(phi)))

    def sample(self, n):
        a = self.angle_start + self.sweep * np.arange(n) / n
        return np.column_stack([self.center.x + self.radius * np.cos(a),
                                self.center.y + self.radius * np.sin(a)])


BoundaryPiece = Segment | Arc


def _wrap_pi(a: float) -> float:
    """Map an angle to [-pi, pi)."""
    return (a + math.pi) % TWO_PI - math.pi


@dataclass(frozen=True)
class ArcGon:
    """Closed counterclockwise convex chain of segments and arcs.

    Construction checks closure (``CLOSE_TOL``), that the outward normal
    never turns backwards, and that it makes exactly one full turn.
    """

    pieces: tuple = field()

    def __post_init__(self):
        pieces = tuple(self.pieces)
        object.__setattr__(self, "pieces", pieces)
        if not pieces:
            raise StructuralError("empty boundary")
        total = 0.0
        m = len(pieces)
        for i, cur in enumerate(pieces):
            nxt = pieces[(i + 1) % m]
            p, q = cur.end_point, nxt.start_point
            gap = math.hypot(p.x - q.x, p.y - q.y)
            if gap > CLOSE_TOL:
                raise StructuralError(
                    f"chain not closed between pieces {i} and {(i + 1) % m} "
                    f"(gap {gap:.3g})")
            jump = _wrap_pi(nxt.normal_start - cur.normal_end)
            if jump < -TURN_TOL:
                raise StructuralError(
                    f"outward normal turns backwards by {-jump:.3g} rad at "
                    f"junction {i}; body is clockwise or not convex")
            total += cur.turning + jump
        if abs(total - TWO_PI) > 1e-7:
            raise StructuralError(
                f"total normal turning {total:.12g} differs from 2pi")

    @classmethod
    def from_polygon(cls, vertices) -> "ArcGon":
        pts = [_finite_point(v) for v in vertices]
        pieces = []
        for i, p in enumerate(pts):
            q = pts[(i + 1) % len(pts)]
            if p != q:
                pieces.append(Segment(p, q))
        if len(pieces) < 3:
            raise DegenerateError("polygon needs at least three distinct vertices")
        return cls(tuple(pieces))

    @cached_property
    def packed(self) -> np.ndarray:
        """The ``(m, 10)`` piece array consumed by the numeric kernels."""
        rows = np.zeros((len(self.pieces), 10))
        for i, pc in enumerate(self.pieces):
            p, q = pc.start_point, pc.end_point
            rows[i, 1:5] = (p.x, p.y, q.x, q.y)
            if isinstance(pc, Arc):
                rows[i, 0] = 1.0
                rows[i, 5:10] = (pc.center.x, pc.center.y, pc.radius,
                                 pc.angle_start % TWO_PI, pc.sweep)
        return rows

    @property
    def vertices(self) -> list[Point2]:
        """Start points of all pieces, in boundary order."""
        return [pc.start_point for pc in self.pieces]

    def area(self) -> float:
        return area(self)

    def boundary_samples(self, n: int) -> np.ndarray:
        """About ``n`` boundary points, spread by piece length."""
        lengths = np.array([pc.length if isinstance(pc, Segment)
                            else pc.radius * pc.sweep for pc in self.pieces])
        counts = np.maximum(1, np.round(n * lengths / lengths.sum())).astype(int)
        return np.vstack([pc.sample(c)
                          for pc, c in zip(self.pieces, counts)])

    def transformed(self, scale: float = 1.0, shift=(0.0, 0.0)) -> "ArcGon":
        """Image under x -> scale * x + shift, for positive ``scale``."""
        if not scale > 0:
            raise ValueError("scale must be positive")
        sx, sy = float(shift[0]), float(shift[1])

        def mp(p):
            return Point2(scale * p.x + sx, scale * p.y + sy)

        out = []
        for pc in self.pieces:
            if isinstance(pc, Segment):
                out.append(Segment(mp(pc.start), mp(pc.end)))
            else:
                out.append(Arc(mp(pc.center), scale * pc.radius,
                               pc.angle_start, pc.angle_end))
        return ArcGon(tuple(out))


def area(body: ArcGon) -> float:
    """Exact area: shoelace over piece chords plus circular segments."""
    total = math.fsum(pc.chord_area() for pc in body.pieces)
    if not total > 0.0:
        raise DegenerateError(f"body has non-positive area {total}")
    return total


def disk(radius: float = 1.0, center=(0.0, 0.0)) -> ArcGon:
    c = _finite_point(center)
    q = math.pi / 2
    return ArcGon(tuple(Arc(c, radius, k * q, (k + 1) * q) for k in range(4)))


@dataclass(frozen=True)
class Polygon:
    """Convex polygon with counterclockwise vertices.

    Collinear vertices are tolerated; reflex ones are not.
    """

    vertices: tuple

    def __post_init__(self):
        pts = tuple(_finite_point(v) for v in self.vertices)
        object.__setattr__(self, "vertices", pts)
        n = len(pts)
        if n < 3:
            raise DegenerateError("polygon needs at least three vertices")
        xy = np.asarray(pts)
        scale = max(1.0, float(np.abs(xy).max()))
        e = np.roll(xy, -1, axis=0) - xy
        cross = e[:, 0] * np.roll(e[:, 1], -1) - e[:, 1] * np.roll(e[:, 0], -1)
        if (cross < -1e-12 * scale * scale).any():
            raise StructuralError("polygon is not convex and counterclockwise")
        if self.area() <= 0.0:
            raise DegenerateError("polygon has zero area")

    def as_array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=float)

    def area(self) -> float:
        xy = self.as_array()
        x, y = xy[:, 0], xy[:, 1]
        return 0.5 * math.fsum(x * np.roll(y, -1) - np.roll(x, -1) * y)

    def to_arcgon(self) -> ArcGon:
        return ArcGon.from_polygon(self.vertices)


# ---------------------------------------------------------------------------
# text format

HEADER = "ARCGON"
VERSION = "v1"


def dumps(body: ArcGon) -> str:
    """Serialise to the line format; floats use shortest round-trip repr."""
    lines = [f"{HEADER} {VERSION} {len(body.pieces)}"]
    for pc in body.pieces:
        if isinstance(pc, Segment):
            vals = (pc.start.x, pc.start.y, pc.end.x, pc.end.y)
            lines.append("S " + " ".join(repr(float(v)) for v in vals))
        else:
            vals = (pc.center.x, pc.center.y, pc.radius,
                    pc.angle_start, pc.angle_end)
            lines.append("A " + " ".join(repr(float(v)) for v in vals))
    return "\n".join(lines) + "\n"


def loads(text: str) -> ArcGon:
    lines = text.splitlines()
    if not lines:
        raise ArcgonFormatError("empty input", line=1)
    head = lines[0].split()
    if len(head) != 3 or head[0] != HEADER or head[1] != VERSION:
        raise ArcgonFormatError(
            f"expected '{HEADER} {VERSION} <count>', got {lines[0]!r}", line=1)
    try:
        count = int(head[2])
    except ValueError:
        raise ArcgonFormatError(f"bad piece count {head[2]!r}", line=1) from None
    body_lines = [(i + 2, ln) for i, ln in enumerate(lines[1:]) if ln.strip()]
    if len(body_lines) != count:
        raise ArcgonFormatError(
            f"header announces {count} pieces, found {len(body_lines)}", line=1)
    pieces = []
    for lineno, ln in body_lines:
        tok = ln.split()
        kind, args = tok[0], tok[1:]
        try:
            vals = [float(a) for a in args]
        except ValueError:
            raise ArcgonFormatError(f"non-numeric field in {ln!r}", line=lineno) from None
        try:
            if kind == "S" and len(vals) == 4:
                pieces.append(Segment(Point2(vals[0], vals[1]), Point2(vals[2], vals[3])))
            elif kind == "A" and len(vals) == 5:
                pieces.append(Arc(Point2(vals[0], vals[1]), vals[2], vals[3], vals[4]))
            else:
                raise ArcgonFormatError(f"unrecognised piece {ln!r}", line=lineno)
        except StructuralError as exc:
            raise ArcgonFormatError(str(exc), line=lineno) from None
    return ArcGon(tuple(pieces))

