"""Support-function area, hulls, Minkowski combinations, Steiner symmetrization."""
import math

import numpy as np
import pytest

from adrdiagram.core import (ArcGon, Polygon, SupportSamples, area, convex_hull, diameter,
                             disk, hausdorff, inradius, minkowski_combination,
                             minkowski_interpolate, polygon_hull, steiner_symmetrize,
                             support_area, support_dominates, support_values,
                             to_support)
from adrdiagram.errors import DegenerateError
from adrdiagram.shapes import nonagon_C, nonagon_E, slice_body, two_cap_area, two_cap_body

from oracles import shoelace


# ---------------------------------------------------------------- support area

def test_constant_support_areas():
    assert abs(support_area(SupportSamples(4096, np.ones(4096))) - math.pi) <= 1e-6
    assert abs(support_area(SupportSamples(4096, np.full(4096, 2.5))) - math.pi * 6.25) <= 1e-9


@pytest.mark.parametrize("angle", [0.0, 0.1, 0.37, math.pi / 4])
def test_square_support_area(angle):
    c, s = math.cos(angle), math.sin(angle)
    sq = np.array([[1, 1], [-1, 1], [-1, -1], [1, -1]], float) @ [[c, s], [-s, c]]
    assert abs(support_area(to_support(ArcGon.from_polygon(sq), 4096)) - 4.0) <= 1e-3


def test_support_area_order_on_smooth_bodies():
    for body in (slice_body(2.5), nonagon_E(2.3)[1], nonagon_C(2.7)[1]):
        errs = [abs(support_area(to_support(body, n)) - area(body)) for n in (512, 1024, 2048, 4096)]
        orders = np.log2(np.array(errs[:-1]) / np.array(errs[1:]))
        assert (orders >= 1.8).all(), orders


def test_support_area_on_polygons_with_offset_origin():
    rng = np.random.default_rng(0)
    for _ in range(30):
        pts = polygon_hull(rng.normal(size=(int(rng.integers(3, 14)), 2)) * 2.0)
        if len(pts) < 3:
            continue
        body = ArcGon.from_polygon(pts)
        s = to_support(body, 4096, center=pts.mean(axis=0))
        assert abs(support_area(s) - shoelace(pts)) <= 1e-3


def test_hausdorff_of_shifted_disk():
    assert abs(hausdorff(disk(), disk(1.0, (0.3, 0.4))) - 0.5) <= 1e-3
    assert hausdorff(disk(), disk()) == 0.0


def test_support_dominance():
    assert support_dominates(slice_body(3.0), two_cap_body(1.0, 3.0))
    assert not support_dominates(two_cap_body(1.0, 3.0), slice_body(3.0))


# ---------------------------------------------------------------- hull

def test_hull_of_one_disk():
    h = convex_hull(disks=[((0.5, -1.0), 2.0)])
    assert abs(area(h) - 4 * math.pi) <= 1e-12


@pytest.mark.parametrize("D", [2.5, 4.0, 10.0])
def test_two_cap_hull_area(D):
    h = convex_hull([(-D / 2, 0), (D / 2, 0)], [((0, 0), 1.0)])
    closed = math.sqrt(D * D - 4) + math.pi - 2 * math.acos(2 / D)
    assert abs(area(h) - closed) <= 1e-12 * closed
    assert abs(two_cap_area(1.0, D) - closed) <= 1e-12 * closed


def test_two_points_have_empty_hull():
    with pytest.raises(DegenerateError):
        convex_hull([(0, 0), (1, 0)])


def test_hull_of_disks_and_points_contains_them():
    rng = np.random.default_rng(5)
    for _ in range(20):
        pts = rng.normal(size=(4, 2))
        disks = [((float(x), float(y)), float(r)) for x, y, r in
                 zip(rng.normal(size=3), rng.normal(size=3), rng.uniform(0.1, 0.8, 3))]
        h = convex_hull(pts, disks)
        for (cx, cy), r in disks:
            assert support_dominates(h, disk(r, (cx, cy)), tol=1e-9)
        th = np.linspace(0, 2 * math.pi, 1024, endpoint=False)
        h_vals = support_values(h, th)
        pt_max = (pts @ np.vstack([np.cos(th), np.sin(th)])).max(axis=0)
        assert (h_vals >= pt_max - 1e-12).all()


# ---------------------------------------------------------------- Minkowski

def test_interpolate_endpoints():
    a, b = nonagon_E(2.3)[1], two_cap_body(1.0, 2.3)
    assert hausdorff(minkowski_interpolate(a, b, 1.0), a) <= 1e-6
    assert hausdorff(minkowski_interpolate(a, b, 0.0), b) <= 1e-6


def test_interpolate_area_strictly_between():
    a, b = two_cap_body(1.0, 3.0), slice_body(3.0)
    mid = area(minkowski_interpolate(a, b, 0.5))
    assert area(a) < mid < area(b)


def test_interpolate_matches_exact_combination():
    a, b = slice_body(2.8), two_cap_body(1.0, 2.8)
    for t in (0.2, 0.5, 0.9):
        exact = minkowski_combination(a, b, t)
        assert hausdorff(minkowski_interpolate(a, b, t), exact) <= 1e-6
        assert abs(area(minkowski_interpolate(a, b, t)) - area(exact)) <= 1e-5


def test_combination_area_is_mixed_area_quadratic():
    # |tA + (1-t)B| is a quadratic polynomial in t
    a, b = nonagon_E(2.3)[1], two_cap_body(1.0, 2.3)
    ts = np.linspace(0, 1, 7)
    vals = [area(minkowski_combination(a, b, float(t))) for t in ts]
    coef = np.polyfit(ts, vals, 2)
    assert np.abs(np.polyval(coef, ts) - vals).max() <= 1e-12


def test_interpolate_area_monotone_when_nested():
    a, b = slice_body(3.0), two_cap_body(1.0, 3.0)
    assert support_dominates(a, b)
    areas = [area(minkowski_interpolate(a, b, t)) for t in np.linspace(0, 1, 11)]
    assert all(x <= y + 1e-12 for x, y in zip(areas, areas[1:]))


def test_combination_of_disks_is_a_disk():
    c = minkowski_combination(disk(1.0), disk(3.0, (2.0, 0.0)), 0.5)
    assert abs(area(c) - 4 * math.pi) <= 1e-12


def test_t_out_of_range():
    with pytest.raises(ValueError):
        minkowski_interpolate(disk(), disk(), 1.5)
    with pytest.raises(ValueError):
        minkowski_combination(disk(), disk(), -0.1)


# ---------------------------------------------------------------- Steiner

def test_right_triangle_area_kept():
    tri = Polygon(((0, 0), (2, 0), (0, 2)))
    assert abs(steiner_symmetrize(tri, 0.0).area() - 2.0) <= 1e-12


def test_symmetric_body_is_fixed():
    hexagon = Polygon(tuple((math.cos(k * math.pi / 3), 0.6 * math.sin(k * math.pi / 3))
                            for k in range(6)))
    out = steiner_symmetrize(hexagon, 0.0)
    assert hausdorff(out.to_arcgon(), hexagon.to_arcgon()) <= 1e-9


def test_steiner_idempotent_and_monotone():
    rng = np.random.default_rng(8)
    for _ in range(100):
        pts = polygon_hull(rng.normal(size=(int(rng.integers(3, 12)), 2)))
        if len(pts) < 3:
            continue
        poly = Polygon(tuple(map(tuple, pts)))
        ax = float(rng.uniform(0, 2 * math.pi))
        s1 = steiner_symmetrize(poly, ax)
        s2 = steiner_symmetrize(s1, ax)
        assert abs(s1.area() - poly.area()) <= 1e-12 * poly.area()
        assert hausdorff(s1.to_arcgon(), s2.to_arcgon()) <= 1e-9
        assert diameter(s1.to_arcgon()) <= diameter(poly.to_arcgon()) + 1e-9
        assert inradius(s1.to_arcgon())[0] >= inradius(poly.to_arcgon())[0] - 1e-9


def test_steiner_of_triangle_with_vertex_on_axis_line():
    # zero-length end chords used to collapse the output
    tri = Polygon(((-0.4473618781031078, -0.03615751127378711),
                   (0.5822707102963831, -1.1652669229810213),
                   (0.8901387328890488, -0.3394482326942175)))
    out = steiner_symmetrize(tri, 4.659417587100184)
    assert len(out.vertices) == 4
    assert abs(out.area() - tri.area()) <= 1e-12 * tri.area()
