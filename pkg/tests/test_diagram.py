import math

import numpy as np
import pytest

from adrdiagram.core import dumps, measure, support_dominates
from adrdiagram.diagram import (DiagramPoint, MinkowskiPath, ShrinkPath, classical_bounds_ok,
                                column_abscissae, column_endpoints, diagram_fill, fill_column,
                                in_band, lower_branch_gap, lower_curve_dominance, path_for,
                                psi, random_convex_body, x_star, y_lower, y_upper)
from adrdiagram.errors import DomainError
from adrdiagram.render import to_csv, to_svg
from adrdiagram.shapes import d_star, nonagon_E_area, slice_area, two_cap_area


def test_y_upper_examples():
    assert y_upper(1.0) == 1.0
    assert y_upper(0.0) == 0.0
    assert abs(y_upper(2 / 3) - math.pi / two_cap_area(1.0, 3.0)) <= 1e-12
    want = math.pi * 0.5 / (0.5 * (math.pi - 2 * math.acos(0.5)) + math.sqrt(3))
    assert abs(y_upper(0.5) - want) <= 1e-15


def test_y_lower_examples():
    assert abs(y_lower(1.0) - 1.0) <= 1e-12
    assert lower_branch_gap() <= 1e-9
    assert abs(y_lower(2 / 3) - math.pi / slice_area(3.0)) <= 1e-12
    assert abs(y_lower(2 / 2.2) - math.pi / nonagon_E_area(2.2)) <= 1e-12
    assert abs(x_star() - 2 / d_star()) <= 1e-15


@pytest.mark.parametrize("bad", [-0.1, 1.01])
def test_curve_domain(bad):
    with pytest.raises(DomainError):
        y_upper(bad)
    with pytest.raises(DomainError):
        y_lower(bad)


def test_curves_ordered_and_continuous():
    xs = np.linspace(1e-4, 1.0, 10_000)
    up = np.array([y_upper(float(x)) for x in xs])
    lo = np.array([y_lower(float(x)) for x in xs])
    assert (up[:-1] > lo[:-1]).all()
    assert abs(up[-1] - lo[-1]) <= 1e-12
    assert np.abs(np.diff(lo)).max() < 1e-3 and np.abs(np.diff(up)).max() < 1e-3


def test_psi_examples():
    assert abs(psi(2.0, 1.0) - math.pi) <= 1e-12
    assert abs(psi(3.0, 1.0) - slice_area(3.0)) <= 1e-12
    assert abs(psi(2.2, 1.0) - nonagon_E_area(2.2)) <= 1e-12
    assert math.isclose(psi(6.0, 2.0), 4 * psi(3.0, 1.0), rel_tol=1e-12)
    with pytest.raises(DomainError):
        psi(1.5, 1.0)


def test_classical_bounds_examples():
    assert classical_bounds_ok(DiagramPoint(1.0, 1.0, "TwoCap"))
    assert not classical_bounds_ok(DiagramPoint(0.5, 0.2, "x"))


def test_dominance_report_is_empty():
    assert lower_curve_dominance() == []


def test_random_body_deterministic_and_inside():
    a, b = random_convex_body(123), random_convex_body(123)
    assert dumps(a) == dumps(b)
    assert dumps(random_convex_body(124)) != dumps(a)
    for seed in range(200):
        m = measure(random_convex_body(seed))
        p = DiagramPoint(m.x, m.y, f"RandomBody({seed})")
        assert classical_bounds_ok(p, 1e-6) and in_band(m.x, m.y, 1e-6)
    with pytest.raises(ValueError):
        random_convex_body(1, n_points=2)


def test_column_at_one_is_the_disk():
    rep = fill_column(1.0, 5, 7)
    assert [(p.x, p.y) for p in rep.points] == [(1.0, 1.0)]


def test_column_endpoints_at_two_thirds():
    lo, hi = column_endpoints(2 / 3)
    assert abs(lo.y - math.pi / slice_area(3.0)) <= 1e-12 and lo.witness == "Slice"
    assert abs(hi.y - math.pi / two_cap_area(1.0, 3.0)) <= 1e-12 and hi.witness == "TwoCap"
    assert column_endpoints(0.95)[0].witness == "NonagonE"


def test_paths_switch_at_d_star():
    assert isinstance(path_for(3.0), MinkowskiPath)
    assert isinstance(path_for(2.2), ShrinkPath)


@pytest.mark.parametrize("D", [2.1, 2.35])
def test_shrink_path_keeps_r_and_D(D):
    path = ShrinkPath(D)
    areas = []
    for u in np.linspace(0, 1, 33):
        m = measure(path.body(float(u)))
        assert abs(m.inradius - 1) <= 1e-6 and abs(m.diameter - D) <= 1e-6
        areas.append(m.area)
    assert abs(areas[0] - nonagon_E_area(D)) <= 1e-9
    assert abs(areas[-1] - two_cap_area(1.0, D)) <= 1e-9


def test_minkowski_path_nested_and_monotone():
    path = MinkowskiPath(3.0)
    areas = [path.body(float(u)).area() for u in np.linspace(0, 1, 17)]
    assert all(a >= b - 1e-12 for a, b in zip(areas, areas[1:]))
    mid = path.body(0.5)
    assert support_dominates(path.big, mid) and support_dominates(mid, path.small)


def test_fill_column_certifies_every_point():
    for x in (0.3, 2 / 3, 0.9):
        rep = fill_column(x, 6, seed=7, column=3)
        assert len(rep.points) == 8
        assert rep.samples.shape == (256, 4)
        assert rep.max_inradius_error <= 1e-6 and rep.max_diameter_error <= 1e-6
        for p in rep.points:
            eps = 1e-9 if p.analytic else 1e-6
            assert in_band(p.x, p.y, eps) and classical_bounds_ok(p, eps)
            assert abs(p.x - x) <= 1e-6


def test_column_grid():
    xs = column_abscissae(4)
    assert np.allclose(xs, [0.2, 0.4, 0.6, 0.8])
    with pytest.raises(ValueError):
        diagram_fill(1, 2, 7)


def test_small_fill_is_sorted_and_seed_stable():
    a = diagram_fill(3, 2, 11, workers=1)
    b = diagram_fill(3, 2, 11, workers=1)
    assert to_csv(a) == to_csv(b)
    keys = [(p.x, p.y, p.witness) for p in a]
    assert keys == sorted(keys)
    assert len(a) == 3 * 4


def test_render_formats():
    pts = [DiagramPoint(0.5, 0.6, "Slice"), DiagramPoint(1.0, 1.0, "TwoCap")]
    csv = to_csv(pts).splitlines()
    assert csv[0] == "x,y,witness" and csv[1] == "0.5,0.59999999999999998,Slice"
    svg = to_svg(pts)
    assert 'width="1000" height="1000"' in svg
    assert svg.count('class="comparator"') == 2
    assert svg.count("<circle") == 2 and 'r="2"' in svg
    assert svg.count("stroke-dasharray") == 2
