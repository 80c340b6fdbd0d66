"""The numba and numpy kernels must agree, and the package must run without numba."""
import math
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adrdiagram import kernels
from adrdiagram.core import polygon_hull, ArcGon
from adrdiagram.core.measure import _initial_basis
from adrdiagram.core.support import angle_grid
from adrdiagram.shapes import nonagon_C, nonagon_E, slice_body, two_cap_body

needs_numba = pytest.mark.skipif(kernels.piece_support_numba is None,
                                 reason="numba not installed")

BODIES = [nonagon_E(2.25)[1], nonagon_C(3.0)[1], slice_body(2.7), two_cap_body(1.0, 4.0)]


@st.composite
def polygons(draw):
    n = draw(st.integers(3, 14))
    pts = np.array(draw(st.lists(st.tuples(st.floats(-5, 5), st.floats(-5, 5)),
                                 min_size=n, max_size=n)))
    hull = polygon_hull(pts)
    if len(hull) < 3:
        hull = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    try:
        return ArcGon.from_polygon(hull)
    except ValueError:
        return ArcGon.from_polygon([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])


@needs_numba
@pytest.mark.parametrize("body", BODIES)
def test_piece_support_agrees(body):
    th = np.linspace(-1.0, 8.0, 3001)
    a = kernels.piece_support_numba(body.packed, th)
    b = kernels.piece_support_numpy(body.packed, th)
    assert np.allclose(a, b, rtol=0, atol=1e-14)


@needs_numba
@settings(max_examples=60, deadline=None)
@given(polygons())
def test_piece_support_agrees_on_random_polygons(body):
    th = angle_grid(256)
    assert np.allclose(kernels.piece_support_numba(body.packed, th),
                       kernels.piece_support_numpy(body.packed, th), rtol=0, atol=1e-13)


@needs_numba
@pytest.mark.parametrize("body", BODIES)
def test_golden_width_agrees(body):
    lo = np.linspace(0, math.pi, 32, endpoint=False)
    hi = lo + math.pi / 32
    ta, wa = kernels.golden_width_numba(body.packed, lo, hi, 60)
    tb, wb = kernels.golden_width_numpy(body.packed, lo, hi, 60)
    assert np.allclose(wa, wb, rtol=0, atol=1e-14)
    assert np.allclose(ta, tb, rtol=0, atol=1e-9)


@needs_numba
@pytest.mark.parametrize("body", BODIES)
@pytest.mark.parametrize("n", [64, 1024])
def test_chebyshev_lp_agrees(body, n):
    th = angle_grid(n)
    h = kernels.piece_support_numpy(body.packed, th)
    basis = np.asarray(_initial_basis(th), dtype=np.int64)
    args = (np.cos(th), np.sin(th), h, basis, 1e-12, 500)
    ra = kernels.chebyshev_lp_numba(*args)
    rb = kernels.chebyshev_lp_numpy(*args)
    assert ra[4] == rb[4] == 0
    assert np.allclose(ra[:3], rb[:3], rtol=0, atol=1e-12)
    assert sorted(ra[3]) == sorted(rb[3])


@needs_numba
@settings(max_examples=40, deadline=None)
@given(st.integers(2, 300), st.integers(0, 2 ** 32 - 1))
def test_max_pair_distance_agrees(n, seed):
    xy = np.random.default_rng(seed).normal(size=(n, 2))
    da, ia, ja = kernels.max_pair_distance_numba(xy)
    db, ib, jb = kernels.max_pair_distance_numpy(xy)
    assert da == pytest.approx(db, abs=1e-14)
    assert {ia, ja} == {ib, jb}


@needs_numba
@pytest.mark.parametrize("body", BODIES)
def test_piece_distances_agree(body):
    for p in ((0.0, 0.0), (0.3, -0.2), (-0.7, 0.4)):
        da, na = kernels.piece_distances_numba(body.packed, *p)
        db, nb = kernels.piece_distances_numpy(body.packed, *p)
        assert np.allclose(da, db, rtol=0, atol=1e-14)
        assert np.allclose(np.cos(na - nb), 1.0, atol=1e-12)


def _run(code, **env):
    full = dict(os.environ, **env)
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env=full, timeout=300)
    assert out.returncode == 0, out.stderr
    return out.stdout.strip()


PROBE = (
    "from adrdiagram import backend_name\n"
    "from adrdiagram.core import measure\n"
    "from adrdiagram.shapes import nonagon_E, nonagon_E_area\n"
    "m = measure(nonagon_E(2.3)[1], 4096)\n"
    "print(backend_name(), repr(m.area - nonagon_E_area(2.3)), repr(m.diameter), repr(m.inradius))\n"
)


def test_env_flag_selects_numpy():
    name, _, d, r = _run(PROBE, ADRDIAGRAM_NUMBA="0").split()
    assert name == "numpy"
    assert abs(float(d) - 2.3) <= 1e-9 and abs(float(r) - 1.0) <= 1e-9


def test_runs_without_numba_installed():
    blocked = "import sys\nsys.modules['numba'] = None\n" + PROBE
    name, gap, d, r = _run(blocked).split()
    assert name == "numpy"
    assert abs(float(gap)) <= 1e-12
    assert abs(float(d) - 2.3) <= 1e-9 and abs(float(r) - 1.0) <= 1e-9


@needs_numba
def test_both_backends_measure_the_same():
    a = _run(PROBE, ADRDIAGRAM_NUMBA="1").split()
    b = _run(PROBE, ADRDIAGRAM_NUMBA="0").split()
    assert a[0] == "numba" and b[0] == "numpy"
    for x, y in zip(a[1:], b[1:]):
        assert abs(float(x) - float(y)) <= 1e-12
