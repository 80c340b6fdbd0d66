"""Hot numeric kernels, each in a numba-loop and a numpy flavour.

Bodies reach these kernels as a packed ``(m, 10)`` float array, one row per
boundary piece::

    kind, x0, y0, x1, y1, cx, cy, radius, angle_start, sweep

with ``kind`` 0 for a segment and 1 for a counterclockwise arc. Segments
leave the arc columns at zero.

The public names at the bottom of the module point at the numba versions
when ``_accel.USE_NUMBA`` is set and at the numpy versions otherwise; both
sets stay importable under ``*_numba`` / ``*_numpy`` for tests and
benchmarks.
"""
import math

import numpy as np

from . import _accel

TWO_PI = 2.0 * math.pi
KIND_SEGMENT = 0.0
KIND_ARC = 1.0

_CHUNK = 1024


# --------------------------------------------------------------------------
# support function of a packed piece array


def _piece_support_loop(pieces, thetas):
    n = thetas.shape[0]
    m = pieces.shape[0]
    out = np.empty(n)
    for k in range(n):
        th = thetas[k]
        c = math.cos(th)
        s = math.sin(th)
        best = -np.inf
        for i in range(m):
            v0 = pieces[i, 1] * c + pieces[i, 2] * s
            v1 = pieces[i, 3] * c + pieces[i, 4] * s
            v = v0 if v0 > v1 else v1
            if pieces[i, 0] == KIND_ARC:
                d = (th - pieces[i, 8]) % TWO_PI
                if d <= pieces[i, 9]:
                    v = pieces[i, 5] * c + pieces[i, 6] * s + pieces[i, 7]
            if v > best:
                best = v
        out[k] = best
    return out


def _piece_support_np(pieces, thetas):
    thetas = np.asarray(thetas, dtype=float)
    out = np.empty(thetas.shape[0])
    is_arc = pieces[:, 0] == KIND_ARC
    for lo in range(0, thetas.shape[0], _CHUNK):
        th = thetas[lo:lo + _CHUNK, None]
        c = np.cos(th)
        s = np.sin(th)
        v = np.maximum(pieces[:, 1] * c + pieces[:, 2] * s,
                       pieces[:, 3] * c + pieces[:, 4] * s)
        inside = is_arc & (np.mod(th - pieces[:, 8], TWO_PI) <= pieces[:, 9])
        arc_v = pieces[:, 5] * c + pieces[:, 6] * s + pieces[:, 7]
        v = np.where(inside, arc_v, v)
        out[lo:lo + _CHUNK] = v.max(axis=1)
    return out


# --------------------------------------------------------------------------
# golden-section polish of the width w(θ) = h(θ) + h(θ + π)

_GOLD = 0.5 * (math.sqrt(5.0) - 1.0)


def _width_at(pieces, th):
    pair = np.empty(2)
    pair[0] = th
    pair[1] = th + math.pi
    h = _piece_support_loop(pieces, pair)
    return h[0] + h[1]


def _golden_width_loop(pieces, lo, hi, iters):
    q = lo.shape[0]
    best_theta = np.empty(q)
    best_width = np.empty(q)
    for j in range(q):
        a = lo[j]
        b = hi[j]
        x1 = b - _GOLD * (b - a)
        x2 = a + _GOLD * (b - a)
        f1 = _width_at(pieces, x1)
        f2 = _width_at(pieces, x2)
        for _ in range(iters):
            if f1 < f2:
                a = x1
                x1 = x2
                f1 = f2
                x2 = a + _GOLD * (b - a)
                f2 = _width_at(pieces, x2)
            else:
                b = x2
                x2 = x1
                f2 = f1
                x1 = b - _GOLD * (b - a)
                f1 = _width_at(pieces, x1)
        if f1 > f2:
            best_theta[j] = x1
            best_width[j] = f1
        else:
            best_theta[j] = x2
            best_width[j] = f2
    return best_theta, best_width


def _golden_width_np(pieces, lo, hi, iters):
    a = np.array(lo, dtype=float)
    b = np.array(hi, dtype=float)
    q = a.shape[0]

    def width(x):
        h = _piece_support_np(pieces, np.concatenate([x, x + math.pi]))
        return h[:q] + h[q:]

    x1 = b - _GOLD * (b - a)
    x2 = a + _GOLD * (b - a)
    f1 = width(x1)
    f2 = width(x2)
    for _ in range(iters):
        right = f1 < f2
        a = np.where(right, x1, a)
        b = np.where(right, b, x2)
        nx1 = np.where(right, x2, b - _GOLD * (b - a))
        nx2 = np.where(right, a + _GOLD * (b - a), x1)
        # one fresh evaluation per candidate: the other point is reused
        fresh = np.where(right, nx2, nx1)
        ff = width(fresh)
        f1, f2 = np.where(right, f2, ff), np.where(right, ff, f1)
        x1, x2 = nx1, nx2
    take1 = f1 > f2
    return np.where(take1, x1, x2), np.where(take1, f1, f2)


# --------------------------------------------------------------------------
# Chebyshev-centre LP:  maximise t  s.t.  c·u_k + t <= h_k
#
# Solved through its dual  min Σ h_k λ_k,  Σ λ_k (u_k, 1) = (0, 0, 1),
# λ >= 0, by a revised simplex whose basis is always three constraints.
# The simplex multipliers of an optimal basis are exactly (c_x, c_y, t).


def _inv3(m):
    a, b, c = m[0, 0], m[0, 1], m[0, 2]
    d, e, f = m[1, 0], m[1, 1], m[1, 2]
    g, h, i = m[2, 0], m[2, 1], m[2, 2]
    co00 = e * i - f * h
    co01 = -(d * i - f * g)
    co02 = d * h - e * g
    det = a * co00 + b * co01 + c * co02
    out = np.empty((3, 3))
    out[0, 0] = co00 / det
    out[1, 0] = co01 / det
    out[2, 0] = co02 / det
    out[0, 1] = -(b * i - c * h) / det
    out[1, 1] = (a * i - c * g) / det
    out[2, 1] = -(a * h - b * g) / det
    out[0, 2] = (b * f - c * e) / det
    out[1, 2] = -(a * f - c * d) / det
    out[2, 2] = (a * e - b * d) / det
    return out, det


def _lp_duals(ux, uy, h, basis):
    bm = np.empty((3, 3))
    for j in range(3):
        bm[0, j] = ux[basis[j]]
        bm[1, j] = uy[basis[j]]
        bm[2, j] = 1.0
    binv, det = _inv3(bm)
    # y^T = h_B^T B^{-1}
    y = np.zeros(3)
    for r in range(3):
        for j in range(3):
            y[r] += h[basis[j]] * binv[j, r]
    # basic dual weights λ_B = B^{-1} (0, 0, 1)
    lam = np.empty(3)
    for j in range(3):
        lam[j] = binv[j, 2]
    return binv, y, lam, det


def _chebyshev_lp_loop(ux, uy, h, basis0, tol, max_iter):
    m = h.shape[0]
    basis = basis0.copy()
    binv, y, lam, det = _lp_duals(ux, uy, h, basis)
    status = 0
    it = 0
    bland = False
    stall = 0
    last_obj = y[2]
    while True:
        if it >= max_iter:
            status = 2
            break
        enter = -1
        most = -tol
        for k in range(m):
            r = h[k] - ux[k] * y[0] - uy[k] * y[1] - y[2]
            if r < most:
                enter = k
                if bland:
                    break
                most = r
        if enter < 0:
            break
        d = np.empty(3)
        for j in range(3):
            d[j] = binv[j, 0] * ux[enter] + binv[j, 1] * uy[enter] + binv[j, 2]
        leave = -1
        best = np.inf
        for j in range(3):
            if d[j] > 1e-14:
                ratio = lam[j] / d[j]
                if ratio < best:
                    best = ratio
                    leave = j
        if leave < 0:
            status = 1
            break
        basis[leave] = enter
        binv, y, lam, det = _lp_duals(ux, uy, h, basis)
        it += 1
        if y[2] < last_obj - 1e-15:
            stall = 0
            last_obj = y[2]
        else:
            stall += 1
            if stall > 50:
                bland = True
    return y[0], y[1], y[2], basis, status, it


def _chebyshev_lp_np(ux, uy, h, basis0, tol, max_iter):
    basis = np.array(basis0, dtype=np.int64)
    binv, y, lam, det = _lp_duals(ux, uy, h, basis)
    status = 0
    it = 0
    bland = False
    stall = 0
    last_obj = y[2]
    while True:
        if it >= max_iter:
            status = 2
            break
        r = h - ux * y[0] - uy * y[1] - y[2]
        if bland:
            neg = np.flatnonzero(r < -tol)
            if neg.size == 0:
                break
            enter = int(neg[0])
        else:
            enter = int(np.argmin(r))
            if r[enter] >= -tol:
                break
        d = binv @ np.array([ux[enter], uy[enter], 1.0])
        ok = d > 1e-14
        if not ok.any():
            status = 1
            break
        ratios = np.where(ok, lam / np.where(ok, d, 1.0), np.inf)
        leave = int(np.argmin(ratios))
        basis[leave] = enter
        binv, y, lam, det = _lp_duals(ux, uy, h, basis)
        it += 1
        if y[2] < last_obj - 1e-15:
            stall = 0
            last_obj = y[2]
        else:
            stall += 1
            if stall > 50:
                bland = True
    return y[0], y[1], y[2], basis, status, it


# --------------------------------------------------------------------------
# brute-force maximum pairwise distance (diameter oracle)


def _max_pair_distance_loop(xy):
    n = xy.shape[0]
    best = 0.0
    bi = 0
    bj = 0
    for i in range(n):
        xi = xy[i, 0]
        yi = xy[i, 1]
        for j in range(i + 1, n):
            dx = xy[j, 0] - xi
            dy = xy[j, 1] - yi
            d2 = dx * dx + dy * dy
            if d2 > best:
                best = d2
                bi = i
                bj = j
    return math.sqrt(best), bi, bj


def _max_pair_distance_np(xy):
    xy = np.asarray(xy, dtype=float)
    n = xy.shape[0]
    best = 0.0
    bi = bj = 0
    for lo in range(0, n, _CHUNK):
        blk = xy[lo:lo + _CHUNK]
        d2 = ((blk[:, None, :] - xy[None, :, :]) ** 2).sum(axis=2)
        k = int(np.argmax(d2))
        i, j = divmod(k, n)
        if d2[i, j] > best:
            best = float(d2[i, j])
            bi, bj = lo + i, j
    if bi > bj:
        bi, bj = bj, bi
    return math.sqrt(best), bi, bj


# --------------------------------------------------------------------------
# distance from a point to every piece (inradius polish)


def _piece_distances_loop(pieces, px, py):
    """Distance from (px, py) to each piece, plus the outward normal angle
    of the nearest point of that piece."""
    m = pieces.shape[0]
    dist = np.empty(m)
    normal = np.empty(m)
    for i in range(m):
        x0 = pieces[i, 1]
        y0 = pieces[i, 2]
        x1 = pieces[i, 3]
        y1 = pieces[i, 4]
        if pieces[i, 0] == KIND_ARC:
            cx = pieces[i, 5]
            cy = pieces[i, 6]
            rad = pieces[i, 7]
            ang = math.atan2(py - cy, px - cx)
            if (ang - pieces[i, 8]) % TWO_PI <= pieces[i, 9]:
                dist[i] = abs(rad - math.hypot(px - cx, py - cy))
                normal[i] = ang
                continue
            d0 = math.hypot(x0 - px, y0 - py)
            d1 = math.hypot(x1 - px, y1 - py)
            if d0 < d1:
                dist[i] = d0
                normal[i] = math.atan2(y0 - py, x0 - px)
            else:
                dist[i] = d1
                normal[i] = math.atan2(y1 - py, x1 - px)
        else:
            dx = x1 - x0
            dy = y1 - y0
            ll = dx * dx + dy * dy
            s = ((px - x0) * dx + (py - y0) * dy) / ll
            if s < 0.0:
                s = 0.0
            elif s > 1.0:
                s = 1.0
            qx = x0 + s * dx
            qy = y0 + s * dy
            dist[i] = math.hypot(qx - px, qy - py)
            if 0.0 < s < 1.0:
                normal[i] = math.atan2(-dx, dy)
            else:
                normal[i] = math.atan2(qy - py, qx - px)
    return dist, normal


def _piece_distances_np(pieces, px, py):
    kind = pieces[:, 0]
    x0, y0, x1, y1 = pieces[:, 1], pieces[:, 2], pieces[:, 3], pieces[:, 4]
    cx, cy, rad = pieces[:, 5], pieces[:, 6], pieces[:, 7]
    dx = x1 - x0
    dy = y1 - y0
    ll = np.where(kind == KIND_ARC, 1.0, dx * dx + dy * dy)
    s = np.clip(((px - x0) * dx + (py - y0) * dy) / ll, 0.0, 1.0)
    qx = x0 + s * dx
    qy = y0 + s * dy
    seg_d = np.hypot(qx - px, qy - py)
    seg_n = np.where((s > 0.0) & (s < 1.0), np.arctan2(-dx, dy),
                     np.arctan2(qy - py, qx - px))
    ang = np.arctan2(py - cy, px - cx)
    inside = np.mod(ang - pieces[:, 8], TWO_PI) <= pieces[:, 9]
    d0 = np.hypot(x0 - px, y0 - py)
    d1 = np.hypot(x1 - px, y1 - py)
    end_d = np.minimum(d0, d1)
    end_n = np.where(d0 < d1, np.arctan2(y0 - py, x0 - px),
                     np.arctan2(y1 - py, x1 - px))
    arc_d = np.where(inside, np.abs(rad - np.hypot(px - cx, py - cy)), end_d)
    arc_n = np.where(inside, ang, end_n)
    is_arc = kind == KIND_ARC
    return np.where(is_arc, arc_d, seg_d), np.where(is_arc, arc_n, seg_n)


# --------------------------------------------------------------------------
# dispatch
#
# The loop kernels call small helpers; under numba those helpers must be
# jitted too, so the loop functions are rebuilt against jitted copies in a
# private namespace. The numpy kernels keep using the plain helpers.


def _build_numba():
    nb = _accel.numba
    jit = dict(cache=True, nogil=True)
    ns = dict(globals())
    for name in ("_inv3", "_lp_duals", "_piece_support_loop", "_width_at",
                 "_golden_width_loop", "_chebyshev_lp_loop",
                 "_max_pair_distance_loop", "_piece_distances_loop"):
        fn = globals()[name]
        clone = type(fn)(fn.__code__, ns, fn.__name__, fn.__defaults__,
                         fn.__closure__)
        ns[name] = nb.njit(**jit)(clone)
    return (ns["_piece_support_loop"], ns["_golden_width_loop"],
            ns["_chebyshev_lp_loop"], ns["_max_pair_distance_loop"],
            ns["_piece_distances_loop"])


if _accel.NUMBA_IMPORTABLE:
    (piece_support_numba, golden_width_numba, chebyshev_lp_numba,
     max_pair_distance_numba, piece_distances_numba) = _build_numba()
else:  # pragma: no cover - depends on the environment
    piece_support_numba = golden_width_numba = chebyshev_lp_numba = None
    max_pair_distance_numba = piece_distances_numba = None

piece_support_numpy = _piece_support_np
golden_width_numpy = _golden_width_np
chebyshev_lp_numpy = _chebyshev_lp_np
max_pair_distance_numpy = _max_pair_distance_np
piece_distances_numpy = _piece_distances_np

if _accel.USE_NUMBA:
    piece_support = piece_support_numba
    golden_width = golden_width_numba
    chebyshev_lp = chebyshev_lp_numba
    max_pair_distance = max_pair_distance_numba
    piece_distances = piece_distances_numba
else:
    piece_support = piece_support_numpy
    golden_width = golden_width_numpy
    chebyshev_lp = chebyshev_lp_numpy
    max_pair_distance = max_pair_distance_numpy
    piece_distances = piece_distances_numpy
