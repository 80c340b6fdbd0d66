"""Time the numba and numpy versions of each hot kernel on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 5]

Outputs are compared before timing, so a speedup is never reported for
kernels that disagree.
"""
import argparse
import math
import timeit

import numpy as np

from adrdiagram import kernels
from adrdiagram.core.measure import _initial_basis
from adrdiagram.core.support import angle_grid
from adrdiagram.shapes import nonagon_E, slice_body


def cases():
    ke = nonagon_E(2.3)[1].packed
    sl = slice_body(3.0).packed
    th = angle_grid(8192)
    lo = np.linspace(0.0, math.pi, 64, endpoint=False)
    hi = lo + math.pi / 64
    h = kernels.piece_support_numpy(ke, th)
    ux, uy = np.cos(th), np.sin(th)
    basis = np.asarray(_initial_basis(th), dtype=np.int64)
    rng = np.random.default_rng(0)
    cloud = rng.normal(size=(2000, 2))
    px, py = 0.01, -0.02
    return {
        "piece_support (8192 angles)": ((ke, th), "piece_support"),
        "golden_width (64 brackets)": ((sl, lo, hi, 60), "golden_width"),
        "chebyshev_lp (8192 rows)": ((ux, uy, h, basis, 1e-12, 500), "chebyshev_lp"),
        "max_pair_distance (2000 pts)": ((cloud,), "max_pair_distance"),
        "piece_distances (9 pieces)": ((ke, px, py), "piece_distances"),
    }


def _same(a, b):
    a = a if isinstance(a, tuple) else (a,)
    b = b if isinstance(b, tuple) else (b,)
    return all(np.allclose(np.asarray(x, float), np.asarray(y, float),
                           rtol=1e-12, atol=1e-12) for x, y in zip(a, b))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if kernels.piece_support_numba is None:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'kernel':32s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for label, (inputs, name) in cases().items():
        fnp = getattr(kernels, name + "_numpy")
        fnb = getattr(kernels, name + "_numba")
        if not _same(fnp(*inputs), fnb(*inputs)):  # also triggers compilation
            raise SystemExit(f"{name}: backends disagree")
        t = {}
        for tag, fn in (("np", fnp), ("nb", fnb)):
            timer = timeit.Timer(lambda: fn(*inputs))
            n, _ = timer.autorange()
            t[tag] = min(timer.repeat(args.repeat, n)) / n * 1e3
        print(f"{label:32s} {t['np']:10.3f} {t['nb']:10.3f} {t['np'] / t['nb']:7.1f}x")


if __name__ == "__main__":
    main()
