"""Bracketing root finder."""
import math

from .errors import DomainError


def bisect(f, lo: float, hi: float, max_iter: int = 2000) -> float:
    """Root of ``f`` in [lo, hi] by bisection, run until the bracket stops
    shrinking in floating point. ``f(lo)`` and ``f(hi)`` must not share a
    strict sign."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if math.copysign(1.0, flo) == math.copysign(1.0, fhi):
        raise DomainError(f"no sign change on [{lo}, {hi}]: f = {flo}, {fhi}")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if math.copysign(1.0, fm) == math.copysign(1.0, flo):
            lo, flo = mid, fm
        else:
            hi = mid
    return lo if abs(flo) <= abs(f(hi)) else hi
