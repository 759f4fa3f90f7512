#utils/geometry.py
from fractions import Fraction
from typing import Callable, Iterable, NamedTuple, Sequence


class HullPoint(NamedTuple):
    """A point (k, y) of the count array; y may be shifted and negative"""
    x: int
    y: int


class TangentAnswer(NamedTuple):
    vertex: HullPoint
    slope: Fraction


ORIGIN = HullPoint(0, 0)


def cross(o, a, b):
    """
    z-component of OA x OB. Positive for a counter-clockwise turn o->a->b,
    negative for clockwise, zero when collinear.
    """
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def slope(q, p):
    return Fraction(p[1] - q[1], p[0] - q[0])


def compare_slopes(q, a, b):
    """
    Sign of slope(q, a) - slope(q, b) for points a, b strictly right of q.
    Integer cross-multiplication only.
    """
    lhs = (a[1] - q[1]) * (b[0] - q[0])
    rhs = (b[1] - q[1]) * (a[0] - q[0])
    return (lhs > rhs) - (lhs < rhs)


def upper_hull(points: Iterable) -> list:
    """
    Upper convex hull of points with distinct x, left to right.

    Andrew's monotone chain on the upper side only. Collinear interior
    points are dropped, the two end points are always kept.
    """
    pts = sorted(points, key=lambda p: p[0])
    hull = []
    for p in pts:
        while len(hull) >= 2 and cross(hull[-2], hull[-1], p) >= 0:
            hull.pop()
        hull.append(p)
    return hull


def tangent_index(size: int, get: Callable[[int], Sequence], q) -> int:
    """
    Index of the largest-x vertex maximizing the slope seen from q on an
    upper hull given by an accessor over x-ascending indices [0, size).

    q must lie strictly left of every vertex. The slope sequence is
    unimodal with at most one tie, at the peak, so we search for the first
    index whose right neighbour has a strictly smaller slope.
    """
    lo, hi = 0, size - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if compare_slopes(q, get(mid + 1), get(mid)) < 0:
            hi = mid
        else:
            lo = mid + 1
    return lo


def scan_max_slope(points: Iterable, q):
    """Brute-force maximizer of slope from q, ties to the largest x"""
    best = None
    for p in points:
        if best is None:
            best = p
            continue
        sign = compare_slopes(q, p, best)
        if sign > 0 or (sign == 0 and p[0] > best[0]):
            best = p
    return best
