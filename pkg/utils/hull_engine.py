#utils/hull_engine.py
"""
Point containers for the active interval of the count array.

Points are (k, c[k] - shift) with contiguous k. Updates only happen at the
x-extremes and the single query is the maximum-slope (tangent) point seen
from a query point left of every stored point.
"""
from abc import ABC, abstractmethod
from collections import Counter, deque

from utils.errors import ContractViolation, HullUnderflowError, InvariantBreach
from utils.geometry import (HullPoint, TangentAnswer, compare_slopes, cross,
                            scan_max_slope, slope, tangent_index)


class HullEngine(ABC):

    def __init__(self):
        self.counters = Counter()

    @abstractmethod
    def __len__(self):
        ...

    @abstractmethod
    def points(self):
        """All stored points, x ascending"""

    @abstractmethod
    def _peek_left(self):
        ...

    @abstractmethod
    def _peek_right(self):
        ...

    @abstractmethod
    def _insert_left(self, p):
        ...

    @abstractmethod
    def _insert_right(self, p):
        ...

    @abstractmethod
    def _delete_left(self):
        ...

    @abstractmethod
    def _tangent(self, q):
        ...

    def insert_left(self, p):
        p = HullPoint(*p)
        if p.x < 1:
            raise ContractViolation(f"x must be >= 1, got {p.x}")
        if len(self) and p.x >= self._peek_left().x:
            raise ContractViolation(
                f"insert_left at x={p.x} is not left of min x={self._peek_left().x}"
            )
        self._insert_left(p)

    def insert_right(self, p):
        p = HullPoint(*p)
        if p.x < 1:
            raise ContractViolation(f"x must be >= 1, got {p.x}")
        if len(self) and p.x != self._peek_right().x + 1:
            raise ContractViolation(
                f"insert_right at x={p.x} does not continue max x={self._peek_right().x}"
            )
        self._insert_right(p)

    def delete_left(self):
        if not len(self):
            raise HullUnderflowError("delete_left on an empty engine")
        return self._delete_left()

    def peek_left(self):
        if not len(self):
            raise HullUnderflowError("peek_left on an empty engine")
        return self._peek_left()

    def peek_right(self):
        if not len(self):
            raise HullUnderflowError("peek_right on an empty engine")
        return self._peek_right()

    def tangent_max_slope(self, q):
        if not len(self):
            raise HullUnderflowError("tangent query on an empty engine")
        q = HullPoint(*q)
        if q.x >= self._peek_left().x:
            raise ContractViolation("query point must lie left of every stored point")
        vertex = self._tangent(q)
        return TangentAnswer(vertex, slope(q, vertex))


class ScanHullEngine(HullEngine):
    """Reference engine: keeps the raw points and scans them on every query"""

    def __init__(self):
        super().__init__()
        self._points = deque()

    def __len__(self):
        return len(self._points)

    def points(self):
        return list(self._points)

    def _peek_left(self):
        return self._points[0]

    def _peek_right(self):
        return self._points[-1]

    def _insert_left(self, p):
        self._points.appendleft(p)

    def _insert_right(self, p):
        self._points.append(p)

    def _delete_left(self):
        return self._points.popleft()

    def _tangent(self, q):
        self.counters["scanned"] += len(self._points)
        return scan_max_slope(self._points, q)


class TwoPartHullEngine(HullEngine):
    """
    Production engine made of two upper-hull stacks.

    The right part only ever grows to the right, so its pops are permanent.
    The left part sees insert_left/delete_left in LIFO order; each insertion
    records the vertices it popped so that the matching deletion puts them
    back. When a deletion finds the left part empty, the right part's points
    are moved over (right to left) first. The maximizer over the union is the
    better of the two per-part maximizers, ties to the right part.

    Left-part lists keep the leftmost element at the end.
    """

    def __init__(self):
        super().__init__()
        self._left_points = []
        self._left_hull = []
        self._frames = []
        self._right_points = deque()
        self._right_hull = []

    def __len__(self):
        return len(self._left_points) + len(self._right_points)

    def points(self):
        return list(reversed(self._left_points)) + list(self._right_points)

    def hull_vertices(self):
        """Vertices of both part hulls, x ascending"""
        return list(reversed(self._left_hull)) + list(self._right_hull)

    def _peek_left(self):
        if self._left_points:
            return self._left_points[-1]
        return self._right_points[0]

    def _peek_right(self):
        if self._right_points:
            return self._right_points[-1]
        return self._left_points[0]

    def _insert_left(self, p):
        hull = self._left_hull
        popped = []
        while len(hull) >= 2 and cross(p, hull[-1], hull[-2]) >= 0:
            popped.append(hull.pop())
        hull.append(p)
        self._frames.append(popped)
        self._left_points.append(p)
        self.counters["pops"] += len(popped)

    def _insert_right(self, p):
        hull = self._right_hull
        while len(hull) >= 2 and cross(hull[-2], hull[-1], p) >= 0:
            hull.pop()
            self.counters["pops"] += 1
        hull.append(p)
        self._right_points.append(p)

    def _delete_left(self):
        if not self._left_points:
            self.counters["migrations"] += len(self._right_points)
            moved = self._right_points
            self._right_points = deque()
            self._right_hull = []
            for p in reversed(moved):
                self._insert_left(p)
        p = self._left_points.pop()
        top = self._left_hull.pop()
        if top != p:
            raise InvariantBreach("leftmost point must top the left hull")
        popped = self._frames.pop()
        for v in reversed(popped):
            self._left_hull.append(v)
        self.counters["restores"] += len(popped)
        return p

    def _tangent(self, q):
        best = None
        left = self._left_hull
        if left:
            size = len(left)
            best = left[size - 1 - tangent_index(size, lambda i: left[size - 1 - i], q)]
        right = self._right_hull
        if right:
            candidate = right[tangent_index(len(right), right.__getitem__, q)]
            if best is None or compare_slopes(q, candidate, best) >= 0:
                best = candidate
        return best


ENGINES = {
    "scan": ScanHullEngine,
    "two_part": TwoPartHullEngine,
}


def make_hull_engine(kind="two_part"):
    try:
        return ENGINES[kind]()
    except KeyError:
        raise ContractViolation(f"unknown hull engine {kind!r}") from None
