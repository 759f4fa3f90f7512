#utils/worstcase_engine.py
"""
Count array kept in full, [1..R], under suffix increments and right appends,
with a leader (tangent from the origin) query.

Two trees over the same positions:

* LazyCountTree holds c[k]: leaves store base values, internal nodes store
  pending uniform additions, and a point read sums tags along the leaf path.
* The hull tree stores x-coordinates only. Every node keeps the part of its
  upper hull that its parent does not use, as a chain (utils.chain), plus
  the bridge indices into its children's hulls. The root keeps its whole hull.

A suffix increment moves every point at or right of alpha up by one, which
leaves the hull of any node lying entirely on one side untouched; only the
nodes holding both alpha-1 and alpha, a single root path, get new bridges.
"""
import logging
from collections import Counter
from fractions import Fraction

from utils.alpha_tracker import DEFAULT_CAPACITY
from utils.chain import ChainStore, size
from utils.errors import ContractViolation, StreamTooLongError
from utils.geometry import ORIGIN, HullPoint, tangent_index

logger = logging.getLogger(__name__)


class LazyCountTree:
    """Range add on [l..r], point read, over positions 1..capacity"""

    def __init__(self, capacity, values=()):
        self.capacity = capacity
        self.tag = [0] * (2 * capacity)
        for k, value in enumerate(values, start=1):
            self.tag[capacity + k - 1] = value

    def value_at(self, k):
        v = self.capacity + k - 1
        total = 0
        while v:
            total += self.tag[v]
            v >>= 1
        return total

    def range_add(self, l, r, amount=1):
        lo = self.capacity + l - 1
        hi = self.capacity + r
        tag = self.tag
        while lo < hi:
            if lo & 1:
                tag[lo] += amount
                lo += 1
            if hi & 1:
                hi -= 1
                tag[hi] += amount
            lo >>= 1
            hi >>= 1

    def set_value(self, k, value):
        self.tag[self.capacity + k - 1] += value - self.value_at(k)


class WorstCaseEngine:
    """
    Starts as the count array [1] of a one-symbol text.

    The trees live over a power-of-two number of slots that doubles (with a
    full rebuild) whenever an append finds them full.
    """

    def __init__(self, capacity=DEFAULT_CAPACITY, seed=0x5EED):
        if capacity < 1:
            raise ContractViolation("capacity must be positive")
        self.capacity = capacity
        self.store = ChainStore(seed)
        self.counters = Counter()
        self.R = 1
        self._slots = 1
        self.counts = LazyCountTree(1, [1])
        self.chains = [None, self.store.single(1)]
        self.left_keep = [0, 0]
        self.right_skip = [0, 0]
        self._touched = set()

    def __len__(self):
        return self.R

    # -- counts ---------------------------------------------------------

    def value_at(self, k):
        if not 1 <= k <= self.R:
            raise ContractViolation(f"position {k} outside [1..{self.R}]")
        return self.counts.value_at(k)

    def _point(self, chain, index):
        x = self.store.get(chain, index)
        self.counters["value_reads"] += 1
        return HullPoint(x, self.counts.value_at(x))

    def points(self):
        return [HullPoint(k, self.counts.value_at(k)) for k in range(1, self.R + 1)]

    # -- hull tree --------------------------------------------------------

    def _down(self, v):
        """Hand v's full hull back to its children; v must hold its full hull"""
        if v >= self._slots:
            return
        store = self.store
        head, tail = store.split(self.chains[v], self.left_keep[v])
        # head goes back on the end of the left child, tail on the front of the right
        self.chains[2 * v] = store.join(head, self.chains[2 * v])
        self.chains[2 * v + 1] = store.join(self.chains[2 * v + 1], tail)
        self.chains[v] = None
        self._touched.update((v, 2 * v, 2 * v + 1))

    def _up(self, v):
        """Merge the children's full hulls into v, leaving them their leftovers"""
        store = self.store
        left, right = self.chains[2 * v], self.chains[2 * v + 1]
        keep, skip = self._bridge(left, right)
        # left child keeps everything past the bridge, right child everything before it
        head, left_rest = store.split(left, keep)
        right_rest, tail = store.split(right, skip)
        self.chains[2 * v] = left_rest
        self.chains[2 * v + 1] = right_rest
        self.chains[v] = store.join(head, tail)
        self.left_keep[v] = keep
        self.right_skip[v] = skip
        self._touched.update((v, 2 * v, 2 * v + 1))

    def _right_reaches(self, p, p_next, right, right_size):
        """Does some point of right lie on or above the line through p and p_next?"""
        dx = p_next.x - p.x
        dy = p_next.y - p.y

        def gain(z):
            return z.y * dx - z.x * dy

        lo, hi = 0, right_size - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if gain(self._point(right, mid + 1)) > gain(self._point(right, mid)):
                lo = mid + 1
            else:
                hi = mid
        return gain(self._point(right, lo)) >= gain(p)

    def _bridge(self, left, right):
        """
        Upper common tangent of two x-separated hulls, as (number of left
        vertices kept, number of right vertices skipped).

        The left end is the first left vertex whose outgoing edge line is
        reached by the right hull; the right end is the largest-x tangent
        point from it. Collinear vertices along the bridge are dropped.
        """
        a, b = size(left), size(right)
        if a == 0:
            return 0, 0
        if b == 0:
            return a, 0
        lo, hi = 0, a - 1
        while lo < hi:
            mid = (lo + hi) // 2
            p = self._point(left, mid)
            p_next = self._point(left, mid + 1)
            if self._right_reaches(p, p_next, right, b):
                hi = mid
            else:
                lo = mid + 1
        anchor = self._point(left, lo)
        j = tangent_index(b, lambda i: self._point(right, i), anchor)
        return lo + 1, j

    def _path_to_root(self, v):
        path = []
        while v:
            path.append(v)
            v >>= 1
        return path

    def _rebuild(self, slots):
        values = [self.counts.value_at(k) for k in range(1, self.R + 1)]
        self._slots = slots
        self.counts = LazyCountTree(slots, values)
        self.chains = [None] * (2 * slots)
        self.left_keep = [0] * (2 * slots)
        self.right_skip = [0] * (2 * slots)
        for k in range(1, self.R + 1):
            self.chains[slots + k - 1] = self.store.single(k)
        for v in range(slots - 1, 0, -1):
            self._up(v)
        self.counters["rebuilds"] += 1
        logger.debug("hull tree rebuilt over %d slots (R=%d)", slots, self.R)

    def _begin(self):
        self._touched = set()
        self._visits_before = self.store.counters["visited"]

    def _finish(self, kind):
        touched = len(self._touched)
        moved = self.store.counters["visited"] - self._visits_before
        self.counters[f"{kind}_calls"] += 1
        self.counters["nodes_touched"] += touched
        self.counters["chain_visits"] += moved
        self.last_nodes_touched = touched
        self.last_chain_visits = moved
        if touched > self.counters["max_nodes_touched"]:
            self.counters["max_nodes_touched"] = touched
        if moved > self.counters["max_chain_visits"]:
            self.counters["max_chain_visits"] = moved

    # -- operations -------------------------------------------------------

    def append_position(self):
        """Extend [1..R] by one position whose count repeats c[R]"""
        if self.R >= self.capacity:
            raise StreamTooLongError(
                f"count array longer than the configured capacity of {self.capacity}"
            )
        # full: double the slots
        if self.R == self._slots:
            self._rebuild(self._slots * 2)
        self._begin()
        k = self.R + 1
        self.counts.set_value(k, self.counts.value_at(self.R))
        leaf = self._slots + k - 1
        path = self._path_to_root(leaf >> 1)
        for v in reversed(path):
            self._down(v)
        self.chains[leaf] = self.store.single(k)
        self.R = k
        for v in path:
            self._up(v)
        self._finish("append")
        return self.R

    def suffix_increment(self, alpha):
        """c[k] += 1 for every k in [alpha..R]"""
        if not 1 <= alpha <= self.R:
            raise ContractViolation(f"alpha={alpha} outside [1..{self.R}]")
        self._begin()
        self.counts.range_add(alpha, self.R, 1)
        # hulls of nodes wholly left or right of alpha only move rigidly
        if alpha > 1:
            u = self._slots + alpha - 2
            w = u + 1
            # lowest common ancestor of leaves alpha-1 and alpha
            while u != w:
                u >>= 1
                w >>= 1
            path = self._path_to_root(u)
            for v in reversed(path):
                self._down(v)
            for v in path:
                self._up(v)
        self._finish("increment")

    def leader(self):
        """(k, c[k], c[k]/k) maximizing the ratio; ties to the largest-x hull vertex"""
        root = self.chains[1]
        index = tangent_index(size(root), lambda i: self._point(root, i), ORIGIN)
        k, c = self._point(root, index)
        return k, c, Fraction(c, k)

    def hull(self):
        """x-coordinates of the upper hull of all points"""
        return self.store.values(self.chains[1])

    def reconstruct_hull(self, v):
        """Full hull of node v, rebuilt from the stored fragments without mutation"""
        path = self._path_to_root(v)
        hull = self.store.values(self.chains[1])
        for parent, child in zip(reversed(path), reversed(path[:-1])):
            keep = self.left_keep[parent]
            stored = self.store.values(self.chains[child])
            if child == 2 * parent:
                hull = hull[:keep] + stored
            else:
                hull = stored + hull[keep:]
        return hull

    def node_interval(self, v):
        """1-based positions [lo..hi] covered by node v (may extend past R)"""
        depth_slots = self._slots
        lo = hi = v
        while lo < depth_slots:
            lo = 2 * lo
            hi = 2 * hi + 1
        return lo - depth_slots + 1, hi - depth_slots + 1

    @property
    def slots(self):
        return self._slots
