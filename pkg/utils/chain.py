#utils/chain.py
"""
Concatenable queues: ordered sequences supporting split at an index and
join in O(log n) expected time, implemented as an implicit treap (a
Cartesian tree keyed by position, balanced by random weights).

A chain is just its root node; None is the empty chain.
"""
import random
from collections import Counter


class ChainNode:
    __slots__ = ("value", "weight", "left", "right", "size")

    def __init__(self, value, weight):
        self.value = value
        self.weight = weight
        self.left = None
        self.right = None
        self.size = 1


def size(node):
    return node.size if node is not None else 0


class ChainStore:
    """Factory and operations for chains; counts every node it visits"""

    def __init__(self, seed=0x5EED):
        self.rng = random.Random(seed)
        self.counters = Counter()

    def _update(self, node):
        node.size = 1 + size(node.left) + size(node.right)

    def single(self, value):
        return ChainNode(value, self.rng.random())

    def split(self, node, k):
        """Split into (first k values, the rest)"""
        if node is None:
            return None, None
        self.counters["visited"] += 1
        if size(node.left) >= k:
            left, right = self.split(node.left, k)
            node.left = right
            self._update(node)
            return left, node
        left, right = self.split(node.right, k - size(node.left) - 1)
        node.right = left
        self._update(node)
        return node, right

    def join(self, left, right):
        if left is None:
            return right
        if right is None:
            return left
        self.counters["visited"] += 1
        if left.weight > right.weight:
            left.right = self.join(left.right, right)
            self._update(left)
            return left
        right.left = self.join(left, right.left)
        self._update(right)
        return right

    def get(self, node, index):
        """Value at 0-based index"""
        while node is not None:
            self.counters["lookups"] += 1
            left_size = size(node.left)
            if index < left_size:
                node = node.left
            elif index == left_size:
                return node.value
            else:
                index -= left_size + 1
                node = node.right
        raise IndexError(index)

    def values(self, node):
        out = []
        stack = []
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            out.append(node.value)
            node = node.right
        return out
