#utils/alpha_tracker.py
import logging

from utils.errors import ContractViolation, StreamTooLongError

logger = logging.getLogger(__name__)

DEFAULT_CAPACITY = 2**32 - 1

ROOT = 0
OPEN = -1  # leaf edges end at the current position


def to_symbol(symbol):
    """Normalize an int byte, a 1-byte bytes object or a 1-char latin-1 str"""
    if isinstance(symbol, int):
        value = symbol
    elif isinstance(symbol, (bytes, bytearray)) and len(symbol) == 1:
        value = symbol[0]
    elif isinstance(symbol, str) and len(symbol) == 1:
        value = ord(symbol)
    else:
        raise ContractViolation(f"not a single symbol: {symbol!r}")
    if not 0 <= value <= 255:
        raise ContractViolation(f"symbol {value} is not a byte")
    return value


class AlphaTracker:
    """
    Online suffix tree (Ukkonen) over a byte stream.

    After each pushed byte, alpha is the length of the shortest suffix of
    the text read so far that has no earlier occurrence. Overlapping
    occurrences count. The tree stays implicit: no terminator is appended.

    Edges are stored on their child node as a half-open text range
    [start, end); leaves keep end == OPEN.
    """

    def __init__(self, alphabet_hint=256, capacity=DEFAULT_CAPACITY):
        if capacity < 1:
            raise ContractViolation("capacity must be positive")
        self.alphabet_hint = alphabet_hint
        self.capacity = capacity
        self.text = bytearray()

        self.start = [0]
        self.end = [0]
        self.link = [ROOT]
        self.depth = [0]
        self.children = [{}]

        self.active_node = ROOT
        self.active_edge = 0
        self.active_length = 0
        self.remainder = 0

        self.alpha = None
        self.operations = 0

    def __len__(self):
        return len(self.text)

    @property
    def position(self):
        return len(self.text)

    @property
    def node_count(self):
        return len(self.start)

    @property
    def active_depth(self):
        """String depth of the active point"""
        return self.depth[self.active_node] + self.active_length

    def _new_node(self, start, end, depth=0):
        self.start.append(start)
        self.end.append(end)
        self.link.append(ROOT)
        self.depth.append(depth)
        self.children.append({})
        return len(self.start) - 1

    def _edge_length(self, node, pos):
        end = self.end[node]
        if end == OPEN:
            end = pos + 1
        return end - self.start[node]

    def push(self, symbol):
        if len(self.text) >= self.capacity:
            raise StreamTooLongError(
                f"stream longer than the configured capacity of {self.capacity}"
            )
        c = to_symbol(symbol)
        text = self.text
        text.append(c)
        pos = len(text) - 1
        self.remainder += 1
        last_new = ROOT

        while self.remainder > 0:
            self.operations += 1
            if self.active_length == 0:
                self.active_edge = pos
            edge_symbol = text[self.active_edge]
            nxt = self.children[self.active_node].get(edge_symbol)

            if nxt is None:
                leaf = self._new_node(pos, OPEN)
                self.children[self.active_node][edge_symbol] = leaf
                if last_new != ROOT:
                    self.link[last_new] = self.active_node
                    last_new = ROOT
            else:
                edge_len = self._edge_length(nxt, pos)
                if self.active_length >= edge_len:
                    # walk down
                    self.active_edge += edge_len
                    self.active_length -= edge_len
                    self.active_node = nxt
                    continue

                if text[self.start[nxt] + self.active_length] == c:
                    # current suffix already occurs: the rest are implicit
                    self.active_length += 1
                    if last_new != ROOT:
                        self.link[last_new] = self.active_node
                        last_new = ROOT
                    break

                split_start = self.start[nxt]
                split = self._new_node(
                    split_start,
                    split_start + self.active_length,
                    self.depth[self.active_node] + self.active_length,
                )
                self.children[self.active_node][edge_symbol] = split
                leaf = self._new_node(pos, OPEN)
                self.children[split][c] = leaf
                self.start[nxt] = split_start + self.active_length
                self.children[split][text[self.start[nxt]]] = nxt

                if last_new != ROOT:
                    self.link[last_new] = split
                last_new = split

            self.remainder -= 1
            if self.active_node == ROOT and self.active_length > 0:
                self.active_length -= 1
                self.active_edge = pos - self.remainder + 1
            elif self.active_node != ROOT:
                self.active_node = self.link[self.active_node]

        self.alpha = self.remainder + 1
        return self.alpha

    def extend(self, data):
        """Push every byte of data, returning the alpha sequence"""
        return [self.push(b) for b in data]
