#utils/count_oracle.py
"""
Brute-force reference values for the substring count array of a text.

Everything here is quadratic (or worse) and meant for test-scale inputs:
the counts c[k], alpha, beta, the interval borders L and R, delta and the
largest maximizing length. Two independently coded routes exist for counts,
alpha and beta so that they can be cross-checked against each other.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from utils.errors import EmptyInputError

VIOLATION_SHAPE = "(i) strict increase then (ii) plateau ordering"
VIOLATION_TAIL = "(iii) unit decrease down to c[n]=1"
VIOLATION_ALPHA_GE_BETA = "(iv) alpha>=beta implies L=beta and R=alpha"
VIOLATION_ALPHA_LE_BETA = "(v) alpha<=beta implies L>=alpha and R=beta"
VIOLATION_LEMMA_BOUND = "delta <= n/log_sigma(n) bound"


def _as_bytes(text):
    if isinstance(text, str):
        text = text.encode("latin-1")
    data = bytes(text)
    if not data:
        raise EmptyInputError("text must be nonempty")
    return data


@dataclass
class CountProfile:
    counts: List[int]
    alpha: int
    beta: int
    L: int
    R: int
    delta: Fraction
    k_tilde: int

    @property
    def n(self):
        return len(self.counts)


def counts(text):
    """c[k] for k = 1..n by enumerating every length-k substring into a set"""
    data = _as_bytes(text)
    n = len(data)
    return [len({data[i:i + k] for i in range(n - k + 1)}) for k in range(1, n + 1)]


def _sorted_suffixes_with_lcp(data):
    order = sorted(range(len(data)), key=lambda i: data[i:])
    lcps = []
    for a, b in zip(order, order[1:]):
        s, t = data[a:], data[b:]
        m = 0
        limit = min(len(s), len(t))
        while m < limit and s[m] == t[m]:
            m += 1
        lcps.append((a, b, m))
    return order, lcps


def counts_by_suffix_sort(text):
    """
    c[k] from the sorted suffixes: every suffix of length >= k contributes a
    length-k prefix, minus one for each adjacent pair sharing k symbols.
    """
    data = _as_bytes(text)
    n = len(data)
    _, lcps = _sorted_suffixes_with_lcp(data)
    result = []
    for k in range(1, n + 1):
        long_enough = n - k + 1
        shared = sum(1 for _, _, m in lcps if m >= k)
        result.append(long_enough - shared)
    return result


def alpha(text):
    """Length of the shortest suffix without an earlier (possibly overlapping) occurrence"""
    data = _as_bytes(text)
    n = len(data)
    earlier = data[:-1]
    for length in range(1, n + 1):
        if earlier.find(data[n - length:]) < 0:
            return length
    return n


def alpha_by_counts(text):
    """
    Smallest k whose count grows when the last symbol is appended; appending
    increments exactly the counts from alpha onwards.
    """
    data = _as_bytes(text)
    if len(data) == 1:
        return 1
    before = counts(data[:-1]) + [0]
    after = counts(data)
    for k, (old, new) in enumerate(zip(before, after), start=1):
        if new != old:
            return k
    return len(data)


def beta(text):
    """One more than the longest right-special substring (1 if there is none)"""
    data = _as_bytes(text)
    n = len(data)
    longest = 0
    for length in range(1, n):
        contexts = {}
        for i in range(n - length):
            contexts.setdefault(data[i:i + length], set()).add(data[i + length])
        if any(len(follow) >= 2 for follow in contexts.values()):
            longest = length
    return longest + 1


def beta_by_suffix_sort(text):
    """
    Right-special substrings are exactly the longest common prefixes of
    adjacent sorted suffixes that both continue past the shared part.
    """
    data = _as_bytes(text)
    n = len(data)
    _, lcps = _sorted_suffixes_with_lcp(data)
    longest = 0
    for a, b, m in lcps:
        if n - a > m and n - b > m:
            longest = max(longest, m)
    return longest + 1


def interval_borders(count_array):
    """Positional L (end of strict increase) and R (end of the plateau), 1-based"""
    n = len(count_array)
    L = 1
    while L < n and count_array[L - 1] < count_array[L]:
        L += 1
    R = L
    while R < n and count_array[R - 1] == count_array[R]:
        R += 1
    return L, R


def delta_and_leader(count_array):
    best = None
    k_tilde = 1
    for k, c in enumerate(count_array, start=1):
        ratio = Fraction(c, k)
        if best is None or ratio >= best:
            best = ratio
            k_tilde = k
    return best, k_tilde


def profile(text):
    data = _as_bytes(text)
    c = counts(data)
    L, R = interval_borders(c)
    delta, k_tilde = delta_and_leader(c)
    return CountProfile(
        counts=c,
        alpha=alpha(data),
        beta=beta(data),
        L=L,
        R=R,
        delta=delta,
        k_tilde=k_tilde,
    )


def _strictly_increasing(values):
    return all(a < b for a, b in zip(values, values[1:]))


def _constant(values):
    return all(a == b for a, b in zip(values, values[1:]))


def check_profile(prof, sigma):
    """Structural violations of a profile; sigma is the number of distinct symbols"""
    c = prof.counts
    n = len(c)
    a, b = prof.alpha, prof.beta
    L_pos, R_pos = interval_borders(c)
    violations = []

    if a >= b:
        L_thm, R_thm = b, a
    else:
        L_thm, R_thm = L_pos, b
    if (not _strictly_increasing(c[:L_thm])
            or not _constant(c[L_thm - 1:R_thm])):
        violations.append(VIOLATION_SHAPE)

    tail = c[R_thm - 1:]
    if c[-1] != 1 or any(x - y != 1 for x, y in zip(tail, tail[1:])):
        violations.append(VIOLATION_TAIL)

    if a >= b and (L_pos != b or R_pos != a):
        violations.append(VIOLATION_ALPHA_GE_BETA)
    if a <= b and (L_pos < a or R_pos != b):
        violations.append(VIOLATION_ALPHA_LE_BETA)

    if sigma >= 2 and n > 3:
        delta, _ = delta_and_leader(c)
        bound = n * math.log(sigma) / math.log(n)
        if float(delta) > bound + 1e-9:
            violations.append(VIOLATION_LEMMA_BOUND)

    return violations


def validate_structure(text, counts: Optional[List[int]] = None):
    """
    List the structural properties of the count array that fail for text.

    counts replaces the computed counts (used to inject corrupted
    arrays); alpha and beta are always taken from the text itself.
    """
    data = _as_bytes(text)
    prof = profile(data)
    if counts is not None:
        prof.counts = list(counts)
    return check_profile(prof, len(set(data)))


def prefix_profiles(text):
    """
    Yield the profile of every prefix of text, shortest first.

    Incremental enumeration: one set of seen substrings per length and one
    set of right contexts per substring. A suffix of the new prefix occurs
    earlier exactly when its length set already holds it.
    """
    data = _as_bytes(text)
    seen = []
    follow = {}
    longest_special = 0
    for i in range(1, len(data) + 1):
        prefix = data[:i]
        seen.append(set())
        shortest_new = None
        for length in range(1, i + 1):
            suffix = prefix[i - length:]
            bucket = seen[length - 1]
            if suffix not in bucket:
                bucket.add(suffix)
                if shortest_new is None:
                    shortest_new = length
        symbol = data[i - 1]
        for length in range(1, i):
            left = prefix[i - 1 - length:i - 1]
            contexts = follow.setdefault(left, set())
            contexts.add(symbol)
            if len(contexts) >= 2 and length > longest_special:
                longest_special = length
        c = [len(bucket) for bucket in seen]
        L, R = interval_borders(c)
        delta, k_tilde = delta_and_leader(c)
        yield CountProfile(
            counts=c,
            alpha=shortest_new,
            beta=longest_special + 1,
            L=L,
            R=R,
            delta=delta,
            k_tilde=k_tilde,
        )


class StreamingCounts:
    """
    Plain-array count simulation of a growing text.

    Appending a symbol raises c[k] by one exactly for k >= alpha of the new
    text and adds c[n] = 1; alpha is found by substring search, so nothing
    here shares code with the suffix tree.
    """

    def __init__(self):
        self.data = bytearray()
        self.counts = []
        self.alpha = None

    def __len__(self):
        return len(self.data)

    def push(self, symbol):
        self.data.append(symbol)
        a = alpha(bytes(self.data))
        counts = self.counts
        for k in range(a - 1, len(counts)):
            counts[k] += 1
        counts.append(1)
        self.alpha = a
        return a
