#utils/delta_core.py
"""
Online delta of a byte stream.

Per symbol the suffix tree gives alpha, the smallest length whose count
grows. Three ways to turn that into delta:

amortized
    Positions [1..a-1] left of the active interval never change again until
    a pullback re-opens them, so their counts, ratios and running maxima are
    frozen in plain lists. The active interval [a..R] lives in a hull engine
    as points (k, c[k] - shift): one shared shift absorbs the per-step +1.
worstcase
    Every position stays in a WorstCaseEngine; alpha becomes either an
    append (alpha = R+1) or a suffix increment.
oracle
    Full count array by plain simulation, for test-scale input.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from utils.alpha_tracker import DEFAULT_CAPACITY, AlphaTracker, to_symbol
from utils.count_oracle import StreamingCounts, delta_and_leader, interval_borders
from utils.errors import ContractViolation, InvariantBreach, OracleCapExceeded
from utils.geometry import ORIGIN, HullPoint, tangent_index, upper_hull
from utils.hull_engine import make_hull_engine
from utils.worstcase_engine import WorstCaseEngine

logger = logging.getLogger(__name__)

ENGINES = ("amortized", "worstcase", "oracle")
DEFAULT_ORACLE_CAP = 5000

EXTEND = "extend"
INCREMENT = "increment"
PULLBACK = "pullback"


@dataclass(frozen=True)
class DeltaReport:
    i: int
    delta: Fraction
    delta_float: float
    maximizing_length: int
    alpha: int
    step_kind: str
    R: int


@dataclass
class HullSnapshot:
    n: int
    R: int
    delta: Fraction
    tangency_k: int
    points: List[Tuple[int, int]]
    hull: List[int]

    def to_json(self):
        """Plain dict in the fixed export order: n, R, delta, tangency_k, points, hull"""
        return {
            "n": self.n,
            "R": self.R,
            "delta": f"{self.delta.numerator}/{self.delta.denominator}",
            "tangency_k": self.tangency_k,
            "points": [[k, c] for k, c in self.points],
            "hull": list(self.hull),
        }


@dataclass
class PullbackStats:
    i: int = 0
    count: int = 0
    distance: int = 0
    alpha_sum: int = 0
    log_delta_ratio: float = 0.0


@dataclass
class _Frozen:
    """Positions 1..a-1, list index k-1"""
    counts: List[int] = field(default_factory=list)
    val: List[Fraction] = field(default_factory=list)
    maxval: List[Fraction] = field(default_factory=list)
    argmax: List[int] = field(default_factory=list)

    def __len__(self):
        return len(self.counts)

    def append(self, c):
        k = len(self.counts) + 1
        ratio = Fraction(c, k)
        self.counts.append(c)
        self.val.append(ratio)
        if self.maxval and self.maxval[-1] > ratio:
            self.maxval.append(self.maxval[-1])
            self.argmax.append(self.argmax[-1])
        else:
            self.maxval.append(ratio)
            self.argmax.append(k)

    def truncate(self, length):
        del self.counts[length:]
        del self.val[length:]
        del self.maxval[length:]
        del self.argmax[length:]


class DeltaStream:
    """
    One stream, one state machine. push() takes a byte (int, 1-byte bytes or
    1-char str) and returns the DeltaReport of the prefix read so far.
    """

    def __init__(self, engine="amortized", hull="two_part",
                 capacity=DEFAULT_CAPACITY, oracle_cap=DEFAULT_ORACLE_CAP,
                 debug=False):
        if engine not in ENGINES:
            raise ContractViolation(f"unknown engine {engine!r}, expected one of {ENGINES}")
        self.engine = engine
        self.capacity = capacity
        self.oracle_cap = oracle_cap
        self.debug = debug

        self.i = 0
        self.alpha = None
        self.R = 0
        self.last_report = None
        self._stats = PullbackStats()

        self.tracker = None
        self.hull = None
        self.shift = 0
        self.frozen = _Frozen()
        self.tree = None
        self.simulation = None

        if engine == "amortized":
            self.tracker = AlphaTracker(capacity=capacity)
            self.hull = make_hull_engine(hull)
        elif engine == "worstcase":
            self.tracker = AlphaTracker(capacity=capacity)
        else:
            self.simulation = StreamingCounts()

    def __len__(self):
        return self.i

    # -- stepping -----------------------------------------------------------

    def push(self, symbol):
        symbol = to_symbol(symbol)
        if self.simulation is not None:
            if self.i >= self.oracle_cap:
                raise OracleCapExceeded(
                    f"oracle engine is capped at {self.oracle_cap} symbols "
                    f"(set DELTA_ORACLE_CAP to raise it)"
                )
            alpha = self.simulation.push(symbol)
        else:
            alpha = self.tracker.push(symbol)

        previous_alpha = self.alpha
        self.i += 1
        if self.i == 1:
            kind = EXTEND
        elif alpha == self.R + 1:
            kind = EXTEND
        elif alpha == previous_alpha + 1:
            kind = INCREMENT
        else:
            kind = PULLBACK
            self._stats.count += 1
            self._stats.distance += previous_alpha - alpha
            self._stats.alpha_sum += alpha
            logger.debug("pullback at i=%d: alpha %d -> %d", self.i, previous_alpha, alpha)

        if self.engine == "amortized":
            delta, k = self._step_amortized(alpha, kind)
        elif self.engine == "worstcase":
            delta, k = self._step_worstcase(alpha, kind)
        else:
            delta, k = self._step_oracle()

        self.alpha = alpha
        if self.last_report is not None and delta < self.last_report.delta:
            raise InvariantBreach(
                f"delta dropped from {self.last_report.delta} to {delta} at i={self.i}"
            )
        self.last_report = DeltaReport(
            i=self.i,
            delta=delta,
            delta_float=float(delta),
            maximizing_length=k,
            alpha=alpha,
            step_kind=kind,
            R=self.R,
        )
        return self.last_report

    def extend(self, data):
        return [self.push(b) for b in data]

    def _step_amortized(self, alpha, kind):
        hull = self.hull
        frozen = self.frozen
        if self.i == 1:
            hull.insert_right((1, 1))
            self.R = 1
        elif kind == EXTEND:
            # only R was active; R+1 enters at the stored height of R and R freezes
            hull.insert_right((self.R + 1, hull.peek_right().y))
            p = hull.delete_left()
            frozen.append(p.y + self.shift)
            self.R += 1
        elif kind == INCREMENT:
            # alpha-1 leaves the active part before the shift
            p = hull.delete_left()
            frozen.append(p.y + self.shift)
            self.shift += 1
        else:
            # pullback: frozen positions alpha..len(frozen) rejoin the active part, right to left
            before = self.shift
            self.shift += 1
            for k in range(len(frozen), alpha - 1, -1):
                y = frozen.counts[k - 1] + 1 - self.shift
                if self.debug and y != frozen.counts[k - 1] - before:
                    raise InvariantBreach(f"re-inserted point {k} lands at the wrong height")
                hull.insert_left((k, y))
            frozen.truncate(alpha - 1)

        if self.debug and len(frozen) != alpha - 1:
            raise InvariantBreach(
                f"frozen part holds {len(frozen)} positions, alpha={alpha}"
            )
        # stored y = c - shift, so the origin sits at (0, -shift)
        answer = hull.tangent_max_slope((0, -self.shift))
        delta, k = answer.slope, answer.vertex.x
        # strict: ties go to the active part
        if alpha >= 2 and frozen.maxval[alpha - 2] > delta:
            delta, k = frozen.maxval[alpha - 2], frozen.argmax[alpha - 2]
        return delta, k

    def _step_worstcase(self, alpha, kind):
        if self.i == 1:
            self.tree = WorstCaseEngine(capacity=self.capacity)
            self.R = 1
        elif kind == EXTEND:
            self.R = self.tree.append_position()
        else:
            # increment and pullback differ only in where alpha lands
            self.tree.suffix_increment(alpha)
        k, _, delta = self.tree.leader()
        return delta, k

    def _step_oracle(self):
        counts = self.simulation.counts
        _, self.R = interval_borders(counts)
        delta, k = delta_and_leader(counts[:self.R])
        return delta, k

    # -- inspection -----------------------------------------------------------

    def counts(self):
        """Count array [c[1]..c[R]] as maintained by the engine"""
        if self.i == 0:
            return []
        if self.engine == "amortized":
            return list(self.frozen.counts) + [p.y + self.shift for p in self.hull.points()]
        if self.engine == "worstcase":
            return [p.y for p in self.tree.points()]
        return list(self.simulation.counts[:self.R])

    def snapshot(self):
        if self.i == 0:
            raise ContractViolation("snapshot of an empty stream")
        points = [HullPoint(k, c) for k, c in enumerate(self.counts(), start=1)]
        vertices = upper_hull(points)
        tangency = vertices[tangent_index(len(vertices), vertices.__getitem__, ORIGIN)]
        return HullSnapshot(
            n=self.i,
            R=self.R,
            delta=Fraction(tangency.y, tangency.x),
            tangency_k=tangency.x,
            points=[tuple(p) for p in points],
            hull=[p.x for p in vertices],
        )

    def stats(self):
        stats = self._stats
        stats.i = self.i
        if self.i and self.last_report is not None:
            log_delta = math.log2(self.last_report.delta) if self.last_report.delta > 1 else 0.0
            stats.log_delta_ratio = stats.alpha_sum / (self.i * max(1.0, log_delta))
        return PullbackStats(**vars(stats))

    def counters(self):
        """Operation counters of whichever structure backs the stream"""
        if self.engine == "amortized":
            return dict(self.hull.counters)
        if self.engine == "worstcase" and self.tree is not None:
            return dict(self.tree.counters)
        return {}

    def check_invariants(self, counts):
        """
        Compare the maintained state with an independent count array
        (counts[k-1] = c[k], at least R entries). Raises InvariantBreach.
        """
        if len(counts) < self.R:
            raise ContractViolation(f"need {self.R} counts, got {len(counts)}")
        if self.engine == "amortized":
            self._check_amortized(counts)
        elif self.engine == "worstcase":
            for k in range(1, self.R + 1):
                if self.tree.value_at(k) != counts[k - 1]:
                    raise InvariantBreach(
                        f"count tree has c[{k}]={self.tree.value_at(k)}, expected {counts[k - 1]}"
                    )
        elif self.simulation.counts[:self.R] != list(counts[:self.R]):
            raise InvariantBreach("oracle simulation disagrees with the given counts")

    def _check_amortized(self, counts):
        frozen = self.frozen
        best, arg = None, 0
        for k in range(1, len(frozen) + 1):
            c = counts[k - 1]
            ratio = Fraction(c, k)
            if best is None or ratio >= best:
                best, arg = ratio, k
            if frozen.counts[k - 1] != c or frozen.val[k - 1] != ratio:
                raise InvariantBreach(f"frozen c[{k}]={frozen.counts[k - 1]}, expected {c}")
            if frozen.maxval[k - 1] != best or frozen.argmax[k - 1] != arg:
                raise InvariantBreach(f"running maximum wrong at {k}")
        active = self.hull.points()
        expected_xs = list(range(len(frozen) + 1, self.R + 1))
        if [p.x for p in active] != expected_xs:
            raise InvariantBreach(f"active points {[p.x for p in active]} do not cover [a..R]")
        for p in active:
            if p.y + self.shift != counts[p.x - 1]:
                raise InvariantBreach(
                    f"active c[{p.x}]={p.y + self.shift}, expected {counts[p.x - 1]}"
                )
