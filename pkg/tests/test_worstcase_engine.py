import math
import random
from fractions import Fraction

import pytest

from utils.alpha_tracker import AlphaTracker
from utils.errors import ContractViolation, StreamTooLongError
from utils.geometry import upper_hull
from utils.textgen import GenSpec, generate
from utils.worstcase_engine import LazyCountTree, WorstCaseEngine

from conftest import random_corpus


def engine_with(values):
    """Engine holding an arbitrary nondecreasing-by-construction array"""
    engine = WorstCaseEngine()
    for _ in range(len(values) - 1):
        engine.append_position()
    current = [1] * len(values)
    for k in range(1, len(values) + 1):
        while current[k - 1] < values[k - 1]:
            engine.suffix_increment(k)
            for j in range(k - 1, len(values)):
                current[j] += 1
    assert current == list(values)
    return engine


def all_values(engine):
    return [engine.value_at(k) for k in range(1, engine.R + 1)]


def scan_leader(values):
    best, arg = None, 0
    for k, c in enumerate(values, start=1):
        ratio = Fraction(c, k)
        if best is None or ratio >= best:
            best, arg = ratio, k
    return arg, values[arg - 1], best


def test_lazy_tree_range_add():
    tree = LazyCountTree(8, [1, 2, 3, 4, 5])
    tree.range_add(2, 4)
    tree.range_add(4, 5, 3)
    assert [tree.value_at(k) for k in range(1, 6)] == [1, 3, 4, 8, 8]
    tree.set_value(6, 8)
    assert tree.value_at(6) == 8


def test_fresh_engine():
    engine = WorstCaseEngine()
    assert engine.value_at(1) == 1
    assert engine.leader() == (1, 1, Fraction(1))


def test_append_repeats_last_count():
    engine = engine_with([2, 4, 6])
    assert engine.append_position() == 4
    assert all_values(engine) == [2, 4, 6, 6]


@pytest.mark.parametrize("alpha,expected", [
    (4, [2, 4, 6, 7, 7, 7]),
    (1, [3, 5, 7, 7, 7, 7]),
])
def test_suffix_increment_examples(alpha, expected):
    engine = engine_with([2, 4, 6, 6, 6, 6])
    engine.suffix_increment(alpha)
    assert all_values(engine) == expected


def test_leader_examples():
    assert engine_with([3, 5, 7, 7, 7, 7]).leader() == (1, 3, Fraction(3))
    assert engine_with([1, 1, 1]).leader() == (1, 1, Fraction(1))


def test_single_increment():
    engine = WorstCaseEngine()
    engine.suffix_increment(1)
    assert engine.value_at(1) == 2


def test_out_of_range():
    engine = engine_with([1, 2])
    with pytest.raises(ContractViolation):
        engine.suffix_increment(3)
    with pytest.raises(ContractViolation):
        engine.value_at(0)


def test_capacity():
    engine = WorstCaseEngine(capacity=2)
    engine.append_position()
    with pytest.raises(StreamTooLongError):
        engine.append_position()


def check_tree(engine):
    values = all_values(engine)
    points = list(enumerate(values, start=1))
    assert engine.hull() == [p[0] for p in upper_hull(points)]
    stored = []
    for v in range(1, 2 * engine.slots):
        stored.extend(engine.store.values(engine.chains[v]))
        lo, hi = engine.node_interval(v)
        inside = points[lo - 1:min(hi, engine.R)]
        assert engine.reconstruct_hull(v) == [p[0] for p in upper_hull(inside)]
    assert len(stored) == len(set(stored))


def test_random_operations_match_plain_array():
    rng = random.Random(4)
    for _ in range(25):
        engine = WorstCaseEngine()
        plain = [1]
        for _ in range(rng.randint(1, 120)):
            if rng.random() < 0.4:
                engine.append_position()
                plain.append(plain[-1])
            else:
                alpha = rng.randint(1, len(plain))
                engine.suffix_increment(alpha)
                for j in range(alpha - 1, len(plain)):
                    plain[j] += 1
                assert engine.last_nodes_touched <= 2 * math.ceil(math.log2(max(engine.R, 2))) + 4
            assert all_values(engine) == plain
            assert engine.leader() == scan_leader(plain)
        check_tree(engine)


def test_hundred_increments_on_random_base():
    rng = random.Random(9)
    base = sorted(rng.randint(1, 40) for _ in range(30))
    engine = engine_with(base)
    plain = list(base)
    for _ in range(100):
        alpha = rng.randint(1, len(plain))
        engine.suffix_increment(alpha)
        for j in range(alpha - 1, len(plain)):
            plain[j] += 1
    assert all_values(engine) == plain
    check_tree(engine)


def stream_counts(engine_cls, text):
    tracker = AlphaTracker()
    engine = None
    R = 0
    for symbol in text:
        alpha = tracker.push(symbol)
        if engine is None:
            engine, R = engine_cls(), 1
        elif alpha == R + 1:
            R = engine.append_position()
        else:
            engine.suffix_increment(alpha)
            assert engine.last_nodes_touched <= 2 * math.ceil(math.log2(max(R, 2))) + 4
    return engine


def test_locality_on_text_streams():
    for text in random_corpus(30, 400, alphabets=(2, 4)):
        stream_counts(WorstCaseEngine, text)


@pytest.mark.slow
def test_locality_on_long_binary_stream():
    text = generate(GenSpec(kind="random", length=200000, alphabet=2, seed=1))
    engine = stream_counts(WorstCaseEngine, text)
    n = len(text)
    assert engine.counters["max_chain_visits"] <= 64 * math.log2(n) ** 2
