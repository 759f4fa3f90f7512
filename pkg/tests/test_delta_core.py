import math
from fractions import Fraction

import pytest

from utils.count_oracle import StreamingCounts, prefix_profiles
from utils.delta_core import ENGINES, DeltaStream
from utils.errors import ContractViolation, InvariantBreach, OracleCapExceeded
from utils.geometry import upper_hull
from utils.textgen import GenSpec, generate

from conftest import random_corpus


def test_first_symbol():
    report = DeltaStream().push('x')
    assert (report.delta, report.alpha, report.R) == (Fraction(1), 1, 1)
    assert report.step_kind == "extend"


@pytest.mark.parametrize("engine", ENGINES)
def test_two_symbols(engine):
    stream = DeltaStream(engine=engine)
    stream.push(b"a")
    assert stream.push(b"b").delta == Fraction(2)


@pytest.mark.parametrize("engine", ENGINES)
def test_example_word(engine, example_word):
    stream = DeltaStream(engine=engine)
    reports = stream.extend(example_word)
    assert [r.alpha for r in reports] == [1, 1, 2, 2, 3, 2, 3, 3, 4, 5, 6]
    assert reports[-1].delta == Fraction(2)
    assert reports[5].step_kind == "pullback"
    assert stream.counts() == [2, 4, 6, 6, 6, 6]

    report = stream.push(b"c")
    assert report.delta == Fraction(3)
    assert report.maximizing_length == 1
    assert stream.counts() == [3, 5, 7, 7, 7, 7]


@pytest.mark.parametrize("engine", ENGINES)
def test_fig_word(engine, fig_word):
    stream = DeltaStream(engine=engine)
    report = stream.extend(fig_word)[-1]
    assert report.delta == Fraction(20, 7)
    assert report.maximizing_length == 7
    snap = stream.snapshot()
    assert (7, 20) in snap.points
    assert snap.tangency_k == 7
    assert snap.R == 10
    assert snap.to_json()["delta"] == "20/7"
    assert list(snap.to_json()) == ["n", "R", "delta", "tangency_k", "points", "hull"]


def test_snapshot_after_one_symbol():
    stream = DeltaStream()
    stream.push(b"q")
    snap = stream.snapshot()
    assert snap.points == [(1, 1)]
    assert snap.hull == [1]
    assert snap.tangency_k == 1


def test_snapshot_of_empty_stream():
    with pytest.raises(ContractViolation):
        DeltaStream().snapshot()


def test_snapshot_hull_matches_scratch_hull():
    text = generate(GenSpec(kind="random", length=200, alphabet=2, seed=3))
    stream = DeltaStream()
    stream.extend(text)
    snap = stream.snapshot()
    assert snap.hull == [p[0] for p in upper_hull(snap.points)]


def test_unknown_engine():
    with pytest.raises(ContractViolation):
        DeltaStream(engine="fast")


def test_oracle_cap():
    stream = DeltaStream(engine="oracle", oracle_cap=3)
    stream.extend(b"abc")
    with pytest.raises(OracleCapExceeded):
        stream.push(b"d")


def test_unary_stream_never_pulls_back():
    stream = DeltaStream()
    stream.extend(b"a" * 50)
    assert stream.stats().count == 0
    assert stream.last_report.delta == 1


def check_against_oracle(texts, engines=("amortized", "worstcase")):
    for text in texts:
        streams = [DeltaStream(engine=e) for e in engines]
        previous = Fraction(0)
        for symbol, prof in zip(text, prefix_profiles(text)):
            reports = [s.push(symbol) for s in streams]
            for report in reports:
                assert report.delta == prof.delta
                assert report.R == prof.R
                assert report.alpha == prof.alpha
                k = report.maximizing_length
                assert 1 <= k <= prof.L
                assert Fraction(prof.counts[k - 1], k) == prof.delta
            assert prof.delta >= previous
            previous = prof.delta
        for stream in streams:
            stats = stream.stats()
            n = len(text)
            assert stats.distance <= n
            assert stats.alpha_sum <= 2 * n * math.log2(max(n, 2))


def test_engines_match_oracle():
    check_against_oracle(random_corpus(120, 120))


@pytest.mark.slow
def test_engines_match_oracle_full_corpus():
    check_against_oracle(random_corpus(1000, 300, seed=1))


def test_engines_agree_with_oracle_engine():
    for text in random_corpus(30, 150, seed=2):
        deltas = [[r.delta for r in DeltaStream(engine=e).extend(text)] for e in ENGINES]
        assert deltas[0] == deltas[1] == deltas[2]


@pytest.mark.parametrize("engine", ENGINES)
def test_invariants_hold_after_every_step(engine):
    for text in random_corpus(25, 300, seed=5):
        stream = DeltaStream(engine=engine, debug=True)
        sim = StreamingCounts()
        for symbol in text:
            stream.push(symbol)
            sim.push(symbol)
            stream.check_invariants(sim.counts)


@pytest.mark.slow
def test_invariants_full_suite():
    for text in random_corpus(100, 500, seed=6):
        stream = DeltaStream(debug=True)
        sim = StreamingCounts()
        for symbol in text:
            stream.push(symbol)
            sim.push(symbol)
            stream.check_invariants(sim.counts)


def test_invariant_breach_is_detected():
    stream = DeltaStream()
    stream.extend(b"abaabbabbab")
    with pytest.raises(InvariantBreach):
        stream.check_invariants([2, 4, 6, 6, 6, 7])


def test_stats_fields(example_word):
    stream = DeltaStream()
    stream.extend(example_word)
    stats = stream.stats()
    assert stats.i == 11
    assert stats.count >= 1
    assert stats.distance <= 11
    assert stats.log_delta_ratio == stats.alpha_sum / 11


@pytest.mark.slow
def test_pullback_alpha_sum_on_long_random_text():
    n = 10 ** 5
    stream = DeltaStream()
    stream.extend(generate(GenSpec(kind="random", length=n, alphabet=2, seed=9)))
    stats = stream.stats()
    assert stats.distance <= n
    assert stats.alpha_sum <= 2 * n * math.log2(n)
