import random

import pytest

from utils.chain import ChainStore, size


def build(store, values):
    chain = None
    for value in values:
        chain = store.join(chain, store.single(value))
    return chain


def test_joined_singles_keep_order():
    store = ChainStore()
    chain = build(store, range(50))
    assert store.values(chain) == list(range(50))
    assert size(chain) == 50


def test_empty_chain():
    store = ChainStore()
    assert build(store, []) is None
    assert store.split(None, 3) == (None, None)
    assert store.values(None) == []


@pytest.mark.parametrize("k", [0, 1, 17, 39, 40])
def test_split_then_join(k):
    store = ChainStore(seed=3)
    chain = build(store, range(40))
    left, right = store.split(chain, k)
    assert store.values(left) == list(range(k))
    assert store.values(right) == list(range(k, 40))
    assert store.values(store.join(left, right)) == list(range(40))


def test_get():
    store = ChainStore()
    chain = build(store, "abcdef")
    assert [store.get(chain, i) for i in range(6)] == list("abcdef")
    with pytest.raises(IndexError):
        store.get(chain, 6)


def test_random_edits_match_list():
    rng = random.Random(11)
    store = ChainStore(seed=11)
    chain, mirror = None, []
    for step in range(400):
        if mirror and rng.random() < 0.4:
            k = rng.randint(0, len(mirror))
            left, right = store.split(chain, k)
            chain = store.join(right, left)
            mirror = mirror[k:] + mirror[:k]
        else:
            chain = store.join(chain, store.single(step))
            mirror.append(step)
        assert size(chain) == len(mirror)
    assert store.values(chain) == mirror


def test_split_depth_is_logarithmic():
    store = ChainStore(seed=5)
    chain = build(store, range(1 << 14))
    store.counters.clear()
    left, right = store.split(chain, 5000)
    assert store.counters["visited"] < 100
