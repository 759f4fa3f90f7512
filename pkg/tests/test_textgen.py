import pytest

from utils.count_oracle import prefix_profiles
from utils.errors import InvalidGenSpec
from utils.textgen import MASK64, GenSpec, XorShift64Star, generate


@pytest.mark.parametrize("spec,expected", [
    (GenSpec(kind="unary", length=4), b"aaaa"),
    (GenSpec(kind="fibonacci", length=8), b"abaababa"),
    (GenSpec(kind="fibonacci", length=1), b"a"),
    (GenSpec(kind="thue_morse", length=8), b"abbabaab"),
    (GenSpec(kind="periodic", length=7, pattern=b"abc"), b"abcabca"),
    (GenSpec(kind="periodic", length=5, alphabet=3), b"abcab"),
    (GenSpec(kind="de_bruijn", length=10, alphabet=2), b"aaababbbaa"),
    (GenSpec(kind="unary", length=3, pattern=b"0"), b"000"),
])
def test_fixed_kinds(spec, expected):
    assert generate(spec) == expected


def test_random_is_deterministic():
    spec = GenSpec(kind="random", length=10, alphabet=2, seed=42)
    first = generate(spec)
    assert first == generate(spec)
    assert len(first) == 10
    assert set(first) <= set(b"ab")


def test_random_seeds_differ():
    a = generate(GenSpec(kind="random", length=64, seed=1))
    b = generate(GenSpec(kind="random", length=64, seed=2))
    assert a != b


def test_large_alphabet_uses_raw_bytes():
    text = generate(GenSpec(kind="random", length=500, alphabet=200, seed=3))
    assert max(text) < 200


def test_de_bruijn_windows_are_distinct():
    text = generate(GenSpec(kind="de_bruijn", length=3**4 + 3, alphabet=3))
    windows = {text[i:i + 4] for i in range(len(text) - 3)}
    assert len(windows) == len(text) - 3


def test_xorshift_stays_64_bit():
    rng = XorShift64Star(0)
    values = [rng.next() for _ in range(100)]
    assert all(0 <= v <= MASK64 for v in values)
    assert len(set(values)) == 100


@pytest.mark.parametrize("spec", [
    GenSpec(kind="random", length=0),
    GenSpec(kind="zipf", length=5),
    GenSpec(kind="random", length=5, alphabet=0),
    GenSpec(kind="periodic", length=5, pattern=b""),
    GenSpec(kind="thue_morse", length=5, pattern=b"x"),
])
def test_invalid_specs(spec):
    with pytest.raises(InvalidGenSpec):
        generate(spec)


def test_fibonacci_prefixes_have_small_delta():
    text = generate(GenSpec(kind="fibonacci", length=200))
    assert max(p.delta for p in prefix_profiles(text)) <= 2
