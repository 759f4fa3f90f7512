#utils/textgen.py
"""
Seeded and deterministic test texts.

random uses xorshift64* (Vigna) seeded through one splitmix64 step, so a
GenSpec produces the same bytes in any language:

    x ^= x >> 12; x ^= x << 25; x ^= x >> 27      (64-bit)
    out = x * 0x2545F4914F6CDD1D mod 2**64
    symbol = (out >> 32) % alphabet

Symbols are the letters 'a', 'b', ... for alphabets up to 26 and the raw
byte values 0..alphabet-1 beyond that, unless explicit symbols are given.
"""
from dataclasses import dataclass
from typing import Optional

from utils.errors import InvalidGenSpec

MASK64 = (1 << 64) - 1
KINDS = ("random", "fibonacci", "thue_morse", "periodic", "unary", "de_bruijn")


def splitmix64(state):
    z = (state + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:

    def __init__(self, seed=0):
        self.state = splitmix64(seed & MASK64) or 1

    def next(self):
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, bound):
        return (self.next() >> 32) % bound


@dataclass(frozen=True)
class GenSpec:
    kind: str = "random"
    length: int = 1000
    alphabet: int = 2
    seed: int = 0
    pattern: Optional[bytes] = None  # periodic: the period; other kinds: symbol table

    def validate(self):
        if self.kind not in KINDS:
            raise InvalidGenSpec(f"unknown kind {self.kind!r}, expected one of {KINDS}")
        if self.length < 1:
            raise InvalidGenSpec("length must be at least 1")
        if not 1 <= self.alphabet <= 256:
            raise InvalidGenSpec("alphabet must be within 1..256")
        if self.kind == "periodic" and self.pattern is not None and not self.pattern:
            raise InvalidGenSpec("periodic pattern must be nonempty")
        if self.kind != "periodic" and self.pattern is not None:
            if len(self.pattern) < self._symbols_needed():
                raise InvalidGenSpec(
                    f"{self.kind} needs {self._symbols_needed()} symbols, got {len(self.pattern)}"
                )

    def _symbols_needed(self):
        if self.kind == "unary":
            return 1
        if self.kind in ("fibonacci", "thue_morse"):
            return 2
        return self.alphabet

    def symbol_table(self):
        if self.kind != "periodic" and self.pattern is not None:
            return bytes(self.pattern)
        if self.alphabet <= 26:
            return bytes(range(ord("a"), ord("a") + max(self.alphabet, 2)))
        return bytes(range(self.alphabet))


def _random(spec, table):
    rng = XorShift64Star(spec.seed)
    return bytes(table[rng.below(spec.alphabet)] for _ in range(spec.length))


def _fibonacci(spec, table):
    a, b = table[0:1], table[0:1] + table[1:2]
    if spec.length == 1:
        return a
    while len(b) < spec.length:
        a, b = b, b + a
    return b[:spec.length]


def _thue_morse(spec, table):
    return bytes(table[bin(i).count("1") & 1] for i in range(spec.length))


def _periodic(spec, table):
    period = bytes(spec.pattern) if spec.pattern else table[:spec.alphabet]
    reps = -(-spec.length // len(period))
    return (period * reps)[:spec.length]


def _unary(spec, table):
    return table[0:1] * spec.length


def _de_bruijn(spec, table):
    """
    Linearized de Bruijn sequence of the smallest order whose sequence
    covers the length (Fredricksen-Kessler-Maiorana), cycled if needed.
    """
    k = spec.alphabet
    if k == 1:
        return _unary(spec, table)
    order = 1
    while k ** order + order - 1 < spec.length:
        order += 1
    a = [0] * (order + 1)
    cycle = []

    def db(t, p):
        if t > order:
            if order % p == 0:
                cycle.extend(a[1:p + 1])
        else:
            a[t] = a[t - p]
            db(t + 1, p)
            for j in range(a[t - p] + 1, k):
                a[t] = j
                db(t + 1, t)

    db(1, 1)
    linear = cycle + cycle[:order - 1]
    return bytes(table[s] for s in linear[:spec.length])


GENERATORS = {
    "random": _random,
    "fibonacci": _fibonacci,
    "thue_morse": _thue_morse,
    "periodic": _periodic,
    "unary": _unary,
    "de_bruijn": _de_bruijn,
}


def generate(spec):
    spec.validate()
    return GENERATORS[spec.kind](spec, spec.symbol_table())
