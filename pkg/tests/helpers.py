"""Shared generators for randomized and exhaustive test sweeps."""

import itertools
import random


def random_pair(rng, max_len, max_alphabet=8):
    """One pair of random strings over a random alphabet of 1..max_alphabet letters."""
    alphabet = "abcdefgh"[: rng.randint(1, max_alphabet)]
    a = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))
    b = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))
    return a, b


def random_pairs(seed, count, max_len, max_alphabet=8):
    rng = random.Random(seed)
    return [random_pair(rng, max_len, max_alphabet) for _ in range(count)]


def all_strings(alphabet, max_len):
    """Every string over ``alphabet`` with length 0..max_len, shortest first."""
    for size in range(max_len + 1):
        for chars in itertools.product(alphabet, repeat=size):
            yield "".join(chars)
