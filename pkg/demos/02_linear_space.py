#!/usr/bin/env python3
"""The rolling-column algorithm: full-table answers in O(min(m, n)) cells.

Shows that count_linear_space matches the full-table functions exactly,
that its workspace really is one column, and that counts explode far past
machine words while staying exact.
"""

import math
import random
import time

from lcscount import CountKind, count_embeddings_full, count_linear_space

# The full table stores (m+1) x (n+1) cells.  The rolling variant keeps a
# single mixed column plus two scalar carries and still produces the same
# numbers, because each cell only ever looks left, up, and diagonally.
a, b = "abcabba", "cbabac"
print("full table :", count_embeddings_full(a, b))
print("one column :", count_linear_space(a, b, CountKind.EMBEDDINGS))

# The _state_probe debug hook exposes the working arrays; their size is
# min(m, n) + 1 regardless of which argument is longer.
for pair in [("short", "a much longer string"), ("a much longer string", "short")]:
    sizes = []
    count_linear_space(*pair, CountKind.DISTINCT,
                       _state_probe=lambda lens, counts: sizes.append(len(counts)))
    print(f"inputs of lengths {len(pair[0])},{len(pair[1])} -> {sizes[0]} count cells")

# Counts grow combinatorially.  Placing k copies of a symbol into 2k slots
# is a pure position choice, so the embedding count must be C(2k, k); by
# k=35 that is beyond any 64-bit integer, and the arithmetic stays exact.
print()
print(" k  embeddings of a^k in a^2k   == C(2k,k)")
for k in (5, 10, 20, 35, 40):
    _, count = count_linear_space("a" * k, "a" * 2 * k, CountKind.EMBEDDINGS)
    print(f"{k:3d}  {count!s:>26}   {count == math.comb(2 * k, k)}")

# Random inputs blow up too: a few thousand symbols already produce counts
# with hundreds of bits.  This is why the counters are big integers.
rng = random.Random(1)
n = 2000
ra = [rng.randrange(4) for _ in range(n)]
rb = [rng.randrange(4) for _ in range(n)]
start = time.perf_counter()
length, count = count_linear_space(ra, rb, CountKind.EMBEDDINGS)
elapsed = time.perf_counter() - start
print()
print(f"random {n} x {n} over 4 symbols: LCS length {length}, "
      f"count has {count.bit_length()} bits ({elapsed:.2f}s)")
