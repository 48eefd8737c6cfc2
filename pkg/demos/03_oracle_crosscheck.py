#!/usr/bin/env python3
"""Cross-checking the fast algorithms against the brute-force oracle.

The oracle works straight from the definitions (enumerate subsequences,
walk embeddings one by one), so it is exponential -- and that is the
point: an independent ground truth for small inputs.
"""

import random

from lcscount import count_distinct_full, count_embeddings_full
from lcscount.oracle import InputTooLargeError, oracle_distinct, oracle_embeddings

# The oracle agrees with the dynamic programs on anything small enough to
# enumerate.  Here: 300 random pairs over a 3-letter alphabet.
rng = random.Random(99)
checked = 0
for _ in range(300):
    size_a, size_b = rng.randint(0, 8), rng.randint(0, 8)
    a = "".join(rng.choice("abc") for _ in range(size_a))
    b = "".join(rng.choice("abc") for _ in range(size_b))
    assert count_distinct_full(a, b) == oracle_distinct(a, b), (a, b)
    assert count_embeddings_full(a, b) == oracle_embeddings(a, b), (a, b)
    checked += 1
print(f"oracle and dynamic programs agree on {checked} random pairs")

# Deliberately naive means deliberately guarded: the oracle refuses inputs
# whose enumeration would not terminate in reasonable time.
try:
    oracle_distinct("x" * 19, "x")
except InputTooLargeError as exc:
    print(f"distinct oracle guard: {exc}")
try:
    oracle_embeddings("x" * 16, "y" * 15)
except InputTooLargeError as exc:
    print(f"embedding oracle guard: {exc}")

# The same cross-check is available from the command line:
#
#   lcscount        --text ABCBDAB --text BDCABA --mode all
#   lcscount oracle --text ABCBDAB --text BDCABA --mode all
#
# must print identical counts (the oracle subcommand exits with status 3
# beyond its guards).
print("see also: lcscount oracle --help")
