#!/usr/bin/env python3
"""Tour of the two counting notions: distinct LCS strings vs. embeddings.

Run as a script; each section prints what it computes and why.
"""

from lcscount import count_distinct_full, count_embeddings_full, lcs_length, summarize
from lcscount.oracle import iter_max_embeddings

# Two strings can have several different longest common subsequences.
# The classic pair below has LCS length 4, reachable by three different
# strings.
a, b = "ABCBDAB", "BDCABA"
print(f"a = {a!r}, b = {b!r}")
print("LCS length:", lcs_length(a, b))

length, n_distinct = count_distinct_full(a, b)
print(f"distinct LCS strings: {n_distinct}")

# An *embedding* additionally fixes which positions of a and b each LCS
# character uses.  One string may embed several ways, so embeddings >=
# distinct strings always.
length, n_embeddings = count_embeddings_full(a, b)
print(f"LCS embeddings: {n_embeddings}")

# At this size the brute-force oracle can list them.  Note BDAB appears
# twice: its leading B can sit at index 1 or 3 of a.
print("\nall maximum-length embeddings (0-based positions):")
for emb in iter_max_embeddings(a, b):
    spelled = "".join(a[i] for i in emb.a_positions)
    print(f"  {spelled}: a{emb.a_positions} / b{emb.b_positions}")

# The distinction matters most with repeated symbols.  Here there is only
# one LCS *string* but six ways to place it:
print()
print("aa vs aaaa:", summarize("aa", "aaaa"))

# Disjoint inputs still count 1: the empty subsequence is always common.
print("abc vs xyz:", summarize("abc", "xyz"))

# Everything is symmetric and insensitive to reversing both inputs.
print()
print("summarize(a, b)          :", summarize(a, b))
print("summarize(b, a)          :", summarize(b, a))
print("summarize(reversed pair) :", summarize(a[::-1], b[::-1]))
