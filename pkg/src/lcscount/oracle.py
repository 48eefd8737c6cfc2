"""Brute-force reference implementations used as ground truth in tests.

These are deliberately naive, exponential-time procedures that work straight
from the definitions: distinct counting enumerates subsequences as strings,
embedding counting walks every strictly increasing matching position vector.
Input guards keep them at test scale; they are not meant for real inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Iterator, Sequence

__all__ = [
    "DISTINCT_MAX_LEN",
    "EMBEDDINGS_MAX_TOTAL",
    "Embedding",
    "InputTooLargeError",
    "iter_max_embeddings",
    "oracle_distinct",
    "oracle_embeddings",
]

Symbols = Sequence[Hashable]

# Safety bounds so exhaustive test sweeps finish quickly; beyond them the
# enumeration blows up and callers get a clean error instead of a hang.
DISTINCT_MAX_LEN = 18
EMBEDDINGS_MAX_TOTAL = 30


class InputTooLargeError(ValueError):
    """Input exceeds the enumeration guard of a brute-force oracle."""


@dataclass(frozen=True)
class Embedding:
    """One placement of a common subsequence: 0-based positions in A and B.

    Both tuples are strictly increasing, have equal length, and rank r of
    one points at a symbol equal to rank r of the other.
    """

    a_positions: tuple[int, ...]
    b_positions: tuple[int, ...]

    def __post_init__(self):
        if len(self.a_positions) != len(self.b_positions):
            raise ValueError("position vectors differ in length")
        for positions in (self.a_positions, self.b_positions):
            if any(x >= y for x, y in zip(positions, positions[1:])):
                raise ValueError("positions must be strictly increasing")

    def __len__(self) -> int:
        return len(self.a_positions)


def _is_subsequence(candidate: Symbols, haystack: Symbols) -> bool:
    it = iter(haystack)
    return all(sym in it for sym in candidate)


def oracle_distinct(a: Symbols, b: Symbols) -> tuple[int, int]:
    """(LCS length, number of distinct LCS strings) by direct enumeration.

    Enumerates the subsequences of ``a`` longest first, deduplicates them as
    strings, and stops at the first length with a match inside ``b``.  The
    empty subsequence always matches, so the result is at least (0, 1).

    Raises ``InputTooLargeError`` when ``len(a)`` exceeds
    ``DISTINCT_MAX_LEN`` (the enumeration is 2**len(a)).
    """
    if len(a) > DISTINCT_MAX_LEN:
        raise InputTooLargeError(
            f"oracle_distinct enumerates 2**{len(a)} subsequences; "
            f"limit is {DISTINCT_MAX_LEN} symbols"
        )
    indices = range(len(a))
    for size in range(len(a), -1, -1):
        candidates = {tuple(a[i] for i in picks) for picks in itertools.combinations(indices, size)}
        matches = sum(1 for cand in candidates if _is_subsequence(cand, b))
        if matches:
            return size, matches
    raise AssertionError("unreachable: the empty subsequence always matches")


def _check_embedding_guard(a: Symbols, b: Symbols) -> None:
    if len(a) + len(b) > EMBEDDINGS_MAX_TOTAL:
        raise InputTooLargeError(
            f"embedding enumeration on {len(a)}+{len(b)} symbols; "
            f"limit is {EMBEDDINGS_MAX_TOTAL} total"
        )


def oracle_embeddings(a: Symbols, b: Symbols) -> tuple[int, int]:
    """(LCS length, number of LCS embeddings) by visiting every embedding.

    Recursively extends position vectors over all matching index pairs, so
    each common-subsequence embedding is visited exactly once; the ones at
    maximum depth are counted.  Depth 0 is the empty embedding, hence the
    result is at least (0, 1).

    Raises ``InputTooLargeError`` when ``len(a) + len(b)`` exceeds
    ``EMBEDDINGS_MAX_TOTAL``.
    """
    _check_embedding_guard(a, b)
    b_positions_of = _positions_by_symbol(b)
    best = [0, 1]  # [max depth seen, embeddings at that depth]

    def visit(a_from: int, b_from: int, depth: int) -> None:
        if depth > best[0]:
            best[0] = depth
            best[1] = 1
        elif depth == best[0] and depth > 0:
            best[1] += 1
        for i in range(a_from, len(a)):
            for j in b_positions_of.get(a[i], ()):
                if j >= b_from:
                    visit(i + 1, j + 1, depth + 1)

    visit(0, 0, 0)
    return best[0], best[1]


def iter_max_embeddings(a: Symbols, b: Symbols) -> Iterator[Embedding]:
    """Yield every maximum-length ``Embedding`` of ``a`` and ``b``.

    Subject to the same guard as ``oracle_embeddings``.  For length 0 the
    single empty embedding is yielded.
    """
    max_len, _ = oracle_embeddings(a, b)
    b_positions_of = _positions_by_symbol(b)
    a_stack: list[int] = []
    b_stack: list[int] = []

    def visit(a_from: int, b_from: int) -> Iterator[Embedding]:
        if len(a_stack) == max_len:
            yield Embedding(tuple(a_stack), tuple(b_stack))
            return
        for i in range(a_from, len(a)):
            for j in b_positions_of.get(a[i], ()):
                if j >= b_from:
                    a_stack.append(i)
                    b_stack.append(j)
                    yield from visit(i + 1, j + 1)
                    a_stack.pop()
                    b_stack.pop()

    yield from visit(0, 0)


def _positions_by_symbol(seq: Symbols) -> dict[Hashable, list[int]]:
    table: dict[Hashable, list[int]] = {}
    for index, sym in enumerate(seq):
        table.setdefault(sym, []).append(index)
    return table
