"""Exact counting of longest common subsequences.

Given two sequences this module computes, in O(mn) time, the length of a
longest common subsequence (LCS) together with either

* the number of *distinct* LCSs (different index choices that spell the
  same string count once), or
* the number of LCS *embeddings* (each assignment of LCS characters to a
  strictly increasing position vector in both inputs counts separately).

Every counter is an exact Python integer; results never overflow or round.
Both a full-table algorithm and a rolling-column variant that keeps only
O(min(m, n)) cells are provided, and they always agree.

Sequences may be strings, bytes, lists or tuples of arbitrary hashable,
equality-comparable symbols (the same contract as ``difflib``).
"""

from __future__ import annotations

import enum
from array import array
from dataclasses import dataclass
from typing import Callable, Hashable, Optional, Sequence

try:  # GMP-backed integers speed up the huge-count regime; plain int is fine too
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _bigint = int

try:
    from . import _speedups
except ImportError:  # pragma: no cover - exercised only without the extension
    _speedups = None

__all__ = [
    "CountKind",
    "LcsSummary",
    "RollingState",
    "count_distinct_full",
    "count_embeddings_full",
    "count_linear_space",
    "lcs_length",
    "step_cell",
    "summarize",
]

Symbols = Sequence[Hashable]

# Callback signature used by the debug trace hook of the full-table routines:
# (i, j, matched, length, count, diag_subtracted).  Never part of the public
# results; tests use it to audit per-cell behaviour.
CellHook = Callable[[int, int, bool, int, int, bool], None]


class CountKind(enum.Enum):
    """Which quantity a counting run computes."""

    DISTINCT = "distinct"
    EMBEDDINGS = "embeddings"


@dataclass(frozen=True)
class LcsSummary:
    """LCS length plus whichever counts were requested.

    Counts left out of a request are ``None``.  Whenever both are present,
    ``1 <= distinct_count <= embedding_count`` holds, and a length of zero
    forces both counts to 1 (the empty subsequence).
    """

    lcs_length: int
    distinct_count: Optional[int] = None
    embedding_count: Optional[int] = None


@dataclass
class RollingState:
    """Mixed-column state of the O(min(m, n))-space computation.

    While cell (i, j) is being processed, ``lengths``/``counts`` entries at
    indices below i already belong to column j and entries at i and above
    still belong to column j-1; ``prev_diag_length``/``prev_diag_count``
    carry the column j-1 values at index i-1.  ``step_cell`` preserves this
    contract cell by cell.
    """

    lengths: list[int]
    counts: list[int]
    prev_diag_length: int = 0
    prev_diag_count: int = 1

    @classmethod
    def fresh(cls, rows: int) -> "RollingState":
        """State ready for cell (1, 1) of a table with ``rows`` symbol rows."""
        return cls(lengths=[0] * (rows + 1), counts=[1] * (rows + 1))

    def start_column(self) -> None:
        """Reset the diagonal carries for cell (1, j) of a new column j."""
        self.prev_diag_length = 0
        self.prev_diag_count = 1


def lcs_length(a: Symbols, b: Symbols) -> int:
    """Length of a longest common subsequence of ``a`` and ``b``.

    Runs in O(len(a) * len(b)) time and O(min) space.  Symmetric in its
    arguments; empty inputs give 0.
    """
    rows, cols = (a, b) if len(a) <= len(b) else (b, a)
    lengths = [0] * (len(rows) + 1)
    for col_sym in cols:
        prev_diag = 0
        i = 1
        for row_sym in rows:
            current = lengths[i]
            if row_sym == col_sym:
                new_len = prev_diag + 1
            else:
                up = lengths[i - 1]
                new_len = up if up >= current else current
            prev_diag = current
            lengths[i] = new_len
            i += 1
    return lengths[-1]


def count_distinct_full(a: Symbols, b: Symbols) -> tuple[int, int]:
    """LCS length and number of distinct LCS strings, via the full table."""
    return _count_full(a, b, embeddings=False)


def count_embeddings_full(a: Symbols, b: Symbols) -> tuple[int, int]:
    """LCS length and number of LCS embeddings, via the full table.

    An embedding fixes the positions the LCS characters occupy in both
    inputs, so one repeated string may contribute many embeddings.  The
    result is always >= the distinct count for the same inputs.
    """
    return _count_full(a, b, embeddings=True)


def _count_full(
    a: Symbols,
    b: Symbols,
    embeddings: bool,
    on_cell: Optional[CellHook] = None,
) -> tuple[int, int]:
    """Shared (m+1) x (n+1) table recurrence behind both full counters.

    Border cells hold length 0 and count 1 (the empty subsequence is always
    common).  On a matched cell the count is seeded from the diagonal; the
    up/left/diagonal correction terms then apply unconditionally in
    embeddings mode but are skipped on matches in distinct mode.  The
    correction is evaluated in add, add, subtract order, which keeps the
    running value nonnegative.
    """
    m, n = len(a), len(b)
    len_rows = [[0] * (n + 1) for _ in range(m + 1)]
    cnt_rows = [[1] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        sym = a[i - 1]
        len_up, len_cur = len_rows[i - 1], len_rows[i]
        cnt_up, cnt_cur = cnt_rows[i - 1], cnt_rows[i]
        for j in range(1, n + 1):
            matched = sym == b[j - 1]
            if matched:
                new_len = len_up[j - 1] + 1
                count = cnt_up[j - 1]
            else:
                up, left = len_up[j], len_cur[j - 1]
                new_len = up if up >= left else left
                count = 0
            subtracted = False
            if embeddings or not matched:
                if len_up[j] == new_len:
                    count += cnt_up[j]
                if len_cur[j - 1] == new_len:
                    count += cnt_cur[j - 1]
                if len_up[j - 1] == new_len:
                    count -= cnt_up[j - 1]
                    subtracted = True
                assert count >= 0, "correction went negative"
                # A matched cell is one longer than its diagonal, so the
                # subtraction can never fire there.
                assert not (matched and subtracted)
            len_cur[j] = new_len
            cnt_cur[j] = count
            if on_cell is not None:
                on_cell(i, j, matched, new_len, count, subtracted)
    return len_rows[m][n], cnt_rows[m][n]


def step_cell(
    state: RollingState,
    i: int,
    a_sym: Hashable,
    b_sym: Hashable,
    kind: CountKind,
) -> RollingState:
    """Advance the rolling state across one cell (i, j) of the table.

    ``state`` must satisfy the mixed-column contract for (i, j); afterwards
    it satisfies it for (i+1, j).  Call ``state.start_column()`` before row
    1 of each new column.  The state is updated in place and returned.
    """
    lengths, counts = state.lengths, state.counts
    assert 1 <= i < len(lengths), "row index outside the rolling arrays"
    current_len = lengths[i]
    up_len = lengths[i - 1]
    if a_sym == b_sym:
        new_len = state.prev_diag_length + 1
        new_count = state.prev_diag_count
        correct = kind is CountKind.EMBEDDINGS
    else:
        new_len = up_len if up_len >= current_len else current_len
        new_count = 0
        correct = True
    if correct:
        if up_len == new_len:
            new_count += counts[i - 1]
        if current_len == new_len:
            new_count += counts[i]
        if state.prev_diag_length == new_len:
            assert a_sym != b_sym, "diagonal subtraction on a matched cell"
            new_count -= state.prev_diag_count
        assert new_count >= 0, "correction went negative"
    state.prev_diag_length = current_len
    state.prev_diag_count = counts[i]
    lengths[i] = new_len
    counts[i] = new_count
    return state


def count_linear_space(
    a: Symbols,
    b: Symbols,
    kind: CountKind | str,
    _state_probe: Optional[Callable[[object, list], None]] = None,
) -> tuple[int, int]:
    """LCS length and count using O(min(m, n)) working cells.

    Returns exactly what the corresponding full-table function returns but
    never materializes a table: only one mixed column of lengths and counts
    (min(m, n) + 1 cells each) plus two scalar diagonal carries are kept.
    ``kind`` selects distinct-string or embedding counting and may be given
    as a ``CountKind`` or its string value.

    ``_state_probe`` is a debug hook: it receives the working arrays before
    and after the run so tests can audit the memory footprint.
    """
    kind = CountKind(kind)
    rows, cols = (a, b) if len(a) <= len(b) else (b, a)
    embeddings = kind is CountKind.EMBEDDINGS

    # Row symbols are interned to dense integer ids so the hot loop compares
    # machine words (the mapping preserves == / hash equality semantics).
    # Column symbols are looked up lazily, one scalar per column, so the
    # working set stays at min(m, n) + 1 cells per array.
    ids: dict[Hashable, int] = {}
    row_ids = array("q", (ids.setdefault(sym, len(ids)) for sym in rows))

    m = len(rows)
    zero, one = _bigint(0), _bigint(1)
    lengths = array("q", bytes(8 * (m + 1)))
    counts = [one] * (m + 1)
    if _state_probe is not None:
        _state_probe(lengths, counts)

    step = _speedups.step_column if _speedups is not None else _step_column
    lookup = ids.get
    for col_sym in cols:
        step(row_ids, lookup(col_sym, -1), lengths, counts, embeddings, zero)

    if _state_probe is not None:
        _state_probe(lengths, counts)
    return lengths[m], int(counts[m])


def _step_column(row_ids, col_id, lengths, counts, embeddings, zero):
    """Python version of the one-column update (see _speedups.pyx).

    Overwrites the single lengths/counts column in place for the column
    whose symbol has id ``col_id`` (-1: matches no row).  ``old_len`` /
    ``old_count`` carry the previous column's diagonal cell across each
    overwrite.
    """
    old_len = 0
    old_count = counts[0]
    i = 1
    for row_sym in row_ids:
        current_len = lengths[i]
        up_len = lengths[i - 1]
        if row_sym == col_id:
            new_len = old_len + 1
            new_count = old_count
            if not embeddings:
                old_len = current_len
                old_count = counts[i]
                lengths[i] = new_len
                counts[i] = new_count
                i += 1
                continue
        else:
            new_len = up_len if up_len >= current_len else current_len
            new_count = zero
        if up_len == new_len:
            new_count += counts[i - 1]
        if current_len == new_len:
            new_count += counts[i]
        if old_len == new_len:
            new_count -= old_count
        assert new_count >= 0, "correction went negative"
        old_len = current_len
        old_count = counts[i]
        lengths[i] = new_len
        counts[i] = new_count
        i += 1


def summarize(
    a: Symbols,
    b: Symbols,
    *,
    distinct: bool = True,
    embeddings: bool = True,
    algorithm: str = "linear",
) -> LcsSummary:
    """Convenience wrapper returning an ``LcsSummary`` for ``a`` and ``b``.

    ``algorithm`` is ``"linear"`` (rolling column, the default) or
    ``"full"`` (whole table); both give identical numbers.
    """
    if algorithm not in ("linear", "full"):
        raise ValueError(f"unknown algorithm: {algorithm!r}")
    length: Optional[int] = None
    d_count = e_count = None
    if distinct:
        if algorithm == "linear":
            length, d_count = count_linear_space(a, b, CountKind.DISTINCT)
        else:
            length, d_count = count_distinct_full(a, b)
    if embeddings:
        if algorithm == "linear":
            length, e_count = count_linear_space(a, b, CountKind.EMBEDDINGS)
        else:
            length, e_count = count_embeddings_full(a, b)
    if length is None:
        length = lcs_length(a, b)
    return LcsSummary(lcs_length=length, distinct_count=d_count, embedding_count=e_count)
