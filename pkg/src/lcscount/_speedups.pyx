# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled rolling-column update.

Mirrors ``lcscount.core._step_column`` exactly; the Python version is the
reference and the two are equivalence-tested.  Count cells stay arbitrary
Python integers (or gmpy2 mpz), only the loop bookkeeping and the length
comparisons run at C speed.
"""


def step_column(const long long[::1] row_ids, long long col_id,
                long long[::1] lengths, list counts, bint embeddings,
                object zero):
    cdef Py_ssize_t m = row_ids.shape[0]
    cdef Py_ssize_t i
    cdef long long old_len, new_len, current_len, up_len
    cdef object old_count, new_count
    old_len = 0
    old_count = counts[0]
    for i in range(1, m + 1):
        current_len = lengths[i]
        up_len = lengths[i - 1]
        if row_ids[i - 1] == col_id:
            new_len = old_len + 1
            new_count = old_count
            if not embeddings:
                old_len = current_len
                old_count = counts[i]
                lengths[i] = new_len
                counts[i] = new_count
                continue
        else:
            new_len = up_len if up_len >= current_len else current_len
            new_count = zero
        if up_len == new_len:
            new_count = new_count + counts[i - 1]
        if current_len == new_len:
            new_count = new_count + counts[i]
        if old_len == new_len:
            new_count = new_count - old_count
        old_len = current_len
        old_count = counts[i]
        lengths[i] = new_len
        counts[i] = new_count
