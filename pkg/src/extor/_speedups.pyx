# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twins of the elimination kernels in extor.linalg.

Same algorithms, same pivot choices, same (unique) outputs; the win is loop
and dispatch overhead on the exact rational coefficient objects.
"""

from extor.rational import ONE


def rref_sparse(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t col, i, n, best, best_len, idx
    cdef list remaining = list(range(len(rows)))
    cdef list pivot_rows = []
    cdef list pivot_cols = []
    cdef dict row, piv
    cdef object inv, factor, v, cur
    for col in range(ncols):
        best = -1
        best_len = -1
        n = len(remaining)
        for i in range(n):
            idx = <Py_ssize_t>remaining[i]
            row = <dict>rows[idx]
            if col in row and (best < 0 or len(row) < best_len):
                best = idx
                best_len = len(row)
        if best < 0:
            continue
        remaining.remove(best)
        piv = <dict>rows[best]
        inv = ONE / piv[col]
        if inv != ONE:
            for c in piv:
                piv[c] = piv[c] * inv
        for idx_obj in remaining + pivot_rows:
            idx = <Py_ssize_t>idx_obj
            row = <dict>rows[idx]
            factor = row.get(col)
            if factor is None:
                continue
            for c, v in piv.items():
                cur = row.get(c)
                if cur is None:
                    row[c] = -factor * v
                else:
                    cur = cur - factor * v
                    if cur:
                        row[c] = cur
                    else:
                        del row[c]
        pivot_rows.append(best)
        pivot_cols.append(col)
    cdef list order = sorted(range(len(pivot_cols)), key=lambda i: pivot_cols[i])
    return ([rows[<Py_ssize_t>pivot_rows[<Py_ssize_t>i]] for i in order],
            [pivot_cols[<Py_ssize_t>i] for i in order])


def rank_sparse(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t col, i, n, best, best_len, idx, rank
    cdef list remaining = list(range(len(rows)))
    cdef dict row, piv
    cdef object inv, factor, v, cur
    rank = 0
    for col in range(ncols):
        best = -1
        best_len = -1
        n = len(remaining)
        for i in range(n):
            idx = <Py_ssize_t>remaining[i]
            row = <dict>rows[idx]
            if col in row and (best < 0 or len(row) < best_len):
                best = idx
                best_len = len(row)
        if best < 0:
            continue
        remaining.remove(best)
        piv = <dict>rows[best]
        inv = ONE / piv[col]
        if inv != ONE:
            for c in piv:
                piv[c] = piv[c] * inv
        n = len(remaining)
        for i in range(n):
            idx = <Py_ssize_t>remaining[i]
            row = <dict>rows[idx]
            factor = row.get(col)
            if factor is None:
                continue
            for c, v in piv.items():
                cur = row.get(c)
                if cur is None:
                    row[c] = -factor * v
                else:
                    cur = cur - factor * v
                    if cur:
                        row[c] = cur
                    else:
                        del row[c]
        rank += 1
    return rank


def rref_dense(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t col, i, c, piv, r
    cdef list pivot_cols = []
    cdef list prow, row
    cdef object inv, factor, pv
    r = 0
    for col in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if (<list>rows[i])[col]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = <list>rows[r]
        inv = ONE / prow[col]
        if inv != ONE:
            for c in range(col, ncols):
                if prow[c]:
                    prow[c] = prow[c] * inv
        for i in range(nrows):
            if i == r:
                continue
            row = <list>rows[i]
            factor = row[col]
            if factor:
                for c in range(col, ncols):
                    pv = prow[c]
                    if pv:
                        row[c] = row[c] - factor * pv
        pivot_cols.append(col)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivot_cols
