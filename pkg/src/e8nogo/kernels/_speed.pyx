# cython: language_level=3
"""Compiled twin of ``_pure.eliminate``.

Same sparse integer RREF, same pivot rule, same normalization; arithmetic
stays on Python ints (values can exceed machine words), the win is the
compiled loop and dict traffic.  Output must match ``_pure`` exactly.
"""

from math import gcd


cdef void _row_primitive(dict row):
    cdef object g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for c in row:
            row[c] = row[c] // g


cdef void _combine(dict row, dict pivot_row, Py_ssize_t col):
    cdef object p = pivot_row[col]
    cdef object r = row[col]
    cdef list dead
    for c in row:
        row[c] = row[c] * p
    for c, v in pivot_row.items():
        row[c] = row.get(c, 0) - v * r
    dead = [c for c, v in row.items() if v == 0]
    for c in dead:
        del row[c]
    _row_primitive(row)


def eliminate(rows, Py_ssize_t ncols):
    """Integer reduced row echelon form of sparse rows; see ``_pure.eliminate``."""
    cdef list work = [dict(r) for r in rows if r]
    cdef list ech = []
    cdef list pivots = []
    cdef Py_ssize_t col, i, best
    cdef object v, a, best_abs
    cdef dict row, pivot_row
    for col in range(ncols):
        best = -1
        best_abs = 0
        for i in range(len(work)):
            row = <dict>work[i]
            v = row.get(col, 0)
            if v:
                a = -v if v < 0 else v
                if best < 0 or a < best_abs:
                    best = i
                    best_abs = a
        if best < 0:
            continue
        pivot_row = <dict>work.pop(best)
        if pivot_row[col] < 0:
            for c in pivot_row:
                pivot_row[c] = -pivot_row[c]
        _row_primitive(pivot_row)
        for i in range(len(work)):
            row = <dict>work[i]
            if row.get(col, 0):
                _combine(row, pivot_row, col)
        work = [r for r in work if r]
        for i in range(len(ech)):
            row = <dict>ech[i]
            if row.get(col, 0):
                _combine(row, pivot_row, col)
        ech.append(pivot_row)
        pivots.append(col)
    return ech, pivots
