"""Pure-Python exact integer elimination kernel.

This is the reference implementation of the hot loop shared with the
compiled twin in ``_speed.pyx``.  Both must produce byte-identical output:
rows are sparse ``{col: int}`` dicts, every surviving row is primitive
(content 1) with a positive pivot, and pivot selection is deterministic
(smallest absolute pivot value, earliest row on ties).
"""

from __future__ import annotations

from math import gcd


def _row_primitive(row: dict) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for c in row:
            row[c] //= g


def _combine(row: dict, pivot_row: dict, col: int) -> None:
    # row := row * p - pivot_row * r, eliminating `col`; keeps integers exact.
    p = pivot_row[col]
    r = row[col]
    for c in row:
        row[c] *= p
    for c, v in pivot_row.items():
        row[c] = row.get(c, 0) - v * r
    for c in [c for c, v in row.items() if v == 0]:
        del row[c]
    _row_primitive(row)


def eliminate(rows: list, ncols: int) -> tuple:
    """Integer reduced row echelon form of sparse rows.

    Returns ``(echelon_rows, pivot_cols)`` where echelon row ``i`` has its
    pivot at ``pivot_cols[i]``, pivot value positive, entries above and
    below every pivot zero, and each row primitive.
    """
    work = [dict(r) for r in rows if r]
    ech: list = []
    pivots: list = []
    for col in range(ncols):
        best = -1
        best_abs = 0
        for i, row in enumerate(work):
            v = row.get(col, 0)
            if v:
                a = -v if v < 0 else v
                if best < 0 or a < best_abs:
                    best = i
                    best_abs = a
        if best < 0:
            continue
        pivot_row = work.pop(best)
        if pivot_row[col] < 0:
            for c in pivot_row:
                pivot_row[c] = -pivot_row[c]
        _row_primitive(pivot_row)
        for row in work:
            if row.get(col, 0):
                _combine(row, pivot_row, col)
        work = [r for r in work if r]
        for row in ech:
            if row.get(col, 0):
                _combine(row, pivot_row, col)
        ech.append(pivot_row)
        pivots.append(col)
    return ech, pivots
