"""Exact linear algebra over the integers and rationals.

The elimination kernel exists twice: a compiled Cython extension and a
pure-Python fallback.  Import picks the extension when it is built unless
``E8NOGO_PURE=1`` forces the fallback; everything downstream is identical
because both backends implement the same deterministic algorithm.

All solvers here are exact.  No floating point enters the engine.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd

if os.environ.get("E8NOGO_PURE") == "1":
    from . import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _speed as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _pure as _impl  # type: ignore[no-redef]

        BACKEND = "pure"

eliminate = _impl.eliminate

IntVector = tuple
SparseRow = dict


def dense_to_sparse(rows) -> list[dict[int, int]]:
    return [{j: int(v) for j, v in enumerate(r) if v} for r in rows]


def sparse_to_dense(row: dict[int, int], ncols: int) -> tuple[int, ...]:
    return tuple(row.get(j, 0) for j in range(ncols))


def rank(rows: list[dict[int, int]], ncols: int) -> int:
    return len(eliminate(rows, ncols)[1])


def nullspace(rows: list[dict[int, int]], ncols: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of the right kernel, one vector per free column.

    Basis vectors are ordered by free column and normalized so the free
    coordinate is positive; the result is deterministic.
    """
    ech, pivots = eliminate(rows, ncols)
    pivot_of = {c: ech[i] for i, c in enumerate(pivots)}
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        coords = {f: Fraction(1)}
        for c in pivots:
            row = pivot_of[c]
            v = row.get(f, 0)
            if v:
                coords[c] = Fraction(-v, row[c])
        den = 1
        for q in coords.values():
            den = den * q.denominator // gcd(den, q.denominator)
        vec = [0] * ncols
        for c, q in coords.items():
            vec[c] = int(q * den)
        g = 0
        for v in vec:
            g = gcd(g, v)
        if g > 1:
            vec = [v // g for v in vec]
        basis.append(tuple(vec))
    return basis


def solve(rows: list[dict[int, int]], rhs: list[int], ncols: int):
    """One exact rational solution of ``A x = rhs`` or None if inconsistent.

    Free variables are set to zero.
    """
    aug = []
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b:
            r[ncols] = int(b)
        aug.append(r)
    ech, pivots = eliminate(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        row = ech[i]
        x[c] = Fraction(row.get(ncols, 0), row[c])
    return tuple(x)


def in_row_span(rows: list[dict[int, int]], vec: list[int], ncols: int) -> bool:
    """Whether an integer vector lies in the rational row span."""
    base = rank(rows, ncols)
    v = {j: int(x) for j, x in enumerate(vec) if x}
    return rank(rows + [v], ncols) == base


def fraction_matrix_inverse(mat) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of a square rational matrix (raises on singular)."""
    n = len(mat)
    den = 1
    for row in mat:
        for v in row:
            q = Fraction(v)
            den = den * q.denominator // gcd(den, q.denominator)
    rows = []
    for i, row in enumerate(mat):
        r = {j: int(Fraction(v) * den) for j, v in enumerate(row) if v}
        r[n + i] = den
        rows.append(r)
    ech, pivots = eliminate(rows, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    inv = [[Fraction(0)] * n for _ in range(n)]
    for i, c in enumerate(pivots[:n]):
        p = ech[i][c]
        for j in range(n):
            inv[c][j] = Fraction(ech[i].get(n + j, 0), p)
    return tuple(tuple(r) for r in inv)
