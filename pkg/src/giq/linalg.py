"""Exact dense linear algebra over the rationals.

Elimination is fraction-free (Bareiss) on integer-scaled rows, with
deterministic pivoting: leftmost column first, then the first row holding a
nonzero entry in that column.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = list[list[Fraction]]


def to_matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def transpose(a: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in row])
    return out


def _bareiss_echelon(rows: list[list[int]], ncols: int):
    """In-place fraction-free row echelon form; returns (pivot columns, row swaps)."""
    a = rows
    nrows = len(a)
    prev = 1
    r = 0
    pivots: list[int] = []
    swaps = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            swaps += 1
        piv = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
            # columns left of c in rows below r are already zero
        prev = piv
        pivots.append(c)
        r += 1
    return pivots, swaps


def rank(rows: Sequence[Sequence[object]]) -> int:
    if not rows:
        return 0
    ncols = len(rows[0])
    a = _integer_rows(rows)
    pivots, _ = _bareiss_echelon(a, ncols)
    return len(pivots)


def rref(rows: Sequence[Sequence[object]], ncols: int | None = None):
    """Reduced row echelon form: returns (nonzero rows as Fractions, pivot columns)."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    a = _integer_rows(rows)
    pivots, _ = _bareiss_echelon(a, ncols)
    red = [[Fraction(x) for x in a[i]] for i in range(len(pivots))]
    for i, c in enumerate(pivots):
        piv = red[i][c]
        red[i] = [x / piv for x in red[i]]
        for k in range(i):
            f = red[k][c]
            if f:
                red[k] = [x - f * y for x, y in zip(red[k], red[i])]
    return red, pivots


def nullspace(rows: Sequence[Sequence[object]], ncols: int) -> list[list[Fraction]]:
    """Right kernel basis; one vector per free column, with a 1 in that column.

    Each vector's last nonzero entry is its free column, so when columns are
    sorted ascending in a monomial order the vectors come out monic.
    """
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(v)
    return basis


def determinant(rows: Sequence[Sequence[object]]) -> Fraction:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    fr = to_matrix(rows)
    scale = Fraction(1)
    for row in fr:
        den = 1
        for x in row:
            den = lcm(den, x.denominator)
        scale *= den
    a = _integer_rows(fr)
    pivots, swaps = _bareiss_echelon(a, n)
    if len(pivots) < n:
        return Fraction(0)
    det = Fraction(a[n - 1][n - 1]) / scale
    return -det if swaps % 2 else det


def solve(a: Sequence[Sequence[object]], b: Sequence[object]) -> list[Fraction]:
    """Solve a square nonsingular system exactly."""
    n = len(a)
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug, n + 1)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]
