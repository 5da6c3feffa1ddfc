"""
Exact linear algebra over Z and Q.

Matrices are lists of rows.  Ranks are computed with fraction-free
(Bareiss) elimination after clearing denominators row by row, so no
floating point and no intermediate Fractions are involved.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

__all__ = ["bareiss_rank", "rank", "rref", "nullspace", "to_fraction", "transpose"]

Matrix = list[list]


def to_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)]


def _integer_rows(m: Sequence[Sequence]) -> list[list[int]]:
    rows = []
    for row in m:
        row = [to_fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * den) for x in row])
    return rows


def bareiss_rank(m: Sequence[Sequence[int]]) -> int:
    """
    Rank of an integer matrix by fraction-free Gaussian elimination.

    Every division in the Bareiss update is exact, so entries stay integers.

    >>> bareiss_rank([[1, 2], [2, 4]])
    1
    >>> bareiss_rank([[0, 1], [1, 0], [1, 1]])
    2
    """
    a = [list(row) for row in m]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            aic = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - aic * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


def rank(m: Sequence[Sequence]) -> int:
    """Rank over Q of a matrix with int or Fraction entries."""
    if not m:
        return 0
    return bareiss_rank(_integer_rows(m))


def rref(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    a = [[to_fraction(x) for x in row] for row in m]
    if not a:
        return [], []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis (as a list of vectors) of ``{v : m v = 0}`` over Q."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if any(len(row) != ncols for row in m):
        raise ValueError(f"expected rows of length {ncols}")
    reduced, pivots = rref(m) if m else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis
