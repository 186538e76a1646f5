"""Exact Gaussian elimination over Q."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [[Fraction(x) for x in r] for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r >= len(rows):
            break
        # prefer a pivot with the smallest denominator to limit growth
        best = None
        for i in range(r, len(rows)):
            v = rows[i][col]
            if v and (best is None or v.denominator < rows[best][col].denominator):
                best = i
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        piv = rows[r][col]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][col]
                if f:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(col)
        r += 1
    return rows[:r], pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def rational_nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right nullspace; one vector per free column."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(matrix)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    """True iff the row spans of ``a`` and ``b`` coincide."""
    ra, _ = rref(a) if a else ([], [])
    rb, _ = rref(b) if b else ([], [])
    return ra == rb
