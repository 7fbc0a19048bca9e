"""Exact Gaussian elimination over any field-like scalar type.

Scalars only need +, -, *, / and truthiness as the zero test, which
covers ``Fraction`` and ``GaussianRational``.  Pivoting scans columns in
order and free variables are set to zero, so results are deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, TypeVar

F = TypeVar("F")

__all__ = ["solve", "nullspace", "invert"]


def _echelon(rows: list[list[F]], width: int) -> list[int]:
    """Reduce ``rows`` in place to reduced row echelon form over the first
    ``width`` columns (extra columns ride along).  Returns pivot columns."""
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def solve(
    matrix: Sequence[Sequence[F]],
    rhs: Sequence[F],
    zero: F = Fraction(0),
) -> Optional[list[F]]:
    """One solution of matrix * x = rhs, or None if inconsistent."""
    if len(matrix) != len(rhs):
        raise ValueError("matrix and right-hand side sizes differ")
    if not matrix:
        return []
    width = len(matrix[0])
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    pivots = _echelon(rows, width)
    for i in range(len(pivots), len(rows)):
        if rows[i][width]:
            return None
    solution = [zero] * width
    for r, c in enumerate(pivots):
        solution[c] = rows[r][width]
    return solution


def nullspace(
    matrix: Sequence[Sequence[F]],
    zero: F = Fraction(0),
    one: F = Fraction(1),
) -> list[list[F]]:
    """Basis of the kernel, one vector per free column."""
    if not matrix:
        return []
    width = len(matrix[0])
    rows = [list(row) for row in matrix]
    pivots = _echelon(rows, width)
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        vec = [zero] * width
        vec[free] = one
        for r, c in enumerate(pivots):
            vec[c] = zero - rows[r][free]
        basis.append(vec)
    return basis


def invert(
    matrix: Sequence[Sequence[F]],
    zero: F = Fraction(0),
    one: F = Fraction(1),
) -> Optional[list[list[F]]]:
    """Inverse of a square matrix, or None when singular."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    rows = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    pivots = _echelon(rows, n)
    if len(pivots) != n:
        return None
    return [row[n:] for row in rows]
