"""Exact Gaussian elimination over a cyclotomic field.

Matrices are lists of rows; rows are lists of CycScalar.  Everything is
dense but elimination skips zero entries, which keeps the monomial matrices
produced elsewhere in this package cheap.
"""

from __future__ import annotations

from .cyclofield import CyclotomicField, CycScalar


def rref(rows: list[list[CycScalar]], field: CyclotomicField):
    """Reduced row echelon form (in place on a copy); returns (rows, pivot_cols)."""
    mat = [list(r) for r in rows]
    if not mat:
        return mat, []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [x * inv if x else x for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b if b else a for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows: list[list[CycScalar]], field: CyclotomicField) -> int:
    _, pivots = rref(rows, field)
    return len(pivots)


def nullspace(rows: list[list[CycScalar]], field: CyclotomicField) -> list[list[CycScalar]]:
    """Basis of the right nullspace, echelon-normalized for determinism."""
    if not rows:
        return []
    ncols = len(rows[0])
    mat, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            if mat[r][fc]:
                vec[pc] = -mat[r][fc]
        basis.append(vec)
    return basis


def invert(rows: list[list[CycScalar]], field: CyclotomicField):
    """Exact inverse of a square matrix, or None if singular."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        return None
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)]
           for i, r in enumerate(rows)]
    mat, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in mat[:n]]
