"""Small exact linear algebra over Fractions: determinants and nullspaces."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def det(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by exact Gaussian elimination with partial structure."""
    n = len(rows)
    mat = [[Fraction(v) for v in row] for row in rows]
    if any(len(row) != n for row in mat):
        raise ValueError("determinant requires a square matrix")
    result = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            mat[col], mat[pivot_row] = mat[pivot_row], mat[col]
            result = -result
        pivot = mat[col][col]
        result *= pivot
        for r in range(col + 1, n):
            if mat[r][col] != 0:
                scale = mat[r][col] / pivot
                for c in range(col, n):
                    mat[r][c] -= scale * mat[col][c]
    return result


def _primitive(vec: list[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers with first nonzero > 0."""
    den_lcm = 1
    for v in vec:
        den_lcm = den_lcm * v.denominator // gcd(den_lcm, v.denominator)
    ints = [int(v * den_lcm) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    first = next((v for v in ints if v != 0), 0)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def nullspace_basis(rows: list[list[Fraction]]) -> list[tuple[int, ...]]:
    """Canonical basis of {c : M c = 0}, as primitive integer vectors.

    Basis vectors come from the free columns of the reduced row echelon form,
    in column order; each is scaled to coprime integers with the first nonzero
    entry positive.  Deterministic for a given row list.
    """
    if not rows:
        raise ValueError("nullspace of an empty matrix is undefined")
    width = len(rows[0])
    mat = [[Fraction(v) for v in row] for row in rows]
    if any(len(row) != width for row in mat):
        raise ValueError("ragged matrix")

    pivots: list[int] = []
    row_idx = 0
    for col in range(width):
        pivot_row = next((r for r in range(row_idx, len(mat)) if mat[r][col] != 0), None)
        if pivot_row is None:
            continue
        mat[row_idx], mat[pivot_row] = mat[pivot_row], mat[row_idx]
        pivot = mat[row_idx][col]
        mat[row_idx] = [v / pivot for v in mat[row_idx]]
        for r in range(len(mat)):
            if r != row_idx and mat[r][col] != 0:
                scale = mat[r][col]
                mat[r] = [a - scale * b for a, b in zip(mat[r], mat[row_idx])]
        pivots.append(col)
        row_idx += 1
        if row_idx == len(mat):
            break

    free_cols = [c for c in range(width) if c not in pivots]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * width
        vec[free] = Fraction(1)
        for r, pcol in enumerate(pivots):
            vec[pcol] = -mat[r][free]
        basis.append(_primitive(vec))
    return basis
