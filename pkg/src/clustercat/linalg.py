"""Small exact linear algebra kernel over the rationals.

Matrices are lists (or tuples) of rows; rows are sequences of Fraction or int.
Everything is immutable from the caller's point of view: functions never
mutate their arguments and return fresh tuples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = Sequence


def _frac_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows) -> tuple[tuple[tuple[Fraction, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot column indices).  Deterministic:
    pivots are chosen left to right, first nonzero entry in column order.
    """
    mat = _frac_rows(rows)
    if not mat:
        return (), ()
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    reduced = tuple(tuple(row) for row in mat[:r])
    return reduced, tuple(pivots)


def rank(rows) -> int:
    """Rank of a rational matrix.

    Integer matrices take a fraction-free (Bareiss) path; anything else is
    eliminated over Fraction.  Both are exact.
    """
    mat = [list(row) for row in rows]
    if not mat or not mat[0]:
        return 0
    if all(isinstance(x, int) for row in mat for x in row):
        return _rank_bareiss(mat)
    return len(rref(mat)[0])


def _rank_bareiss(mat) -> int:
    n, m = len(mat), len(mat[0])
    prev = 1
    r = 0
    for c in range(m):
        sel = None
        for i in range(r, n):
            if mat[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        piv = mat[r][c]
        for i in range(r + 1, n):
            fi = mat[i][c]
            row_i, row_r = mat[i], mat[r]
            for j in range(c, m):
                row_i[j] = (piv * row_i[j] - fi * row_r[j]) // prev
        prev = piv
        r += 1
        if r == n:
            break
    return r


def nullspace(rows, ncols=None):
    """Basis of the right kernel {x : A x = 0}, as tuples of Fraction.

    ncols is required when rows is empty (the kernel is then everything).
    """
    mat = list(rows)
    if not mat:
        if ncols is None:
            raise ValueError("nullspace of empty matrix needs ncols")
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    m = len(mat[0])
    red, pivots = rref(mat)
    pivset = set(pivots)
    free = [c for c in range(m) if c not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * m
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(tuple(v))
    return basis


def quotient_basis(span_rows, ambient_dim):
    """Data for the quotient of Q^ambient_dim by the row span of span_rows.

    Returns (free_indices, projection), where projection is a matrix with
    len(free_indices) rows and ambient_dim columns; applying it to a vector
    yields its class in the quotient, coordinates dual to the images of the
    unit vectors e_f for f in free_indices.
    """
    red, pivots = rref(span_rows) if span_rows else ((), ())
    pivset = set(pivots)
    free = tuple(c for c in range(ambient_dim) if c not in pivset)
    proj = []
    for f in free:
        row = [Fraction(0)] * ambient_dim
        row[f] = Fraction(1)
        for i, p in enumerate(pivots):
            row[p] = -red[i][f]
        proj.append(tuple(row))
    return free, tuple(proj)


def matvec(mat, vec):
    return tuple(sum((Fraction(a) * b for a, b in zip(row, vec)), Fraction(0)) for row in mat)


def matmul(a, b):
    if not b:
        return tuple(() for _ in a)
    bt = list(zip(*b))
    return tuple(
        tuple(sum((Fraction(x) * y for x, y in zip(row, col)), Fraction(0)) for col in bt)
        for row in a
    )


def solve(a_rows, b_vec):
    """One solution x of A x = b, or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    mat = _frac_rows(a_rows)
    if not mat:
        return () if all(Fraction(x) == 0 for x in b_vec) else None
    m = len(mat[0])
    aug = [row + [Fraction(b_vec[i])] for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    x = [Fraction(0)] * m
    for i, p in enumerate(pivots):
        if p == m:
            return None
        x[p] = red[i][m]
    return tuple(x)


def solve_in_columns(basis_cols, target_cols):
    """Express target column vectors in terms of basis column vectors.

    basis_cols: list of vectors spanning a subspace (assumed independent);
    target_cols: vectors known to lie in that span.  Returns the coefficient
    matrix X (len(basis_cols) x len(target_cols)) with B X = T, or raises
    ValueError if some target is outside the span.
    """
    if not basis_cols:
        if any(any(Fraction(x) != 0 for x in t) for t in target_cols):
            raise ValueError("target outside span of empty basis")
        return tuple(() for _ in range(0))
    dim = len(basis_cols[0])
    a_rows = [[basis_cols[j][i] for j in range(len(basis_cols))] for i in range(dim)]
    cols = []
    for t in target_cols:
        x = solve(a_rows, t)
        if x is None:
            raise ValueError("target outside span")
        cols.append(x)
    return tuple(tuple(cols[j][i] for j in range(len(cols))) for i in range(len(basis_cols)))


def is_zero_vec(vec) -> bool:
    return all(Fraction(x) == 0 for x in vec)
