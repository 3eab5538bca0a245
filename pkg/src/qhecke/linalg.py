"""Exact dense matrices over a cyclotomic field (tuples of tuples of Scalars)."""

from __future__ import annotations

from typing import Sequence

from .scalar import CycloField, Scalar

Matrix = tuple  # tuple[tuple[Scalar, ...], ...]


def to_matrix(rows: Sequence[Sequence], field: CycloField) -> Matrix:
    rows = [tuple(field(x) for x in r) for r in rows]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    return tuple(rows)


def identity(n: int, field: CycloField) -> Matrix:
    one, zero = field.one(), field.zero()
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    m = len(b[0]) if b else 0
    cols = list(zip(*b))
    out = []
    for r in a:
        row = []
        for c in cols:
            s = None
            for x, y in zip(r, c):
                if x and y:
                    s = x * y if s is None else s + x * y
            row.append(s if s is not None else r[0].field.zero())
        out.append(tuple(row))
    assert len(out) == n and all(len(r) == m for r in out)
    return tuple(out)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def rref(rows: list[list[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row-echelon form; pivot on the first nonzero entry of each column.

    Returns the nonzero rows and the pivot column of each.
    """
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if not piv.is_one():
            inv = piv.inverse()
            rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def determinant(a: Matrix) -> Scalar:
    n = len(a)
    if n == 0:
        raise ValueError("empty matrix")
    fld = a[0][0].field
    m = [list(r) for r in a]
    det = fld.one()
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return fld.zero()
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        piv = m[c][c]
        det = det * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def nullspace(rows: list[list[Scalar]], ncols: int, field: CycloField) -> tuple[list[list[Scalar]], list[int]]:
    """Basis of {x : A x = 0}, one vector per free column (that column 1, other free columns 0)."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [field.zero()] * ncols
        x[f] = field.one()
        for row, pc in zip(red, pivots):
            if row[f]:
                x[pc] = -row[f]
        basis.append(x)
    return basis, free
