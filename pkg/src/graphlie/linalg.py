"""Exact rank and nullspace over the rationals.

Rows are scaled to integers and reduced with fraction-free (Bareiss)
elimination, so no intermediate ever leaves the integers and no floating
point is involved.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = Sequence[Sequence[Fraction | int]]


def _integer_rows(rows: Matrix) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * scale) for x in fr])
    return out


def _bareiss_echelon(rows: list[list[int]], n_cols: int) -> tuple[list[list[int]], list[int]]:
    """Row echelon form by fraction-free elimination; returns (rows, pivot columns)."""
    m = [row[:] for row in rows]
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            row_i, row_r = m[i], m[r]
            for k in range(c, n_cols):
                q, rem = divmod(p * row_i[k] - a * row_r[k], prev)
                assert rem == 0, "Bareiss division must be exact"
                row_i[k] = q
        prev = p
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Matrix, n_cols: int | None = None) -> int:
    if not rows:
        return 0
    cols = len(rows[0]) if n_cols is None else n_cols
    return len(_bareiss_echelon(_integer_rows(rows), cols)[1])


def nullspace(rows: Matrix, n_cols: int) -> list[list[Fraction]]:
    """A basis of ``{x : A x = 0}`` for the ``len(rows) x n_cols`` matrix ``A``."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(n_cols)] for j in range(n_cols)]
    echelon, pivots = _bareiss_echelon(_integer_rows(rows), n_cols)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n_cols
        x[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            s = sum((echelon[r][k] * x[k] for k in range(c + 1, n_cols)), Fraction(0))
            x[c] = -s / echelon[r][c]
        basis.append(x)
    return basis


def mat_mul(a: Matrix, b: Matrix) -> list[list[Fraction]]:
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [
        [sum((Fraction(a[i][k]) * b[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)]
        for i in range(len(a))
    ]


def mat_vec(a: Matrix, x: Sequence[Fraction]) -> list[Fraction]:
    return [sum((Fraction(aij) * xj for aij, xj in zip(row, x)), Fraction(0)) for row in a]
