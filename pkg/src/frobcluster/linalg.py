"""Exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`.  Only the handful of
operations the rest of the package needs are provided: reduced row echelon
form, rank, null spaces and an incremental row-space basis used when building
relation subspaces one vector at a time.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = list[list[Fraction]]


def to_matrix(rows: Iterable[Iterable[int | Fraction]]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def zeros(n_rows: int, n_cols: int) -> Matrix:
    return [[Fraction(0)] * n_cols for _ in range(n_rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    """Product ``a @ b``.  ``inner`` is needed when ``a`` has no rows."""
    if not a:
        return []
    k = len(a[0]) if inner is None else inner
    n_cols = len(b[0]) if b else 0
    out = zeros(len(a), n_cols)
    for i, row in enumerate(a):
        out_row = out[i]
        for t in range(k):
            v = row[t]
            if v:
                b_row = b[t]
                for j in range(n_cols):
                    if b_row[j]:
                        out_row[j] += v * b_row[j]
    return out


def transpose(a: Matrix, n_cols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(n_cols or 0)]
    return [list(col) for col in zip(*a)]


def rref(a: Matrix, n_cols: int | None = None) -> tuple[Matrix, list[int]]:
    """Return the reduced row echelon form of ``a`` and its pivot columns.

    Zero rows are dropped, so ``len(pivots)`` is the rank.
    """
    m = [list(row) for row in a]
    cols = n_cols if n_cols is not None else (len(m[0]) if m else 0)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def nullspace(a: Matrix, n_cols: int) -> Matrix:
    """Basis (as rows) of ``{v : a v = 0}`` for a matrix with ``n_cols`` columns."""
    if not a:
        return identity(n_cols)
    red, pivots = rref(a, n_cols)
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def left_nullspace(a: Matrix, n_rows: int) -> Matrix:
    """Basis (as rows) of ``{y : y a = 0}``; ``a`` has ``n_rows`` rows."""
    n_cols = len(a[0]) if a else 0
    return nullspace(transpose(a, n_rows), n_rows) if n_cols else identity(n_rows)


class SparseBasis:
    """Row-reduced basis of a growing subspace of ``Q^n``.

    Vectors are dicts ``{coordinate: Fraction}``.  Each stored row has a pivot
    coordinate that appears in no other stored row, so ``reduce`` gives a
    canonical representative of a vector modulo the subspace.
    """

    def __init__(self) -> None:
        self.rows: dict[int, dict[int, Fraction]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        for p in [k for k in v if k in self.rows]:
            c = v.get(p)
            if not c:
                continue
            for k, rc in self.rows[p].items():
                nv = v.get(k, 0) - c * rc
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: dict[int, Fraction]) -> bool:
        """Insert ``vec``; return True when it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = 1 / v[p]
        v = {k: c * inv for k, c in v.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                for k, vc in v.items():
                    nv = row.get(k, 0) - c * vc
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self.rows[p] = v
        return True

    def pivots(self) -> set[int]:
        return set(self.rows)


def solve(a: Matrix, b: Sequence[Fraction], n_cols: int) -> list[Fraction] | None:
    """One solution of ``a x = b`` or None when inconsistent."""
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    red, pivots = rref(aug, n_cols + 1)
    if n_cols in pivots:
        return None
    x = [Fraction(0)] * n_cols
    for row, p in zip(red, pivots):
        x[p] = row[n_cols]
    return x
