"""Small exact linear algebra over Fractions (dense lists of rows)."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[Fraction]]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        orow = out[i]
        for k in range(inner):
            v = row[k]
            if v:
                brow = b[k]
                for j in range(cols):
                    if brow[j]:
                        orow[j] += v * brow[j]
    return out


def add(a: Matrix, b: Matrix, scale=1) -> Matrix:
    return [[x + scale * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scalar_mul(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def kron(a: Matrix, b: Matrix) -> Matrix:
    rb, cb = len(b), len(b[0]) if b else 0
    out = zeros(len(a) * rb, (len(a[0]) if a else 0) * cb)
    for i, row in enumerate(a):
        for j, v in enumerate(row):
            if v:
                for k in range(rb):
                    for l in range(cb):
                        out[i * rb + k][j * cb + l] = v * b[k][l]
    return out


def is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def row_reduce(a: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(map(Fraction, row)) for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return len(row_reduce(a)[1])


def kernel(a: Matrix, ncols: Optional[int] = None) -> Matrix:
    """Basis of the right null space, as a list of column vectors."""
    cols = len(a[0]) if a else (ncols or 0)
    if not a:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    red, piv = row_reduce(a)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, pc in enumerate(piv):
            v[pc] = -red[r][f]
        basis.append(v)
    return basis


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    red, piv = row_reduce(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def solve_in_span(basis_cols: Matrix, v: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """Coefficients expressing v in the span of the given columns, or None."""
    n = len(v)
    k = len(basis_cols)
    aug = [[basis_cols[j][i] for j in range(k)] + [v[i]] for i in range(n)]
    red, piv = row_reduce(aug)
    if k in piv:
        return None
    out = [Fraction(0)] * k
    for r, pc in enumerate(piv):
        out[pc] = red[r][k]
    return out


def matpow(a: Matrix, e: int) -> Matrix:
    out = identity(len(a))
    base = a
    while e:
        if e & 1:
            out = matmul(out, base)
        base = matmul(base, base)
        e >>= 1
    return out


def to_json(a: Matrix):
    return [[str(x) for x in row] for row in a]
