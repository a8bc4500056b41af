"""Exact rational linear algebra on small dense matrices (lists of lists)."""

from __future__ import annotations

from fractions import Fraction


def transpose(M):
    return [list(col) for col in zip(*M)]


def mat_vec(M, v):
    return [sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in M]


def rref(M):
    """Reduced row echelon form over Q; returns (rows, pivot_columns)."""
    A = [[Fraction(x) for x in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pv = A[r][c]
        if pv != 1:
            A[r] = [x / pv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                fct = A[i][c]
                A[i] = [x - fct * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A[:r], pivots


def rank(M) -> int:
    if not M:
        return 0
    return len(rref(M)[1])


def det(M) -> Fraction | int:
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = -d
        d *= A[c][c]
        for i in range(c + 1, n):
            if A[i][c] != 0:
                fct = A[i][c] / A[c][c]
                A[i] = [x - fct * y for x, y in zip(A[i], A[c])]
    return int(d) if d.denominator == 1 else d


def inverse(M):
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def solve(M, b):
    """Unique solution of the square system M x = b."""
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(M)]
    R, piv = rref(aug)
    if piv != list(range(n)):
        raise ZeroDivisionError("singular system")
    return [row[n] for row in R]


def nullspace(M, ncols: int):
    """Basis of {x : M x = 0} over Q."""
    if not M:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, piv = rref(M)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(R, piv):
            v[pc] = -row[fc]
        basis.append(v)
    return basis
