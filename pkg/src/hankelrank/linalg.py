"""Exact linear algebra over Q (dense, small matrices)."""

from __future__ import annotations

from fractions import Fraction

from .errors import ContractError, DimensionError


def _copy(rows):
    return [[Fraction(v) for v in row] for row in rows]


def rank(rows) -> int:
    """Rank by exact Gaussian elimination with partial (first-nonzero) pivoting."""
    if not rows:
        return 0
    a = _copy(rows)
    nrows, ncols = len(a), len(a[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][col]
        a[r] = [v * inv for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


def is_invertible(rows) -> bool:
    n = len(rows)
    return n > 0 and all(len(r) == n for r in rows) and rank(rows) == n


def invert(rows):
    """Exact inverse of a square matrix; raises on singular input."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("matrix is not square")
    a = _copy(rows)
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            raise ContractError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        f = 1 / a[col][col]
        a[col] = [v * f for v in a[col]]
        inv[col] = [v * f for v in inv[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[col])]
    return inv


def solve(rows, rhs_columns):
    """Solve A x = b for each column b in rhs_columns; raises on singular A.

    ``rhs_columns`` is a list of columns; returns the list of solution
    columns in the same order.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("matrix is not square")
    k = len(rhs_columns)
    a = [
        [Fraction(rows[i][j]) for j in range(n)]
        + [Fraction(col[i]) for col in rhs_columns]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            raise ContractError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        f = 1 / a[col][col]
        a[col] = [v * f for v in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [[a[i][n + j] for i in range(n)] for j in range(k)]


def mat_vec(rows, vec):
    return [sum((r[j] * vec[j] for j in range(len(vec))), Fraction(0)) for r in rows]


def mat_mul(a, b):
    n, k = len(a), len(b[0])
    return [
        [sum((a[i][t] * b[t][j] for t in range(len(b))), Fraction(0)) for j in range(k)]
        for i in range(n)
    ]


def det_bareiss(rows) -> Fraction:
    """Determinant via fraction-free elimination on a denominator-cleared copy."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in rows):
        raise DimensionError("matrix is not square")
    scale = Fraction(1)
    a = []
    for row in rows:
        row = [Fraction(v) for v in row]
        lcm = 1
        for v in row:
            d = v.denominator
            lcm = lcm * d // _gcd(lcm, d)
        scale *= lcm
        a.append([int(v * lcm) for v in row])
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                a[i][j] = (a[i][j] * a[col][col] - a[i][col] * a[col][j]) // prev
            a[i][col] = 0
        prev = a[col][col]
    return Fraction(sign * a[n - 1][n - 1], 1) / scale


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
