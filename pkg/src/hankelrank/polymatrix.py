"""Matrices of polynomials: minors, determinants, Jacobians."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .errors import DimensionError, ResourceError
from .poly import MultiPoly

# Cofactor expansion is refused above this size; desk-scale honesty guard.
MAX_SYMBOLIC_DET = 8


class PolyMatrix:
    """Row-major matrix of MultiPoly entries sharing one variable count."""

    __slots__ = ("rows", "cols", "nvars", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[MultiPoly]):
        if len(entries) != rows * cols:
            raise DimensionError(
                f"need {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        nv = entries[0].nvars if entries else 0
        for e in entries:
            if e.nvars != nv:
                raise DimensionError("entries do not share one variable count")
        self.rows = rows
        self.cols = cols
        self.nvars = nv
        self.entries = list(entries)

    @classmethod
    def from_rows(cls, rows_of_entries) -> "PolyMatrix":
        r = len(rows_of_entries)
        c = len(rows_of_entries[0]) if r else 0
        flat = [e for row in rows_of_entries for e in row]
        return cls(r, c, flat)

    def entry(self, i: int, j: int) -> MultiPoly:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DimensionError(f"entry ({i},{j}) out of range")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            self.cols,
            self.rows,
            [self.entry(i, j) for j in range(self.cols) for i in range(self.rows)],
        )

    def eval(self, point) -> list:
        """Evaluate at a rational point; returns rows of Fractions."""
        return [[e.eval(point) for e in self.row(i)] for i in range(self.rows)]

    def is_constant(self) -> bool:
        return all(e.is_constant() for e in self.entries)

    def mat_vec_polys(self, vec: Sequence[MultiPoly]) -> list:
        """Matrix times a vector of polynomials."""
        if len(vec) != self.cols:
            raise DimensionError("vector length does not match column count")
        out = []
        for i in range(self.rows):
            acc = MultiPoly.zero(self.nvars)
            for j in range(self.cols):
                acc = acc + self.entry(i, j) * vec[j]
            out.append(acc)
        return out


def jacobian(system: Sequence[MultiPoly], var_indices: Sequence[int]) -> PolyMatrix:
    """Partial-derivative matrix of a system w.r.t. the selected variables."""
    if not system:
        raise DimensionError("empty system has no Jacobian")
    nv = system[0].nvars
    for f in system:
        if f.nvars != nv:
            raise DimensionError("system entries disagree on variable count")
    for i in var_indices:
        if not 0 <= i < nv:
            raise DimensionError(f"variable index {i} out of range")
    entries = [f.derivative(i) for f in system for i in var_indices]
    return PolyMatrix(len(system), len(var_indices), entries)


def _det_cofactor(mat: PolyMatrix, row_idx: tuple, col_idx: tuple, memo: dict) -> MultiPoly:
    key = (row_idx, col_idx)
    hit = memo.get(key)
    if hit is not None:
        return hit
    n = len(row_idx)
    if n == 1:
        val = mat.entry(row_idx[0], col_idx[0])
    else:
        # expand along the first listed row
        val = MultiPoly.zero(mat.nvars)
        r = row_idx[0]
        rest_rows = row_idx[1:]
        sign = 1
        for pos, c in enumerate(col_idx):
            e = mat.entry(r, c)
            if not e.is_zero():
                sub_cols = col_idx[:pos] + col_idx[pos + 1 :]
                minor = _det_cofactor(mat, rest_rows, sub_cols, memo)
                term = e * minor
                val = val + (term if sign > 0 else -term)
            sign = -sign
    memo[key] = val
    return val


def determinant(mat: PolyMatrix) -> MultiPoly:
    """Exact determinant of a square PolyMatrix.

    Constant matrices go through fraction-free elimination; symbolic
    ones use cofactor expansion with sub-minor memoization, refused
    above size MAX_SYMBOLIC_DET.
    """
    if mat.rows != mat.cols:
        raise DimensionError("determinant of a non-square matrix")
    if mat.rows == 0:
        return MultiPoly.const(mat.nvars, 1)
    if mat.is_constant():
        value = linalg.det_bareiss(
            [[e.constant_value() for e in mat.row(i)] for i in range(mat.rows)]
        )
        return MultiPoly.const(mat.nvars, value)
    if mat.rows > MAX_SYMBOLIC_DET:
        raise ResourceError(
            f"symbolic determinant of size {mat.rows} exceeds cap {MAX_SYMBOLIC_DET}"
        )
    idx = tuple(range(mat.rows))
    return _det_cofactor(mat, idx, idx, {})


def minors(mat: PolyMatrix, k: int) -> list:
    """All k x k minors, lexicographic over row subsets then column subsets."""
    if not 1 <= k <= min(mat.rows, mat.cols):
        raise DimensionError(
            f"minor size {k} out of range for a {mat.rows}x{mat.cols} matrix"
        )
    out = []
    memo: dict = {}
    for row_idx in combinations(range(mat.rows), k):
        for col_idx in combinations(range(mat.cols), k):
            if k == 1:
                out.append(mat.entry(row_idx[0], col_idx[0]))
                continue
            sub_constant = all(
                mat.entry(i, j).is_constant() for i in row_idx for j in col_idx
            )
            if sub_constant:
                value = linalg.det_bareiss(
                    [[mat.entry(i, j).constant_value() for j in col_idx] for i in row_idx]
                )
                out.append(MultiPoly.const(mat.nvars, value))
            else:
                if k > MAX_SYMBOLIC_DET:
                    raise ResourceError(
                        f"symbolic minors of size {k} exceed cap {MAX_SYMBOLIC_DET}"
                    )
                out.append(_det_cofactor(mat, row_idx, col_idx, memo))
    return out


def determinant_oracle(mat: PolyMatrix) -> MultiPoly:
    """Signed-permutation-sum determinant; brute-force oracle for tests."""
    from itertools import permutations

    if mat.rows != mat.cols:
        raise DimensionError("determinant of a non-square matrix")
    n = mat.rows
    total = MultiPoly.zero(mat.nvars)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = MultiPoly.const(mat.nvars, Fraction(sign))
        for i in range(n):
            term = term * mat.entry(i, perm[i])
        total = total + term
    return total
