"""Hankel pencils and the structure-exploiting constructions around them.

A pencil is stored by generators only: each coefficient matrix of the
family H(x) = H0 + x1*H1 + ... + xn*Hn is a Hankel matrix determined
by its 2m-1 skew-diagonal entries.  All rank work routes through the
rectangular reformulation, which is what makes the whole pipeline
cheaper than treating H(x) as a generic symbolic matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import DimensionError, FormatError, GenericityError
from .poly import MultiPoly
from .polymatrix import PolyMatrix


@dataclass(frozen=True)
class HankelGen:
    """An m x m Hankel matrix stored by its 2m-1 generating entries."""

    m: int
    gens: tuple  # h_1 .. h_{2m-1} as Fractions

    def __post_init__(self):
        if len(self.gens) != 2 * self.m - 1:
            raise FormatError(
                f"size-{self.m} Hankel matrix needs {2 * self.m - 1} generators, "
                f"got {len(self.gens)}"
            )
        object.__setattr__(self, "gens", tuple(Fraction(g) for g in self.gens))

    def entry(self, i: int, j: int) -> Fraction:
        """Matrix entry (0-based); depends only on i + j."""
        return self.gens[i + j]

    def to_matrix(self) -> list:
        return [[self.gens[i + j] for j in range(self.m)] for i in range(self.m)]

    def rank(self) -> int:
        return linalg.rank(self.to_matrix())

    def __add__(self, other: "HankelGen") -> "HankelGen":
        if self.m != other.m:
            raise DimensionError("Hankel sizes differ")
        return HankelGen(self.m, tuple(a + b for a, b in zip(self.gens, other.gens)))

    def scale(self, c) -> "HankelGen":
        c = Fraction(c)
        return HankelGen(self.m, tuple(c * g for g in self.gens))


@dataclass(frozen=True)
class LinearHankelPencil:
    """H(x) = H0 + x1*H1 + ... + xn*Hn, all coefficient matrices Hankel."""

    m: int
    n: int
    mats: tuple  # n+1 HankelGen of size m

    def __post_init__(self):
        if len(self.mats) != self.n + 1:
            raise FormatError(f"pencil needs {self.n + 1} matrices, got {len(self.mats)}")
        for h in self.mats:
            if h.m != self.m:
                raise DimensionError("pencil matrices disagree on size")

    def linear_form(self, g_index: int) -> MultiPoly:
        """The g_index-th generator of H(x) as a degree <= 1 polynomial in x."""
        return MultiPoly.linear_form(
            self.n,
            [self.mats[i + 1].gens[g_index] for i in range(self.n)],
            constant=self.mats[0].gens[g_index],
        )

    def symbolic_matrix(self) -> PolyMatrix:
        """The full m x m matrix of linear forms (used by certificates only)."""
        forms = [self.linear_form(g) for g in range(2 * self.m - 1)]
        return PolyMatrix.from_rows(
            [[forms[i + j] for j in range(self.m)] for i in range(self.m)]
        )


def build_pencil(m: int, n: int, gens_list) -> LinearHankelPencil:
    """Validate raw generator rows into a pencil."""
    if len(gens_list) != n + 1:
        raise FormatError(f"expected {n + 1} generator rows, got {len(gens_list)}")
    mats = []
    for row in gens_list:
        if len(row) != 2 * m - 1:
            raise FormatError(
                f"generator row has length {len(row)}, expected {2 * m - 1}"
            )
        mats.append(HankelGen(m, tuple(Fraction(v) for v in row)))
    return LinearHankelPencil(m, n, tuple(mats))


def eval_pencil(pencil: LinearHankelPencil, x) -> HankelGen:
    """H(x) for a rational point x; linear in x by construction."""
    if len(x) != pencil.n:
        raise DimensionError(f"point has {len(x)} coordinates, pencil has {pencil.n}")
    gens = list(pencil.mats[0].gens)
    for i, xi in enumerate(x):
        xi = Fraction(xi)
        if xi == 0:
            continue
        for g, v in enumerate(pencil.mats[i + 1].gens):
            gens[g] += xi * v
    return HankelGen(pencil.m, tuple(gens))


def rect_system(pencil: LinearHankelPencil, p: int) -> PolyMatrix:
    """The (2m-p-1) x (p+1) rectangular matrix of linear forms.

    Its rank at a point x equals p exactly when rank H(x) = p, which is
    the size reduction every minor computation here relies on.
    """
    m = pencil.m
    if not 0 <= p <= m - 1:
        raise DimensionError(f"rank parameter {p} out of range for size {m}")
    forms = [pencil.linear_form(g) for g in range(2 * m - 1)]
    rows = 2 * m - p - 1
    cols = p + 1
    return PolyMatrix.from_rows(
        [[forms[i + j] for j in range(cols)] for i in range(rows)]
    )


def kernel_pattern(m: int, r: int) -> PolyMatrix:
    """Banded m x (m-r) matrix of shifted kernel coordinates y1..y_{r+1}."""
    if not 0 <= r <= m - 1:
        raise DimensionError(f"rank parameter {r} out of range for size {m}")
    nv = r + 1
    zero = MultiPoly.zero(nv)
    ys = [MultiPoly.variable(nv, i) for i in range(nv)]
    rows = []
    for i in range(m):
        row = []
        for j in range(m - r):
            k = i - j
            row.append(ys[k] if 0 <= k <= r else zero)
        rows.append(row)
    return PolyMatrix.from_rows(rows)


def rank_at(pencil: LinearHankelPencil, x) -> int:
    """Exact rank of H(x) by fraction-free elimination on exact values."""
    return eval_pencil(pencil, x).rank()


def substitute_x1(pencil: LinearHankelPencil, alpha) -> LinearHankelPencil:
    """Pin x1 = alpha; the result is a pencil in n-1 variables."""
    if pencil.n < 1:
        raise DimensionError("pencil has no variables to substitute")
    h0 = pencil.mats[0] + pencil.mats[1].scale(alpha)
    return LinearHankelPencil(pencil.m, pencil.n - 1, (h0,) + pencil.mats[2:])


def change_vars_pencil(pencil: LinearHankelPencil, matrix) -> LinearHankelPencil:
    """The pencil of H(Mx): coefficient matrices recombined, H0 untouched."""
    n = pencil.n
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise DimensionError(f"change-of-variables matrix must be {n}x{n}")
    if not linalg.is_invertible(matrix):
        raise GenericityError("change-of-variables matrix is singular")
    new_mats = [pencil.mats[0]]
    for j in range(n):
        acc = pencil.mats[1].scale(matrix[0][j])
        for i in range(1, n):
            acc = acc + pencil.mats[i + 1].scale(matrix[i][j])
        new_mats.append(acc)
    return LinearHankelPencil(pencil.m, n, tuple(new_mats))
