"""Polynomial systems driving the critical-point recursion.

Variable layout is fixed globally as (x_1..x_n, y_1..y_{p+1},
z_1..z_{2m-p}) so that column indexing in the multiplier block is
unambiguous everywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import DimensionError, GenericityError, RandomnessError
from .hankel import LinearHankelPencil, rect_system
from .poly import MultiPoly
from .polymatrix import jacobian

RANDOM_BOX = 97  # integer draws live in [-RANDOM_BOX, RANDOM_BOX]


@dataclass
class IncidenceSystem:
    """Kernel-vector lift of the rank condition: rows of the rectangular
    matrix times y, plus the affine normalization u'y = 1."""

    polys: list
    m: int
    n: int
    p: int
    u: tuple
    pencil: LinearHankelPencil  # the (possibly rotated) pencil the rows came from

    @property
    def nvars(self) -> int:
        return self.n + self.p + 1


@dataclass
class LagrangeSystem:
    """Square critical-point system with multipliers z and v'z = 1."""

    polys: list
    v: tuple
    parent: IncidenceSystem

    @property
    def nvars(self) -> int:
        return self.parent.n + 2 * self.parent.m + 1


def incidence_system(pencil: LinearHankelPencil, u, p: int) -> IncidenceSystem:
    m, n = pencil.m, pencil.n
    if not 0 <= p <= m - 1:
        raise DimensionError(f"rank parameter {p} out of range for size {m}")
    u = tuple(Fraction(c) for c in u)
    if len(u) != p + 1:
        raise DimensionError(f"normalization vector must have length {p + 1}")
    if all(c == 0 for c in u):
        raise GenericityError("normalization vector u is zero")
    nv = n + p + 1
    rect = rect_system(pencil, p)
    ys = [MultiPoly.variable(nv, n + j) for j in range(p + 1)]
    polys = []
    for i in range(rect.rows):
        acc = MultiPoly.zero(nv)
        for j in range(p + 1):
            acc = acc + rect.entry(i, j).extend(nv) * ys[j]
        polys.append(acc)
    norm = MultiPoly.const(nv, -1)
    for j, c in enumerate(u):
        norm = norm + ys[j] * c
    polys.append(norm)
    return IncidenceSystem(polys, m, n, p, u, pencil)


def fiber_system(inc: IncidenceSystem, alpha) -> list:
    """The incidence system with the section x1 = alpha adjoined."""
    if inc.n < 1:
        raise DimensionError("fiber requires at least one x variable")
    nv = inc.nvars
    extra = MultiPoly.variable(nv, 0) - MultiPoly.const(nv, Fraction(alpha))
    return inc.polys + [extra]


def lagrange_system(inc: IncidenceSystem, v) -> LagrangeSystem:
    """Adjoin z' jac_1 f = 0 and v'z = 1 to the incidence system.

    jac_1 drops the x1 column, so the solutions are critical points of
    the projection onto x1.  The result is square: n + 2m + 1
    polynomials in as many variables.
    """
    m, n, p = inc.m, inc.n, inc.p
    v = tuple(Fraction(c) for c in v)
    if len(v) != 2 * m - p:
        raise DimensionError(f"multiplier normalization must have length {2 * m - p}")
    if all(c == 0 for c in v):
        raise GenericityError("multiplier normalization vector v is zero")
    nv = n + 2 * m + 1
    k = 2 * m - p  # number of multipliers / incidence polynomials
    lifted = [f.extend(nv) for f in inc.polys]
    zs = [MultiPoly.variable(nv, n + p + 1 + j) for j in range(k)]
    # columns 1..n-1 are x2..xn, then the y block
    col_indices = list(range(1, n)) + list(range(n, n + p + 1))
    jac1 = jacobian(lifted, col_indices)
    polys = list(lifted)
    for c in range(jac1.cols):
        acc = MultiPoly.zero(nv)
        for i in range(k):
            entry = jac1.entry(i, c)
            if not entry.is_zero():
                acc = acc + zs[i] * entry
        polys.append(acc)
    norm = MultiPoly.const(nv, -1)
    for j, c in enumerate(v):
        norm = norm + zs[j] * c
    polys.append(norm)
    return LagrangeSystem(polys, v, inc)


@dataclass
class ParameterDraw:
    """One level's random choices, fully determined by (seed, depth, m, n, r)."""

    seed: int
    depth: int
    matrix: list  # n x n invertible over Q
    alpha: Fraction
    u_list: list = field(default_factory=list)  # u_p for p = 0..r
    v_list: list = field(default_factory=list)  # v_p for p = 0..r


def _mix_seed(seed: int, depth: int, m: int, n: int, r: int) -> int:
    h = (seed & (2**64 - 1)) * 0x9E3779B97F4A7C15
    for part in (depth, m, n, r):
        h = (h ^ (part + 0x100)) * 0xBF58476D1CE4E5B9
        h &= 2**64 - 1
    return h


def _nonzero_vector(rng: random.Random, length: int) -> tuple:
    for _ in range(64):
        vec = tuple(Fraction(rng.randint(-RANDOM_BOX, RANDOM_BOX)) for _ in range(length))
        if any(c != 0 for c in vec):
            return vec
    raise RandomnessError("could not draw a nonzero vector")


def draw_parameters(seed: int, depth: int, m: int, n: int, r: int) -> ParameterDraw:
    """Deterministic pseudo-random parameter draw for one recursion level."""
    if n < 1:
        raise DimensionError("parameter draw requires n >= 1")
    rng = random.Random(_mix_seed(seed, depth, m, n, r))
    matrix = None
    for _ in range(64):
        cand = [
            [Fraction(rng.randint(-RANDOM_BOX, RANDOM_BOX)) for _ in range(n)]
            for _ in range(n)
        ]
        if linalg.is_invertible(cand):
            matrix = cand
            break
    if matrix is None:
        raise RandomnessError("could not draw an invertible change of variables")
    alpha = Fraction(rng.randint(-RANDOM_BOX, RANDOM_BOX))
    u_list = [_nonzero_vector(rng, p + 1) for p in range(r + 1)]
    v_list = [_nonzero_vector(rng, 2 * m - p) for p in range(r + 1)]
    return ParameterDraw(seed, depth, matrix, alpha, u_list, v_list)
