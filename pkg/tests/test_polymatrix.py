"""Minors, determinants, Jacobians against brute-force oracles."""

import random
from fractions import Fraction

import pytest

from hankelrank.errors import DimensionError, ResourceError
from hankelrank.poly import MultiPoly
from hankelrank.polymatrix import (
    PolyMatrix,
    determinant,
    determinant_oracle,
    jacobian,
    minors,
)


def rand_matrix(rng, size, nvars=2, symbolic=True):
    entries = []
    for _ in range(size * size):
        if symbolic and rng.random() < 0.5:
            mono = tuple(rng.randint(0, 1) for _ in range(nvars))
            entries.append(MultiPoly(nvars, {mono: Fraction(rng.randint(-4, 4))}))
        else:
            entries.append(MultiPoly.const(nvars, rng.randint(-4, 4)))
    return PolyMatrix(size, size, entries)


def test_det_2x2_symbolic():
    x = MultiPoly.variable(1, 0)
    one = MultiPoly.const(1, 1)
    mat = PolyMatrix(2, 2, [x, one, one, x])
    [d] = minors(mat, 2)
    assert d == x * x - 1


def test_identity_minors():
    one = MultiPoly.const(0, 1)
    zero = MultiPoly.zero(0)
    eye = PolyMatrix.from_rows(
        [[one if i == j else zero for j in range(3)] for i in range(3)]
    )
    out = minors(eye, 2)
    assert len(out) == 9
    values = [p.constant_value() for p in out]
    assert values.count(1) == 3
    assert values.count(0) == 6


def test_determinant_matches_permutation_oracle():
    rng = random.Random(5)
    for size in (1, 2, 3, 4):
        for _ in range(6):
            mat = rand_matrix(rng, size)
            assert determinant(mat) == determinant_oracle(mat)


def test_constant_matrix_uses_exact_elimination():
    rng = random.Random(9)
    for size in (2, 3, 4):
        mat = rand_matrix(rng, size, symbolic=False)
        assert determinant(mat) == determinant_oracle(mat)


def test_minor_enumeration_order_is_lex():
    # row subsets iterate lexicographically, then column subsets
    nv = 0
    entries = [MultiPoly.const(nv, i) for i in range(9)]
    mat = PolyMatrix(3, 3, entries)
    out = minors(mat, 1)
    assert [p.constant_value() for p in out] == list(range(9))


def test_minor_size_out_of_range():
    mat = PolyMatrix(2, 2, [MultiPoly.const(0, 1)] * 4)
    with pytest.raises(DimensionError):
        minors(mat, 3)
    with pytest.raises(DimensionError):
        minors(mat, 0)


def test_symbolic_determinant_cap():
    x = MultiPoly.variable(1, 0)
    size = 9
    mat = PolyMatrix.from_rows(
        [[x if i == j else MultiPoly.zero(1) for j in range(size)] for i in range(size)]
    )
    with pytest.raises(ResourceError):
        determinant(mat)


def test_jacobian_simple():
    x1 = MultiPoly.variable(2, 0)
    x2 = MultiPoly.variable(2, 1)
    jac = jacobian([x1 * x1 - x2], [0, 1])
    assert jac.rows == 1 and jac.cols == 2
    assert jac.entry(0, 0) == 2 * x1
    assert jac.entry(0, 1) == MultiPoly.const(2, -1)


def test_jacobian_of_linear_system_is_constant():
    x1 = MultiPoly.variable(2, 0)
    x2 = MultiPoly.variable(2, 1)
    jac = jacobian([x1 + 2 * x2, 3 * x1 - x2], [0, 1])
    assert all(e.is_constant() for e in jac.entries)


def test_column_restricted_jacobian():
    # drop d/dx1: system (x1*x2, x1+x2) -> [[x1], [1]]
    x1 = MultiPoly.variable(2, 0)
    x2 = MultiPoly.variable(2, 1)
    jac = jacobian([x1 * x2, x1 + x2], [1])
    assert jac.cols == 1
    assert jac.entry(0, 0) == x1
    assert jac.entry(1, 0) == MultiPoly.const(2, 1)
