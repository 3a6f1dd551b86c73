"""Incidence, fiber, multiplier systems and the parameter draws."""

import random
from fractions import Fraction

import pytest

from hankelrank import linalg
from hankelrank.errors import DimensionError, GenericityError
from hankelrank.hankel import build_pencil, change_vars_pencil
from hankelrank.poly import MultiPoly
from hankelrank.systems import (
    draw_parameters,
    fiber_system,
    incidence_system,
    lagrange_system,
)
from hankelrank.verify import random_pencil


def toy_pencil():
    return build_pencil(2, 1, [[0, 1, 0], [1, 0, 1]])


def test_toy_incidence_polys():
    inc = incidence_system(toy_pencil(), [Fraction(0), Fraction(1)], 1)
    nv = 3  # x, y1, y2
    x = MultiPoly.variable(nv, 0)
    y1 = MultiPoly.variable(nv, 1)
    y2 = MultiPoly.variable(nv, 2)
    assert inc.polys[0] == x * y1 + y2
    assert inc.polys[1] == y1 + x * y2
    assert inc.polys[2] == y2 - 1


def test_incidence_counts():
    for m, n, p in [(2, 1, 0), (3, 2, 1), (3, 2, 2), (4, 3, 2)]:
        pencil = random_pencil(m, n, 7)
        u = tuple(Fraction(1) for _ in range(p + 1))
        inc = incidence_system(pencil, u, p)
        assert len(inc.polys) == 2 * m - p
        assert inc.polys[0].nvars == n + p + 1


def test_incidence_p0_structure():
    pencil = random_pencil(3, 2, 3)
    inc = incidence_system(pencil, [Fraction(2)], 0)
    # 2m-1 linear forms in x (times the single y), then u1*y1 - 1
    assert len(inc.polys) == 6
    for poly in inc.polys[:-1]:
        assert poly.degree_in_block(range(2)) <= 1
        assert poly.degree_in(2) == 1


def test_zero_u_rejected():
    with pytest.raises(GenericityError):
        incidence_system(toy_pencil(), [Fraction(0), Fraction(0)], 1)


def test_fiber_adds_section():
    inc = incidence_system(toy_pencil(), [Fraction(0), Fraction(1)], 1)
    fib = fiber_system(inc, Fraction(0))
    assert len(fib) == len(inc.polys) + 1
    assert fib[-1] == MultiPoly.variable(3, 0)
    fib2 = fiber_system(inc, Fraction(5, 2))
    assert fib2[-1].eval([Fraction(5, 2), 0, 0]) == 0


def test_lagrange_square_and_toy_expansion():
    u = (Fraction(0), Fraction(1))
    v = (Fraction(1), Fraction(2), Fraction(3))
    inc = incidence_system(toy_pencil(), u, 1)
    lag = lagrange_system(inc, v)
    assert len(lag.polys) == lag.nvars == 1 + 2 * 2 + 1
    nv = 6
    x, y1, y2, z1, z2, z3 = (MultiPoly.variable(nv, i) for i in range(6))
    # n = 1: no x-derivative columns survive, exactly p+1 = 2 multiplier rows
    assert lag.polys[3] == x * z1 + z2
    assert lag.polys[4] == z1 + x * z2 + z3
    assert lag.polys[5] == z1 + 2 * z2 + 3 * z3 - 1


def test_multidegree_profile():
    rng = random.Random(31)
    for m, n in [(2, 2), (3, 2), (3, 3), (4, 2)]:
        for p in range(m):
            pencil = random_pencil(m, n, rng.randint(0, 999))
            u = tuple(Fraction(rng.randint(1, 5)) for _ in range(p + 1))
            v = tuple(Fraction(rng.randint(1, 5)) for _ in range(2 * m - p))
            lag = lagrange_system(incidence_system(pencil, u, p), v)
            nv = lag.nvars
            xb = range(n)
            yb = range(n, n + p + 1)
            zb = range(n + p + 1, nv)
            polys = lag.polys
            k = 2 * m - p - 1
            for f in polys[:k]:  # bilinear (x, y)
                assert f.degree_in_block(xb) <= 1
                assert f.degree_in_block(yb) <= 1
                assert f.degree_in_block(zb) == 0
            norm_y = polys[k]
            assert norm_y.degree_in_block(xb) == 0
            assert norm_y.degree_in_block(yb) == 1
            for f in polys[k + 1 : k + 1 + n - 1]:  # bilinear (y, z)
                assert f.degree_in_block(xb) == 0
                assert f.degree_in_block(yb) <= 1
                assert f.degree_in_block(zb) <= 1
            for f in polys[k + n : k + n + p + 1]:  # bilinear (x, z) + constant z
                assert f.degree_in_block(xb) <= 1
                assert f.degree_in_block(yb) == 0
                assert f.degree_in_block(zb) <= 1
            norm_z = polys[-1]
            assert norm_z.degree_in_block(zb) == 1
            assert norm_z.degree_in_block(xb) == 0


def test_incidence_rotation_identity():
    # building from the rotated pencil equals substituting x -> Mx
    rng = random.Random(8)
    for trial in range(4):
        m, n = rng.choice([(2, 2), (3, 2), (3, 3)])
        pencil = random_pencil(m, n, trial + 50)
        mat = [
            [Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)
        ]
        if not linalg.is_invertible(mat):
            continue
        p = rng.randint(0, m - 1)
        u = tuple(Fraction(rng.randint(1, 4)) for _ in range(p + 1))
        rotated = incidence_system(change_vars_pencil(pencil, mat), u, p)
        plain = incidence_system(pencil, u, p)
        nv = n + p + 1
        xs = [MultiPoly.variable(nv, i) for i in range(n)]
        images = [
            sum(
                (xs[j] * mat[i][j] for j in range(n)),
                MultiPoly.zero(nv),
            )
            for i in range(n)
        ]
        for f_rot, f_plain in zip(rotated.polys, plain.polys):
            # substitute x_i -> (Mx)_i in the unrotated system
            acc = MultiPoly.zero(nv)
            for mono, c in f_plain.terms.items():
                term = MultiPoly.const(nv, c)
                for i, e in enumerate(mono):
                    if e == 0:
                        continue
                    base = images[i] if i < n else MultiPoly.variable(nv, i)
                    term = term * base**e
                acc = acc + term
            assert acc == f_rot


def test_draw_determinism_and_shapes():
    a = draw_parameters(7, 2, 3, 4, 2)
    b = draw_parameters(7, 2, 3, 4, 2)
    assert a.matrix == b.matrix and a.alpha == b.alpha
    assert a.u_list == b.u_list and a.v_list == b.v_list
    c = draw_parameters(8, 2, 3, 4, 2)
    assert c.matrix != a.matrix or c.alpha != a.alpha
    assert linalg.is_invertible(a.matrix)
    for p in range(3):
        assert len(a.u_list[p]) == p + 1
        assert any(x != 0 for x in a.u_list[p])
        assert len(a.v_list[p]) == 2 * 3 - p
        assert any(x != 0 for x in a.v_list[p])


def test_draw_requires_variables():
    with pytest.raises(DimensionError):
        draw_parameters(1, 0, 2, 0, 1)
