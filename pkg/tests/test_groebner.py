"""Buchberger output: reducedness, S-polynomial criterion, staircases."""

import random
from fractions import Fraction

import pytest

from hankelrank.errors import ResourceError
from hankelrank.groebner import (
    GBCaps,
    buchberger,
    is_zero_dimensional,
    normal_form,
    quotient_basis,
)
from hankelrank.poly import GREVLEX, LEX, MonomialOrder, MultiPoly


def variables(nv):
    return [MultiPoly.variable(nv, i) for i in range(nv)]


def spoly(f, g, order):
    key = order.key
    lmf = max(f.terms, key=key)
    lmg = max(g.terms, key=key)
    lcm = tuple(max(a, b) for a, b in zip(lmf, lmg))
    mf = MultiPoly(f.nvars, {tuple(a - b for a, b in zip(lcm, lmf)): 1 / f.terms[lmf]})
    mg = MultiPoly(g.nvars, {tuple(a - b for a, b in zip(lcm, lmg)): 1 / g.terms[lmg]})
    return mf * f - mg * g


def assert_is_reduced_gb(G):
    key = G.order.key
    lms = G.leading_monomials()
    # every S-polynomial reduces to zero
    for i in range(len(G.gens)):
        for j in range(i + 1, len(G.gens)):
            assert normal_form(spoly(G.gens[i], G.gens[j], G.order), G).is_zero()
    # no leading monomial divides another; tails fully reduced; monic
    for i, g in enumerate(G.gens):
        assert g.terms[max(g.terms, key=key)] == 1
        for mono in g.terms:
            for j, lm in enumerate(lms):
                if j == i:
                    if mono != lm:
                        assert not all(a <= b for a, b in zip(lm, mono))
                else:
                    assert not all(a <= b for a, b in zip(lm, mono))


def test_univariate_collapse():
    x = MultiPoly.variable(1, 0)
    G = buchberger([x * x - 1, x - 1], LEX)
    assert G.gens == [x - 1]


def test_unit_ideal():
    x, y = variables(2)
    G = buchberger([x * y - 1, x], GREVLEX)
    assert G.is_trivial()
    assert is_zero_dimensional(G)
    assert quotient_basis(G) == []


def test_triangular_shape():
    x, y = variables(2)
    G = buchberger([x + y, y * y - 2], LEX)
    univ = [g for g in G.gens if g.degree_in(0) == 0]
    assert len(univ) == 1 and univ[0].degree_in(1) == 2


def test_reduced_gb_on_random_systems():
    rng = random.Random(77)
    for trial in range(8):
        nv = rng.choice([2, 3])
        xs = variables(nv)
        polys = []
        for _ in range(nv):
            p = MultiPoly.zero(nv)
            for _ in range(3):
                mono = tuple(rng.randint(0, 2) for _ in range(nv))
                p = p + MultiPoly(nv, {mono: Fraction(rng.randint(-5, 5))})
            if not p.is_zero():
                polys.append(p)
        if not polys:
            continue
        for order in (GREVLEX, LEX):
            G = buchberger(polys, order)
            if not G.is_trivial():
                assert_is_reduced_gb(G)
            for p in polys:
                assert normal_form(p, G).is_zero()


def test_order_independence_as_ideal():
    x, y = variables(2)
    system = [x * x + y * y - 4, x * y - 1]
    G1 = buchberger(system, GREVLEX)
    G2 = buchberger(system, LEX)
    for g in G1.gens:
        assert normal_form(g, G2).is_zero()
    for g in G2.gens:
        assert normal_form(g, G1).is_zero()


def test_zero_dimensionality_detection():
    x, y = variables(2)
    G = buchberger([x * x - 1, y - x], GREVLEX)
    assert is_zero_dimensional(G)
    G2 = buchberger([x * y - 1], GREVLEX)
    assert not is_zero_dimensional(G2)


def test_quotient_basis_staircase():
    # grevlex reduces the pair to {x - y, y^2 - 1}: staircase is {1, y}
    x, y = variables(2)
    G = buchberger([x * x - 1, y - x], GREVLEX)
    assert quotient_basis(G) == [(0, 0), (0, 1)]


def test_normal_form_properties():
    x, y = variables(2)
    G = buchberger([x - 1], GREVLEX)
    assert normal_form(x * x, G) == MultiPoly.const(2, 1)
    for g in G.gens:
        assert normal_form(g, G).is_zero()
    rng = random.Random(3)
    for _ in range(10):
        p = MultiPoly(2, {(rng.randint(0, 3), rng.randint(0, 3)): Fraction(rng.randint(-5, 5))})
        q = MultiPoly(2, {(rng.randint(0, 3), rng.randint(0, 3)): Fraction(rng.randint(-5, 5))})
        assert normal_form(p + q, G) == normal_form(p, G) + normal_form(q, G)


def test_block_order_eliminates():
    # eliminating w from {w*x - 1, w + y} should expose x*y + 1
    w, x, y = variables(3)
    order = MonomialOrder("block", split=1)
    G = buchberger([w * x - 1, w + y], order)
    eliminated = [g for g in G.gens if g.degree_in(0) == 0]
    assert any(g == x * y + 1 or g == -1 * (x * y + 1) for g in eliminated)


def test_resource_caps():
    x, y, z = variables(3)
    system = [x**3 - 2 * x * y, x * x * y - 2 * y * y + x, z * z - x * y]
    with pytest.raises(ResourceError):
        buchberger(system, GREVLEX, GBCaps(max_pairs=1))


def test_deterministic_output():
    x, y, z = variables(3)
    system = [x * y + z, y * z + x, x * x + y * y - 1]
    a = buchberger(system, GREVLEX)
    b = buchberger(system, GREVLEX)
    assert a.gens == b.gens
