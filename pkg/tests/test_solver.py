"""Zero-dimensional solving and rational parametrizations."""

import random
from fractions import Fraction

import pytest

from hankelrank import univariate as uv
from hankelrank.errors import ContractError
from hankelrank.groebner import buchberger
from hankelrank.poly import GREVLEX, MultiPoly
from hankelrank.solver import (
    check_parametrization,
    eval_poly_at_param_modq,
    parametrize_all,
    zero_dim_solve,
    zero_dim_solve_max_rank,
)
from hankelrank.systems import draw_parameters, incidence_system, lagrange_system
from hankelrank.hankel import build_pencil


def variables(nv):
    return [MultiPoly.variable(nv, i) for i in range(nv)]


def encoded_points(param):
    """Exact rational points encoded by a parametrization with rational roots."""
    roots = []
    q = param.q
    # only for test fixtures whose q factors over the integers
    for cand in range(-20, 21):
        if uv.eval_at(q, cand) == 0:
            roots.append(Fraction(cand))
    pts = set()
    for t in roots:
        den = uv.eval_at(param.q0, t)
        pts.add(tuple(uv.eval_at(c, t) / den for c in param.coords))
    return pts


def test_single_quadratic():
    x = variables(1)[0]
    out = zero_dim_solve([x * x - 2], [0], seed=1)
    assert out.tag == "finite"
    p = out.params[0]
    assert p.degree() == 2
    assert uv.degree(p.q0) == 0
    # the encoded set satisfies x^2 = 2 exactly
    residue = eval_poly_at_param_modq(x * x - 2, p.coords, p.q0, p.q)
    assert uv.normalize(residue) == []


def test_two_coordinates_single_point():
    x, y = variables(2)
    out = zero_dim_solve([x - 1, y - 2], [0, 1], seed=5)
    assert out.tag == "finite"
    assert encoded_points(out.params[0]) == {(1, 2)}


def test_diagonal_variety():
    x, y = variables(2)
    out = zero_dim_solve([x * x - 1, y - x], [0, 1], seed=9)
    assert out.tag == "finite"
    assert encoded_points(out.params[0]) == {(1, 1), (-1, -1)}
    # q has degree two and both coordinates agree on the variety
    p = out.params[0]
    assert p.degree() == 2
    assert p.coords[0] == p.coords[1]


def test_not_finite_and_empty():
    x, y = variables(2)
    assert zero_dim_solve([x * y - 1], [0, 1], seed=2).tag == "notFinite"
    assert zero_dim_solve([x, x - 1], [0, 1], seed=2).tag == "empty"
    one = MultiPoly.const(1, 1)
    assert zero_dim_solve([one], [0], seed=2).tag == "empty"


def test_degree_counts_distinct_points():
    # products of linear forms with known roots
    rng = random.Random(13)
    x = variables(1)[0]
    for _ in range(6):
        roots = rng.sample(range(-9, 9), rng.randint(1, 5))
        poly = MultiPoly.const(1, 1)
        for root in roots:
            poly = poly * (x - root)
        out = zero_dim_solve([poly], [0], seed=rng.randint(0, 99))
        assert out.tag == "finite"
        param = out.params[0]
        assert param.degree() == len(roots)
        assert encoded_points(param) == {(Fraction(v),) for v in roots}


def test_soundness_check_runs():
    x, y = variables(2)
    system = [x * x + y * y - 5, x * y - 2]
    out = zero_dim_solve(system, [0, 1], seed=3, check_soundness=True)
    assert out.tag == "finite"
    G = buchberger(system, GREVLEX)
    full = parametrize_all(G, 3)
    assert check_parametrization(system, full)


def test_parametrization_requires_zero_dim():
    x, y = variables(2)
    G = buchberger([x * y - 1], GREVLEX)
    with pytest.raises(ContractError):
        parametrize_all(G, 1)


def test_max_rank_toy():
    # kernel system of [[x,1],[1,x]] at full sub-rank: x-roots are +-1
    pencil = build_pencil(2, 1, [[0, 1, 0], [1, 0, 1]])
    draw = draw_parameters(3, 0, 2, 1, 1)
    inc = incidence_system(pencil, draw.u_list[1], 1)
    lag = lagrange_system(inc, draw.v_list[1])
    out = zero_dim_solve_max_rank(lag, [0], seed=4)
    assert out.tag == "finite"
    pts = encoded_points(out.params[0])
    assert {pt[0] for pt in pts} == {1, -1}


def test_max_rank_empty_locus():
    # constant full-rank pencil: the rank<=1 stratum is empty
    pencil = build_pencil(2, 1, [[1, 0, 2], [0, 0, 0]])
    draw = draw_parameters(5, 0, 2, 1, 1)
    inc = incidence_system(pencil, draw.u_list[1], 1)
    lag = lagrange_system(inc, draw.v_list[1])
    out = zero_dim_solve_max_rank(lag, [0], seed=6)
    assert out.tag == "empty"


def test_max_rank_p0_structure():
    # p = 0: all generating forms must vanish; for the toy pencil the
    # forms x, 1, x have no common zero, so the stratum is empty
    pencil = build_pencil(2, 1, [[0, 1, 0], [1, 0, 1]])
    draw = draw_parameters(7, 0, 2, 1, 1)
    inc = incidence_system(pencil, draw.u_list[0], 0)
    lag = lagrange_system(inc, draw.v_list[0])
    out = zero_dim_solve_max_rank(lag, [0], seed=8)
    assert out.tag == "empty"


def test_projection_drops_coordinates():
    x, y = variables(2)
    out = zero_dim_solve([x - 3, y - 4], [0], seed=11)
    param = out.params[0]
    assert len(param.coords) == 1
    assert encoded_points(param) == {(3,)}
