"""Univariate gcd, exact division, squarefree parts."""

from fractions import Fraction

import pytest

from hankelrank import univariate as uv
from hankelrank.errors import ExactnessError
from hankelrank.poly import MultiPoly
from hankelrank.univariate import (
    univariate_divexact,
    univariate_gcd,
    univariate_squarefree,
)


def t_poly(*coeffs):
    return MultiPoly(1, {(i,): Fraction(c) for i, c in enumerate(coeffs) if c})


def test_gcd_shared_root():
    # gcd(t^2 - 1, t - 1) = t - 1
    g = univariate_gcd(t_poly(-1, 0, 1), t_poly(-1, 1))
    assert g == t_poly(-1, 1)


def test_gcd_coprime():
    g = univariate_gcd(t_poly(1, 0, 1), t_poly(0, 1))
    assert g == t_poly(1)


def test_squarefree_part():
    # (t-1)^2 (t+2) -> (t-1)(t+2)
    sq = uv.mul(uv.mul([-1, 1], [-1, 1]), [2, 1])
    part = univariate_squarefree(MultiPoly(1, {(i,): c for i, c in enumerate(sq)}))
    assert part == t_poly(-2, 1, 1)  # monic (t-1)(t+2) = t^2 + t - 2


def test_divexact_errors_on_remainder():
    with pytest.raises(ExactnessError):
        univariate_divexact(t_poly(1, 0, 1), t_poly(-1, 1))


def test_divexact_roundtrip():
    a = [Fraction(2), Fraction(-3), Fraction(1)]
    b = [Fraction(5), Fraction(7)]
    prod = uv.mul(a, b)
    assert uv.divexact(prod, b) == a


def test_divmod_matches_reconstruction():
    p = [Fraction(c) for c in (3, 1, 4, 1, 5)]
    q = [Fraction(c) for c in (2, 7, 1)]
    quo, rem = uv.divmod_poly(p, q)
    assert uv.add(uv.mul(quo, q), rem) == p
    assert uv.degree(rem) < uv.degree(q)


def test_monic_gcd_is_monic():
    g = uv.gcd_monic([Fraction(4), Fraction(8)], [Fraction(2), Fraction(4)])
    assert g[-1] == 1


def test_power_mod():
    # t^4 mod (t^2 - 2) = 4
    assert uv.power_mod([Fraction(0), Fraction(1)], 4, [Fraction(-2), Fraction(0), Fraction(1)]) == [
        Fraction(4)
    ]
