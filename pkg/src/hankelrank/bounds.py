"""Multihomogeneous degree bounds for the critical-point systems.

Two independent routes to the same number: a closed-form binomial sum,
and a coefficient-extraction oracle that expands the product of
multidegree forms and truncates by pure powers.  The curve bound for
the homotopy variant is computed exactly the same way, term by term,
rather than as an asymptotic estimate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb as _comb


def comb(a: int, b: int) -> int:
    """Binomial coefficient, zero outside 0 <= b <= a."""
    if b < 0 or b > a:
        return 0
    return _comb(a, b)


def _check_args(m: int, n: int, p: int):
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if not 0 <= p <= m - 1:
        raise ValueError(f"rank parameter {p} out of range for size {m}")


def delta_bound(m: int, n: int, p: int) -> int:
    """Closed-form bound on the isolated solutions of one multiplier system."""
    _check_args(m, n, p)
    lo = max(0, n - 2 * m + p + 1)
    hi = min(p, n - 2 * m + 2 * p + 1)
    total = 0
    for ell in range(lo, hi + 1):
        total += (
            comb(2 * m - p - 1, n - ell)
            * comb(n - 1, 2 * m - 2 * p - 2 + ell)
            * comb(p, ell)
        )
    return total


def _binomial_expand(a_exp: int, b_exp: int, c_exp: int):
    """Terms of (sX+sY)^a (sY+sZ)^b (sX+sZ)^c as {(ex,ey,ez): coeff}."""
    terms: dict = {}
    for i in range(a_exp + 1):  # sX^i sY^(a-i)
        ca = comb(a_exp, i)
        for j in range(b_exp + 1):  # sY^j sZ^(b-j)
            cb = comb(b_exp, j)
            for k in range(c_exp + 1):  # sX^k sZ^(c-k)
                cc = comb(c_exp, k)
                key = (i + k, (a_exp - i) + j, (b_exp - j) + (c_exp - k))
                terms[key] = terms.get(key, 0) + ca * cb * cc
    return terms


def _truncated_coefficient_sum(a_exp, b_exp, c_exp, x_cap, y_cap, z_cap) -> int:
    """Sum of coefficients after deleting monomials beyond the pure-power caps."""
    total = 0
    for (ex, ey, ez), c in _binomial_expand(a_exp, b_exp, c_exp).items():
        if ex <= x_cap and ey <= y_cap and ez <= z_cap:
            total += c
    return total


def delta_oracle(m: int, n: int, p: int) -> int:
    """Coefficient-extraction route, independent of delta_bound's code path."""
    _check_args(m, n, p)
    return _truncated_coefficient_sum(
        2 * m - p - 1, n - 1, p, n, p, 2 * m - p - 2
    )


def homotopy_terms(m: int, n: int, p: int):
    """The four exact term contributions of the homotopy-curve degree bound."""
    _check_args(m, n, p)
    x_cap, y_cap, z_cap = n, p, 2 * m - p - 2
    t1 = _truncated_coefficient_sum(2 * m - p - 1, n - 1, p, x_cap, y_cap, z_cap)
    t2 = (
        (2 * m - p - 1)
        * _truncated_coefficient_sum(2 * m - p - 2, n - 1, p, x_cap, y_cap, z_cap)
        if 2 * m - p - 1 > 0
        else 0
    )
    t3 = (
        (n - 1)
        * _truncated_coefficient_sum(2 * m - p - 1, n - 2, p, x_cap, y_cap, z_cap)
        if n - 1 > 0
        else 0
    )
    t4 = (
        p * _truncated_coefficient_sum(2 * m - p - 1, n - 1, p - 1, x_cap, y_cap, z_cap)
        if p > 0
        else 0
    )
    return t1, t2, t3, t4


def homotopy_curve_bound(m: int, n: int, p: int) -> int:
    """Exact degree bound for the deformation curve of one multiplier system."""
    return sum(homotopy_terms(m, n, p))


@dataclass
class BoundsReport:
    """Output-count budget for a full recursive solve."""

    m: int
    n: int
    r: int
    per_level: dict  # (k, p) -> delta(m, k, p) for 2m-2r <= k <= n
    base_degree: int
    total: int

    def level_range(self):
        return range(2 * self.m - 2 * self.r, self.n + 1)


def total_output_bound(m: int, n: int, r: int) -> BoundsReport:
    """Base incidence degree plus the per-level multiplier-system budgets."""
    if not 0 <= r <= m - 1:
        raise ValueError(f"rank bound {r} out of range for size {m}")
    if n < 1:
        raise ValueError("n must be positive")
    base = comb(2 * m - r - 1, r)
    per_level = {}
    total = base
    for k in range(2 * m - 2 * r, n + 1):
        for p in range(r + 1):
            d = delta_bound(m, k, p)
            per_level[(k, p)] = d
            total += d
    return BoundsReport(m, n, r, per_level, base, total)
