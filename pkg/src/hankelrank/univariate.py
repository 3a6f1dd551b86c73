"""Dense univariate polynomial arithmetic over Q.

Coefficient lists are constant-term first.  These are the workhorse
routines behind rational parametrizations, Sturm sequences and the
membership certificates; the MultiPoly-facing wrappers at the bottom
expose gcd / exact division / squarefree part on one-variable
polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import ContractError, DimensionError, ExactnessError
from .poly import MultiPoly

Dense = list  # list[Fraction], constant first


def normalize(coeffs) -> Dense:
    out = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(p: Dense) -> int:
    return len(p) - 1


def is_zero(p: Dense) -> bool:
    return not p


def add(p: Dense, q: Dense) -> Dense:
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return normalize(out)


def sub(p: Dense, q: Dense) -> Dense:
    return add(p, [-c for c in q])


def scale(p: Dense, c) -> Dense:
    c = Fraction(c)
    if c == 0:
        return []
    return [v * c for v in p]


def mul(p: Dense, q: Dense) -> Dense:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b != 0:
                out[i + j] += a * b
    return normalize(out)


def divmod_poly(p: Dense, q: Dense):
    """Quotient and remainder over Q; q must be nonzero."""
    if not q:
        raise ContractError("division by the zero polynomial")
    r = list(p)
    dq = degree(q)
    lead = q[-1]
    quo = [Fraction(0)] * max(0, len(p) - dq)
    while len(r) - 1 >= dq and r:
        shift = len(r) - 1 - dq
        f = r[-1] / lead
        quo[shift] = f
        for i, c in enumerate(q):
            r[shift + i] -= f * c
        while r and r[-1] == 0:
            r.pop()
    return normalize(quo), normalize(r)


def divexact(p: Dense, q: Dense) -> Dense:
    quo, rem = divmod_poly(p, q)
    if rem:
        raise ExactnessError("nonzero remainder in exact polynomial division")
    return quo


def rem(p: Dense, q: Dense) -> Dense:
    return divmod_poly(p, q)[1]


def monic(p: Dense) -> Dense:
    if not p:
        return []
    lead = p[-1]
    if lead == 1:
        return list(p)
    return [c / lead for c in p]


def primitive_signed(p: Dense):
    """Scale by a positive rational to integer-primitive form (sign kept)."""
    if not p:
        return []
    lcm = 1
    for c in p:
        d = c.denominator
        lcm = lcm * d // int_gcd(lcm, d)
    ints = [int(c * lcm) for c in p]
    g = 0
    for v in ints:
        g = int_gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return [Fraction(v) for v in ints]


def primitive_int(p: Dense):
    """Integer-primitive scaled copy (positive leading coefficient)."""
    out = primitive_signed(p)
    if out and out[-1] < 0:
        out = [-v for v in out]
    return out


def gcd_monic(p: Dense, q: Dense) -> Dense:
    """Monic gcd via the Euclidean algorithm with primitive intermediates."""
    a, b = primitive_int(p), primitive_int(q)
    while b:
        a, b = b, primitive_int(rem(a, b))
    return monic(a)


def derivative(p: Dense) -> Dense:
    return normalize([p[i] * i for i in range(1, len(p))])


def squarefree_part(p: Dense) -> Dense:
    if not p:
        return []
    if degree(p) == 0:
        return [Fraction(1)]
    g = gcd_monic(p, derivative(p))
    if degree(g) == 0:
        return monic(p)
    return monic(divexact(monic(p), g))


def eval_at(p: Dense, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def power_mod(p: Dense, k: int, modulus: Dense) -> Dense:
    result = [Fraction(1)]
    base = rem(p, modulus)
    while k:
        if k & 1:
            result = rem(mul(result, base), modulus)
        k >>= 1
        if k:
            base = rem(mul(base, base), modulus)
    return result


# -- MultiPoly wrappers (one-variable polynomials) ------------------------


def _to_dense(p: MultiPoly) -> Dense:
    if p.nvars != 1:
        raise DimensionError("expected a univariate polynomial")
    out = [Fraction(0)] * (p.total_degree() + 1 if p.terms else 0)
    for (e,), c in p.terms.items():
        out[e] = c
    return normalize(out)


def _from_dense(p: Dense) -> MultiPoly:
    return MultiPoly(1, {(i,): c for i, c in enumerate(p) if c != 0})


def univariate_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return _from_dense(gcd_monic(_to_dense(p), _to_dense(q)))


def univariate_divexact(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return _from_dense(divexact(_to_dense(p), _to_dense(q)))


def univariate_squarefree(p: MultiPoly) -> MultiPoly:
    return _from_dense(squarefree_part(_to_dense(p)))
