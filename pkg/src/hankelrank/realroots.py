"""Real root isolation and interval evaluation of parametrizations.

Sturm sequences over exact rationals with bisection from a Cauchy
bound.  Rational roots are reported exactly (lo == hi); all other
intervals have non-root endpoints and contain exactly one root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import univariate as uv
from .errors import ContractError

Interval = tuple  # (Fraction lo, Fraction hi)


@dataclass(frozen=True)
class IsolatingInterval:
    lo: Fraction
    hi: Fraction
    exact: bool

    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


@dataclass
class RealSampleBox:
    """Componentwise rational enclosure of one real solution point."""

    intervals: list  # [(lo, hi)] per coordinate
    source_param: object
    source_root: IsolatingInterval


def sturm_sequence(q) -> list:
    """Sturm chain scaled to primitive integers by positive constants only
    (a sign flip would break the variation count)."""
    chain = [uv.primitive_signed(q), uv.primitive_signed(uv.derivative(q))]
    while chain[-1]:
        r = uv.rem(chain[-2], chain[-1])
        chain.append(uv.primitive_signed([-c for c in r]))
    chain.pop()
    return chain


def _variations(values) -> int:
    count = 0
    prev = 0
    for v in values:
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            count += 1
        prev = s
    return count


def count_roots_halfopen(chain, a, b) -> int:
    """Number of distinct real roots in (a, b] for a squarefree target."""
    va = _variations([uv.eval_at(p, a) for p in chain])
    vb = _variations([uv.eval_at(p, b) for p in chain])
    return va - vb


def cauchy_bound(q) -> Fraction:
    lead = abs(q[-1])
    bound = 1 + max((abs(c) / lead for c in q[:-1]), default=Fraction(0))
    # round up to a power of two so every bisection endpoint stays dyadic
    b = Fraction(1)
    while b < bound:
        b *= 2
    return b


def isolate_real_roots(q) -> list:
    """Pairwise-disjoint isolating intervals for all real roots of squarefree q."""
    q = uv.normalize(q)
    if uv.is_zero(q):
        raise ContractError("cannot isolate roots of the zero polynomial")
    if uv.degree(q) >= 1:
        g = uv.gcd_monic(q, uv.derivative(q))
        if uv.degree(g) > 0:
            raise ContractError("input polynomial is not squarefree")
    if uv.degree(q) == 0:
        return []
    chain = sturm_sequence(q)
    bound = cauchy_bound(q)
    roots: list[IsolatingInterval] = []

    def count(a, b):
        return count_roots_halfopen(chain, a, b)

    def shrink_right(a, b):
        # b is a root; largest window (b - delta, b] holding only b
        delta = (b - a) / 2
        while count(b - delta, b) != 1:
            delta /= 2
        return b - delta

    def shrink_left(a, b):
        # a is a root; smallest step so (a, a + delta] is root-free
        delta = (b - a) / 2
        while count(a, a + delta) != 0:
            delta /= 2
        return a + delta

    def emit_single(a, b):
        # one root in (a, b); report it exactly when it is a (moderate
        # denominator) rational, found via the simplest fraction in a
        # tightly refined interval
        iv = refine_root(q, IsolatingInterval(a, b, False), Fraction(1, 2**48))
        if iv.exact:
            roots.append(iv)
            return
        cand = _simplest_between(iv.lo, iv.hi)
        if uv.eval_at(q, cand) == 0:
            roots.append(IsolatingInterval(cand, cand, True))
        else:
            roots.append(IsolatingInterval(a, b, False))

    # Cauchy: every root satisfies |t| < bound, so the endpoints are safe.
    # Work stack of (a, b, k): k roots live in (a, b] and a is never a root.
    stack = [(-bound, bound, count(-bound, bound))]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if uv.eval_at(q, b) == 0:
            roots.append(IsolatingInterval(b, b, True))
            if k > 1:
                stack.append((a, shrink_right(a, b), k - 1))
            continue
        if k == 1:
            emit_single(a, b)
            continue
        c = (a + b) / 2
        if uv.eval_at(q, c) == 0:
            roots.append(IsolatingInterval(c, c, True))
            b_left = shrink_right(a, c)
            k_left = count(a, b_left)
            stack.append((a, b_left, k_left))
            k_right = k - k_left - 1
            if k_right:
                stack.append((shrink_left(c, b), b, k_right))
            continue
        k_left = count(a, c)
        stack.append((a, c, k_left))
        stack.append((c, b, k - k_left))
    roots.sort(key=lambda iv: (iv.lo, iv.hi))
    return roots


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator in [lo, hi] (lo <= hi)."""
    fl = lo.numerator // lo.denominator
    lo2, hi2 = lo - fl, hi - fl
    if lo2 == 0:
        return Fraction(fl)
    if hi2 >= 1:
        return Fraction(fl + 1)
    return fl + 1 / _simplest_between(1 / hi2, 1 / lo2)


def refine_root(q, interval: IsolatingInterval, eps) -> IsolatingInterval:
    """Shrink an isolating interval below eps by sign-preserving bisection."""
    if interval.exact:
        return interval
    eps = Fraction(eps)
    lo, hi = interval.lo, interval.hi
    flo = uv.eval_at(q, lo)
    while hi - lo > eps:
        mid = (lo + hi) / 2
        fm = uv.eval_at(q, mid)
        if fm == 0:
            return IsolatingInterval(mid, mid, True)
        if (flo > 0) != (fm > 0):
            hi = mid
        else:
            lo, flo = mid, fm
    return IsolatingInterval(lo, hi, False)


# -- interval arithmetic ----------------------------------------------------


def _iv_mul(a: Interval, b: Interval) -> Interval:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(products), max(products))


def _iv_div(a: Interval, b: Interval) -> Interval:
    quotients = (a[0] / b[0], a[0] / b[1], a[1] / b[0], a[1] / b[1])
    return (min(quotients), max(quotients))


def interval_horner(p, iv: Interval) -> Interval:
    acc: Interval = (Fraction(0), Fraction(0))
    for c in reversed(p):
        lo, hi = _iv_mul(acc, iv)
        acc = (lo + c, hi + c)
    return acc


def evaluate_parametrization(param, interval: IsolatingInterval, eps) -> RealSampleBox:
    """Box enclosing (q1/q0, ..., qk/q0) over one isolated root of param.q.

    The root interval is refined adaptively until the denominator
    interval excludes zero and every coordinate width is at most eps.
    gcd(q, q0) = 1 guarantees the refinement terminates.
    """
    eps = Fraction(eps)
    q, q0 = param.q, param.q0
    iv = interval
    for _ in range(100000):
        if iv.exact:
            t = iv.lo
            den_v = uv.eval_at(q0, t)
            if den_v == 0:
                raise ContractError("denominator vanishes at a root of q")
            pts = [uv.eval_at(c, t) / den_v for c in param.coords]
            return RealSampleBox([(v, v) for v in pts], param, iv)
        t_iv: Interval = (iv.lo, iv.hi)
        den = interval_horner(q0, t_iv)
        if not (den[0] <= 0 <= den[1]):
            boxes = []
            for coords in param.coords:
                val = _iv_div(interval_horner(coords, t_iv), den)
                if val[1] - val[0] > eps:
                    boxes = None
                    break
                boxes.append(val)
            if boxes is not None:
                return RealSampleBox(boxes, param, iv)
        iv = refine_root(q, iv, iv.width() / 2)
    raise ContractError("interval refinement did not converge")
