"""Buchberger's algorithm over Q with reduced, monic output.

The public surface works on MultiPoly values with Fraction
coefficients; internally the engine runs on integer-primitive term
dictionaries with cross-multiplication pseudo-reduction and content
stripping, which keeps coefficient growth (and Python overhead) down.
Pair management follows the classic update procedure with both
elimination criteria; selection uses the normal strategy.  The reduced
basis is unique for a given ideal and order, so results are
reproducible no matter how the pair queue is traversed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as int_gcd

from .errors import ContractError, ResourceError
from .poly import GREVLEX, MonomialOrder, MultiPoly


@dataclass
class GBCaps:
    """Explicit resource limits; hitting one raises instead of spinning."""

    max_basis: int = 4000
    max_pairs: int = 500_000
    max_quotient: int = 20_000
    max_steps: int | None = None  # reduction-step budget (portfolio rounds)


class StepBudgetExceeded(ResourceError):
    """Deterministic reduction-step budget ran out (retry with a bigger one)."""


@dataclass
class GroebnerBasis:
    order: MonomialOrder
    gens: list  # reduced, monic MultiPoly
    nvars: int
    _lms: list = field(default_factory=list, repr=False)

    def leading_monomials(self) -> list:
        if not self._lms and self.gens:
            key = self.order.key
            self._lms = [max(g.terms, key=key) for g in self.gens]
        return self._lms

    def is_trivial(self) -> bool:
        """True when the ideal is the whole ring."""
        return len(self.gens) == 1 and self.gens[0].is_constant()


# -- integer term-dict helpers ------------------------------------------------


def _content_strip(poly: dict) -> dict:
    g = 0
    for c in poly.values():
        g = int_gcd(g, abs(c))
        if g == 1:
            return poly
    if g > 1:
        return {m: c // g for m, c in poly.items()}
    return poly


def _to_int_poly(p: MultiPoly) -> dict:
    if not p.terms:
        return {}
    lcm = 1
    for c in p.terms.values():
        d = c.denominator
        lcm = lcm * d // int_gcd(lcm, d)
    return _content_strip({m: int(c * lcm) for m, c in p.terms.items()})


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _mono_divides(a, b) -> bool:
    """a | b componentwise."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _mono_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _reduce_int(h: dict, basis, key, counter=None) -> dict:
    """Full normal form of an integer poly against (lm, lc, terms) triples.

    Output is content-stripped with positive leading coefficient; the
    scaling is immaterial to ideal membership and leading terms.
    Content is also stripped periodically mid-reduction to keep the
    integer coefficients from snowballing.
    """
    h = dict(h)
    done: dict = {}
    steps = 0
    while h:
        mu = max(h, key=key)
        c = h.pop(mu)
        reducer = None
        for lm, lc, terms in basis:
            if _mono_divides(lm, mu):
                reducer = (lm, lc, terms)
                break
        if reducer is None:
            done[mu] = c
            continue
        lm, lc, terms = reducer
        d = int_gcd(c, lc)
        a = lc // d
        b = c // d
        if a != 1:
            for k in h:
                h[k] *= a
            for k in done:
                done[k] *= a
        shift = _mono_sub(mu, lm)
        for mg, cg in terms.items():
            if mg == lm:
                continue
            mono = _mono_mul(mg, shift)
            s = h.get(mono, 0) - b * cg
            if s:
                h[mono] = s
            else:
                h.pop(mono, None)
        steps += 1
        if counter is not None:
            # work units weighted by coefficient size, so runaway
            # coefficient growth exhausts a budget quickly and cheaply
            bits = c.bit_length()
            counter[0] += bits if bits > 32 else 32
            if counter[1] is not None and counter[0] > counter[1]:
                raise StepBudgetExceeded("reduction work budget exhausted")
        if steps & 31 == 0 and (h or done):
            g = 0
            for v in h.values():
                g = int_gcd(g, v)
                if g == 1:
                    break
            if g != 1:
                for v in done.values():
                    g = int_gcd(g, v)
                    if g == 1:
                        break
            if g > 1:
                h = {m: v // g for m, v in h.items()}
                done = {m: v // g for m, v in done.items()}
    if not done:
        return {}
    done = _content_strip(done)
    if done[max(done, key=key)] < 0:
        done = {m: -c for m, c in done.items()}
    return done


def _spoly_int(f, g, key):
    """S-polynomial of two basis triples, integer scaled."""
    lmf, lcf, tf = f
    lmg, lcg, tg = g
    lcm = _mono_lcm(lmf, lmg)
    d = int_gcd(lcf, lcg)
    mf = _mono_sub(lcm, lmf)
    mg = _mono_sub(lcm, lmg)
    cf = lcg // d
    cg = lcf // d
    out: dict = {}
    for m, c in tf.items():
        out[_mono_mul(m, mf)] = cf * c
    for m, c in tg.items():
        mono = _mono_mul(m, mg)
        s = out.get(mono, 0) - cg * c
        if s:
            out[mono] = s
        else:
            out.pop(mono, None)
    return out


def _memo_key(order: MonomialOrder):
    """Order key with per-run memoization; monomials recur heavily."""
    cache: dict = {}
    raw = order.key

    def key(mono):
        k = cache.get(mono)
        if k is None:
            k = raw(mono)
            cache[mono] = k
        return k

    return key


def buchberger(
    system,
    order: MonomialOrder = GREVLEX,
    caps: GBCaps | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``system``."""
    if not system:
        raise ContractError("cannot compute a basis for an empty system")
    caps = caps or GBCaps()
    nvars = system[0].nvars
    key = _memo_key(order)

    work = []
    for p in system:
        if p.nvars != nvars:
            raise ContractError("system entries disagree on variable count")
        ip = _to_int_poly(p)
        if ip:
            work.append(ip)
    if not work:
        # zero ideal
        return GroebnerBasis(order, [], nvars)

    # f: master list of (lm, lc, terms); G: set of live indices; B: pair set
    f: list = []
    index_of: dict = {}

    def add_poly(ip: dict) -> int:
        lm = max(ip, key=key)
        frozen = frozenset(ip.items())
        hit = index_of.get(frozen)
        if hit is not None:
            return hit
        f.append((lm, ip[lm], ip))
        index_of[frozen] = len(f) - 1
        return len(f) - 1

    G: set = set()
    B: set = set()

    def update(ih: int):
        # classic pair update with both elimination criteria: coprime
        # pairs participate in the chain-criterion shielding first and
        # are discarded afterwards
        nonlocal G, B
        mh = f[ih][0]
        C = set(G)
        D = set()
        while C:
            ig = C.pop()
            mg = f[ig][0]
            lcm_hg = _mono_lcm(mh, mg)

            def lcm_divides(ip):
                return _mono_divides(_mono_lcm(mh, f[ip][0]), lcm_hg)

            if _mono_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ip) for ip in C)
                and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.add((ih, ig))
        E = set()
        while D:
            pair = D.pop()
            mg = f[pair[1]][0]
            if _mono_mul(mh, mg) != _mono_lcm(mh, mg):
                E.add(pair)
        B_new = set()
        while B:
            ig1, ig2 = B.pop()
            m1, m2 = f[ig1][0], f[ig2][0]
            lcm12 = _mono_lcm(m1, m2)
            if (
                not _mono_divides(mh, lcm12)
                or _mono_lcm(m1, mh) == lcm12
                or _mono_lcm(mh, m2) == lcm12
            ):
                B_new.add((ig1, ig2))
        B_new |= E
        G_new = {ig for ig in G if not _mono_divides(mh, f[ig][0])}
        G_new.add(ih)
        G = G_new
        B = B_new

    counter = [0, caps.max_steps]
    seed = sorted(work, key=lambda ip: key(max(ip, key=key)))
    for ip in seed:
        reduced = _reduce_int(ip, [f[i] for i in sorted(G)], key, counter)
        if reduced:
            update(add_poly(reduced))

    lcm_key_cache: dict = {}

    def pair_key(pr):
        k = lcm_key_cache.get(pr)
        if k is None:
            k = key(_mono_lcm(f[pr[0]][0], f[pr[1]][0]))
            lcm_key_cache[pr] = k
        return (k, pr)

    processed = 0
    while B:
        processed += 1
        if processed > caps.max_pairs:
            raise ResourceError(f"pair cap {caps.max_pairs} exceeded")
        if len(f) > caps.max_basis:
            raise ResourceError(f"basis cap {caps.max_basis} exceeded")
        pair = min(B, key=pair_key)
        B.discard(pair)
        i, j = pair
        s = _spoly_int(f[i], f[j], key)
        if not s:
            continue
        basis_view = [f[t] for t in sorted(G)]
        h = _reduce_int(s, basis_view, key, counter)
        if h:
            update(add_poly(h))

    # minimalize: drop generators whose leading monomial is divisible by another's
    live = sorted(G, key=lambda i: key(f[i][0]))
    lms = [f[i][0] for i in live]
    keep = []
    for pos, i in enumerate(live):
        lm = f[i][0]
        if any(
            q != pos and _mono_divides(lms[q], lm) and (lms[q] != lm or q < pos)
            for q in range(len(live))
        ):
            continue
        keep.append(i)

    # tail-reduce each kept generator against the others
    reduced_gens = []
    kept_triples = [f[i] for i in keep]
    for pos, i in enumerate(keep):
        others = kept_triples[:pos] + kept_triples[pos + 1 :]
        h = _reduce_int(f[i][2], others, key)
        reduced_gens.append(h)

    out = []
    for h in sorted(reduced_gens, key=lambda d: key(max(d, key=key))):
        lc = h[max(h, key=key)]
        out.append(MultiPoly(nvars, {m: Fraction(c, lc) for m, c in h.items()}))
    result = GroebnerBasis(order, out, nvars)
    result.steps_used = counter[0]
    return result


def normal_form(p: MultiPoly, basis: GroebnerBasis) -> MultiPoly:
    """Unique remainder of p modulo a reduced basis (Fraction arithmetic)."""
    if p.nvars != basis.nvars:
        raise ContractError("variable counts differ")
    key = _memo_key(basis.order)
    gens = basis.gens
    lms = basis.leading_monomials()
    h = dict(p.terms)
    done: dict = {}
    while h:
        mu = max(h, key=key)
        c = h.pop(mu)
        hit = None
        for lm, g in zip(lms, gens):
            if _mono_divides(lm, mu):
                hit = (lm, g)
                break
        if hit is None:
            done[mu] = c
            continue
        lm, g = hit
        shift = _mono_sub(mu, lm)
        for mg, cg in g.terms.items():
            if mg == lm:
                continue
            mono = _mono_mul(mg, shift)
            s = h.get(mono, 0) - c * cg
            if s:
                h[mono] = s
            else:
                h.pop(mono, None)
    return MultiPoly(p.nvars, done)


def is_zero_dimensional(basis: GroebnerBasis) -> bool:
    """Staircase criterion: every variable has a pure-power leading monomial."""
    if basis.is_trivial():
        return True
    if not basis.gens:
        return basis.nvars == 0
    lms = basis.leading_monomials()
    for var in range(basis.nvars):
        found = False
        for lm in lms:
            if lm[var] > 0 and all(e == 0 for i, e in enumerate(lm) if i != var):
                found = True
                break
        if not found:
            return False
    return True


def quotient_basis(basis: GroebnerBasis, caps: GBCaps | None = None) -> list:
    """Monomials under the staircase, ascending in the basis order."""
    caps = caps or GBCaps()
    if basis.is_trivial():
        return []
    if not is_zero_dimensional(basis):
        raise ContractError("quotient basis requires a zero-dimensional ideal")
    lms = basis.leading_monomials()
    nv = basis.nvars
    start = (0,) * nv
    seen = {start}
    stack = [start]
    out = []
    while stack:
        mono = stack.pop()
        if any(_mono_divides(lm, mono) for lm in lms):
            continue
        out.append(mono)
        if len(out) > caps.max_quotient:
            raise ResourceError(f"quotient cap {caps.max_quotient} exceeded")
        for i in range(nv):
            nxt = mono[:i] + (mono[i] + 1,) + mono[i + 1 :]
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    out.sort(key=basis.order.key)
    return out
