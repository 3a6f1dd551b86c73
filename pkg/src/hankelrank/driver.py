"""The recursive critical-point driver and its parametrization combinators.

Each level draws a random change of variables, solves the multiplier
system for critical points of the projection onto the first
coordinate, recurses on a generic section x1 = alpha, and undoes the
rotation on the union.  Degenerate draws surface as genericity errors
and trigger a capped redraw with the next seed; every redraw is logged
in the trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from . import univariate as uv
from .bounds import total_output_bound
from .errors import DimensionError, GenericityError, RetriesExhaustedError
from .groebner import GBCaps
from .hankel import LinearHankelPencil, change_vars_pencil, rank_at, substitute_x1
from .poly import GREVLEX, MonomialOrder, MultiPoly
from .realroots import evaluate_parametrization, isolate_real_roots
from .solver import (
    RationalParametrization,
    SolveOutcome,
    zero_dim_solve,
    zero_dim_solve_max_rank,
)
from .systems import draw_parameters, incidence_system, lagrange_system


@dataclass
class SolveOptions:
    max_retries: int = 3
    verify: bool = True
    merge_union: bool = False
    eps: Fraction = Fraction(1, 2**30)
    jobs: int = 1
    caps: GBCaps = field(default_factory=GBCaps)
    check_genericity: bool = False
    check_soundness: bool | None = None
    # work budget for the optimistic whole-system critical-point solve;
    # exhausting it falls back to the per-rank restricted solves, which
    # are complete on their own
    step4_effort: int = 500_000_000


@dataclass
class LevelRecord:
    depth: int
    n: int
    seed: int
    branch: str = ""
    redraws: int = 0
    rotated_step4: bool = True  # the full-rank solve is built from the rotated pencil
    per_p: list = field(default_factory=list)  # (p, outcome tag, degree)
    degrees: list = field(default_factory=list)
    draw_alpha: str = ""
    notes: list = field(default_factory=list)


@dataclass
class SolveTrace:
    levels: list = field(default_factory=list)

    def max_degree(self) -> int:
        degs = [d for lvl in self.levels for d in lvl.degrees]
        return max(degs, default=0)


@dataclass
class SamplePointsResult:
    params: list  # RationalParametrization in the original x variables
    boxes: list  # RealSampleBox, top level only
    trace: SolveTrace
    total_degree: int


# -- parametrization combinators ---------------------------------------------


def union_params(a: list, b: list) -> list:
    """Union of the encoded finite sets, kept as a list of parametrizations."""
    for p in a:
        for q in b:
            if len(p.coords) != len(q.coords):
                raise DimensionError("union of parametrizations with different arity")
    return list(a) + list(b)


def lift_params(params: list, alpha) -> list:
    """Prepend an exact first coordinate x1 = alpha to every encoded point."""
    alpha = Fraction(alpha)
    out = []
    for p in params:
        coords = [uv.scale(p.q0, alpha)] + [list(c) for c in p.coords]
        names = [f"x{i+1}" for i in range(len(coords))]
        out.append(
            RationalParametrization(
                p.tname, list(p.q), list(p.q0), coords, names, list(p.separating)
            )
        )
    return out


def change_vars_params(params: list, matrix) -> list:
    """Coordinate change x -> M^{-1} x on the encoded sets (so the driver
    passes M^{-1} here to map rotated solutions back by x -> M x)."""
    if not params:
        return []
    n = len(params[0].coords)
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise DimensionError("change-of-variables matrix has the wrong shape")
    try:
        inv = linalg.invert(matrix)
    except Exception as exc:
        raise GenericityError(f"singular change of variables: {exc}") from exc
    out = []
    for p in params:
        coords = []
        for i in range(n):
            acc: list = []
            for j in range(n):
                if inv[i][j]:
                    acc = uv.add(acc, uv.scale(p.coords[j], inv[i][j]))
            coords.append(uv.rem(acc, p.q) if acc else [])
        out.append(
            RationalParametrization(
                p.tname, list(p.q), list(p.q0), coords, list(p.var_names), list(p.separating)
            )
        )
    return out


def merge_parametrizations(params: list, nvars: int, seed: int, caps=None) -> list:
    """Re-encode a union as a single parametrization by exact ideal
    intersection and one zero-dimensional re-solve (fixture generation)."""
    if len(params) <= 1:
        return list(params)
    from .groebner import buchberger

    def shape_ideal(p) -> list:
        # generators of the vanishing ideal in (x_1..x_n), t eliminated
        nv = nvars + 1  # variables (t, x1..xn) with t dominant
        gens = [_dense_to_multipoly(p.q, nv, 0)]
        for i, c in enumerate(p.coords):
            xi = MultiPoly.variable(nv, 1 + i)
            gens.append(xi * _dense_to_multipoly(p.q0, nv, 0) - _dense_to_multipoly(c, nv, 0))
        order = MonomialOrder("block", split=1)
        G = buchberger(gens, order, caps)
        return [g.substitute(0, 0) for g in G.gens if g.degree_in(0) == 0]

    current = shape_ideal(params[0])
    for nxt in params[1:]:
        other = shape_ideal(nxt)
        # intersection via w * I + (1 - w) * J, eliminating w
        nv = nvars + 1  # (w, x1..xn)
        w = MultiPoly.variable(nv, 0)
        one_minus_w = MultiPoly.const(nv, 1) - w
        gens = [w * g.extend(nv, 1) for g in current]
        gens += [one_minus_w * g.extend(nv, 1) for g in other]
        order = MonomialOrder("block", split=1)
        from .groebner import buchberger as bb

        G = bb(gens, order, caps)
        current = [g.substitute(0, 0) for g in G.gens if g.degree_in(0) == 0]
    out = zero_dim_solve(current, list(range(nvars)), seed, GREVLEX, caps)
    if out.tag != "finite":
        raise GenericityError("union re-solve did not produce a finite set")
    return out.params


def _dense_to_multipoly(dense, nvars: int, var: int) -> MultiPoly:
    terms = {}
    for e, c in enumerate(dense):
        if c:
            mono = tuple(e if i == var else 0 for i in range(nvars))
            terms[mono] = c
    return MultiPoly(nvars, terms)


# -- the driver ----------------------------------------------------------------


def low_rank_hankel(
    pencil: LinearHankelPencil, r: int, seed: int, opts: SolveOptions | None = None
) -> SamplePointsResult:
    """Sample points on the locus rank H(x) <= r, at least one per
    connected component of its real trace (under generic draws)."""
    opts = opts or SolveOptions()
    if not 0 <= r <= pencil.m - 1:
        raise DimensionError(f"rank bound {r} out of range for size {pencil.m}")
    trace = SolveTrace()
    params = _solve_level(pencil, r, seed, 0, opts, trace)
    if opts.verify:
        from .verify import verify_membership

        for p in params:
            if not verify_membership(pencil, r, p):
                raise GenericityError("top-level membership certificate failed")
    boxes = []
    for p in params:
        if uv.degree(p.q) < 1:
            continue
        for iv in isolate_real_roots(p.q):
            boxes.append(evaluate_parametrization(p, iv, opts.eps))
    total = sum(p.degree() for p in params)
    return SamplePointsResult(params, boxes, trace, total)


def _solve_level(pencil, r, seed, depth, opts, trace) -> list:
    n = pencil.n
    base_n = 2 * pencil.m - 2 * r - 1
    if n == 0:
        rec = LevelRecord(depth, 0, seed, branch="constant")
        trace.levels.append(rec)
        if rank_at(pencil, []) <= r:
            rec.degrees.append(1)
            return [
                RationalParametrization(
                    "t", [Fraction(0), Fraction(1)], [Fraction(1)], [], [], []
                )
            ]
        return []
    if n < base_n:
        trace.levels.append(LevelRecord(depth, n, seed, branch="below-base"))
        return []
    last_error = None
    rec = LevelRecord(depth, n, seed)
    trace.levels.append(rec)
    subtree_start = len(trace.levels)
    for attempt in range(opts.max_retries + 1):
        rec.redraws = attempt
        try:
            return _attempt_level(pencil, r, seed + attempt, depth, opts, trace, rec)
        except GenericityError as exc:
            last_error = exc
            rec.notes.append(f"redraw after: {exc}")
            rec.per_p.clear()
            rec.degrees.clear()
            del trace.levels[subtree_start:]  # drop records from the failed subtree
            continue
    raise RetriesExhaustedError(
        f"redraw cap exceeded at depth {depth}: {last_error}", trace=trace
    )


def _attempt_level(pencil, r, seed, depth, opts, trace, rec) -> list:
    m, n = pencil.m, pencil.n
    base_n = 2 * m - 2 * r - 1
    draw = draw_parameters(seed, depth, m, n, r)
    rec.seed = seed
    rec.draw_alpha = str(draw.alpha)

    if opts.check_genericity:
        from .verify import check_property_g

        for p in range(r + 1):
            if not check_property_g(pencil, draw.u_list[p], p, caps=opts.caps):
                raise GenericityError(f"regularity check failed at rank level {p}")

    if n == base_n:
        rec.branch = "base-case"
        inc = incidence_system(pencil, draw.u_list[r], r)
        out = zero_dim_solve(
            inc.polys,
            list(range(n)),
            _derived_seed(seed, depth, 0),
            GREVLEX,
            opts.caps,
            check_soundness=opts.check_soundness,
            blocks=[list(range(n)), list(range(n, n + r + 1))],
        )
        if out.tag == "notFinite":
            raise GenericityError("base-case incidence system is not finite")
        rec.degrees.extend(p.degree() for p in out.params)
        return out.params

    rotated = change_vars_pencil(pencil, draw.matrix)
    inc = incidence_system(rotated, draw.u_list[r], r)
    lag = lagrange_system(inc, draw.v_list[r])
    lag_blocks = [
        list(range(n)),
        list(range(n, n + r + 1)),
        list(range(n + r + 1, n + 2 * m + 1)),
    ]
    out4 = zero_dim_solve(
        lag.polys,
        list(range(n)),
        _derived_seed(seed, depth, 1),
        GREVLEX,
        opts.caps,
        check_soundness=opts.check_soundness,
        blocks=lag_blocks,
        max_effort=opts.step4_effort,
    )
    if out4.tag == "finite":
        rec.branch = "lagrange-finite"
        found = out4.params
        rec.per_p.append((r, "finite", sum(p.degree() for p in out4.params)))
    elif out4.tag == "empty":
        rec.branch = "lagrange-empty"
        found = []
        rec.per_p.append((r, "empty", 0))
    else:
        rec.branch = "rank-loop"
        found = []
        for p in range(r + 1):
            inc_p = incidence_system(rotated, draw.u_list[p], p)
            lag_p = lagrange_system(inc_p, draw.v_list[p])
            out_p = zero_dim_solve_max_rank(
                lag_p,
                list(range(n)),
                _derived_seed(seed, depth, 100 + p),
                opts.caps,
                check_soundness=opts.check_soundness,
            )
            if out_p.tag == "notFinite":
                raise GenericityError(
                    f"rank-{p} restricted multiplier system is not finite"
                )
            rec.per_p.append((p, out_p.tag, sum(q.degree() for q in out_p.params)))
            found = union_params(found, out_p.params)

    rec.degrees.extend(p.degree() for p in found)

    section = substitute_x1(rotated, draw.alpha)
    below = _solve_level(section, r, seed, depth + 1, opts, trace)
    lifted = lift_params(below, draw.alpha)

    combined = union_params(lifted, found)
    if opts.merge_union and len(combined) > 1:
        combined = merge_parametrizations(
            combined, n, _derived_seed(seed, depth, 7), opts.caps
        )
    inv = linalg.invert(draw.matrix)
    return change_vars_params(combined, inv)


def _derived_seed(seed: int, depth: int, slot: int) -> int:
    h = (seed & (2**64 - 1)) * 0x9E3779B97F4A7C15
    h = (h ^ (depth * 1315423911)) * 0xBF58476D1CE4E5B9
    h = (h ^ (slot + 0x1234)) * 0x94D049BB133111EB
    return h & (2**64 - 1)


def degree_budget_ok(pencil: LinearHankelPencil, r: int, result: SamplePointsResult) -> bool:
    """The sum of output degrees never exceeds the computed bound."""
    return result.total_degree <= total_output_bound(pencil.m, pencil.n, r).total
