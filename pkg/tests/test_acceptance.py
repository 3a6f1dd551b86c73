"""Acceptance harness: one test per shipping criterion.

Each test prints a PASS/FAIL line (run with -s to see them all at a
glance).  Tolerances are pinned here and nowhere else; every expected
number is either derived from an independent oracle in this repo or a
transcribed benchmark value.
"""

import time
from fractions import Fraction

import pytest

from hankelrank import univariate as uv
from hankelrank.bounds import comb, delta_bound, delta_oracle, total_output_bound
from hankelrank.driver import SolveOptions, low_rank_hankel
from hankelrank.errors import RetriesExhaustedError
from hankelrank.hankel import build_pencil
from hankelrank.solver import zero_dim_solve
from hankelrank.systems import draw_parameters, incidence_system
from hankelrank.verify import (
    PlantSpec,
    plant_rank_deficient,
    random_pencil,
    verify_membership,
)


def report(name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] {name}" + (f": {detail}" if detail else ""))
    assert ok, f"{name}: {detail}"


def run_row(m, r, n, seed_count, opts=None, max_extra=8):
    """Solve a table row on fresh random pencils, replacing (and
    logging) any seed that dies in a redraw cap."""
    opts = opts or SolveOptions()
    outcomes = []
    replacements = []
    seed = 0
    while len(outcomes) < seed_count and seed < seed_count + max_extra:
        pencil = random_pencil(m, n, seed * 7919 + 17)
        try:
            result = low_rank_hankel(pencil, r, seed=seed * 131 + 5, opts=opts)
        except RetriesExhaustedError as exc:
            replacements.append(f"seed {seed} replaced ({exc})")
            seed += 1
            continue
        outcomes.append((pencil, result))
        seed += 1
    for note in replacements:
        print("   ", note)
    return outcomes


def test_criterion_1_bound_formula_equivalence():
    t0 = time.monotonic()
    mismatches = [
        (m, n, p)
        for m in range(1, 7)
        for n in range(1, 11)
        for p in range(m)
        if delta_bound(m, n, p) != delta_oracle(m, n, p)
    ]
    elapsed = time.monotonic() - t0
    spot = (
        delta_bound(3, 2, 2) == 9
        and delta_bound(4, 3, 3) == 52
        and delta_bound(3, 2, 0) == 0
    )
    report(
        "criterion 1: delta closed form == extraction oracle (sweep m<=6, n<=10)",
        not mismatches and spot and elapsed < 10.0,
        f"{elapsed:.2f}s, mismatches={mismatches}",
    )


# table rows asserted end-to-end: (m, r, n) -> expected total degree
ASSERTED_ROWS = [
    (3, 2, 2, 9),
    (3, 2, 3, 21),
    (3, 2, 4, 33),
    (4, 2, 3, 10),
    (4, 3, 2, 16),
]

_row_results_cache = {}


def _solved_rows():
    if not _row_results_cache:
        for m, r, n, expected in ASSERTED_ROWS:
            _row_results_cache[(m, r, n)] = (expected, run_row(m, r, n, seed_count=3))
    return _row_results_cache


def test_criterion_2_table_degree_reproduction():
    all_ok = True
    details = []
    for (m, r, n), (expected, outcomes) in _solved_rows().items():
        observed = [res.total_degree for _, res in outcomes]
        ok = len(observed) == 3 and all(t == expected for t in observed)
        all_ok = all_ok and ok
        details.append(f"({m},{r},{n}): expected {expected}, observed {observed}")
    report("criterion 2: benchmark TotalDeg reproduction, 3 seeds/row", all_ok, "; ".join(details))


def test_criterion_3_bound_soundness():
    violations = []
    for (m, r, n), (_, outcomes) in _solved_rows().items():
        bound = total_output_bound(m, n, r).total
        for _, res in outcomes:
            if res.total_degree > bound:
                violations.append(((m, r, n), res.total_degree, bound))
    report(
        "criterion 3: totalDegree <= computed bound on every completed run",
        not violations,
        str(violations) if violations else "all runs within budget",
    )


def test_criterion_4_membership_certificates():
    bad = 0
    total = 0
    for (m, r, n), (_, outcomes) in _solved_rows().items():
        for pencil, res in outcomes:
            for param in res.params:
                total += 1
                if not verify_membership(pencil, r, param):
                    bad += 1
    report(
        "criterion 4: exact membership certificate for every parametrization",
        bad == 0 and total > 0,
        f"{total} parametrizations checked, {bad} failures",
    )


def test_criterion_5_toy_end_to_end():
    t0 = time.monotonic()
    pencil = build_pencil(2, 1, [[0, 1, 0], [1, 0, 1]])
    result = low_rank_hankel(pencil, 1, seed=42)
    elapsed = time.monotonic() - t0
    points = {box.intervals[0] for box in result.boxes}
    ok = points == {(Fraction(1), Fraction(1)), (Fraction(-1), Fraction(-1))}
    report(
        "criterion 5: toy pencil yields exactly x=1 and x=-1",
        ok and elapsed < 10.0,
        f"{elapsed:.2f}s, boxes={sorted(points)}",
    )


# planted shape mix: twenty instances drawn from the four stated shapes
PLANTED_INSTANCES = (
    [(2, 2, 1)] * 6
    + [(3, 2, 2)] * 6
    + [(3, 3, 2)] * 6
    + [(4, 3, 3)] * 2
)


def test_criterion_6_planted_nonemptiness():
    t0 = time.monotonic()
    failures = []
    for idx, (m, n, r) in enumerate(PLANTED_INSTANCES):
        x0 = [Fraction(((idx + j) % 5) - 2) for j in range(n)]
        pencil = plant_rank_deficient(PlantSpec(m, n, r, x0, seed=idx))
        try:
            result = low_rank_hankel(pencil, r, seed=1000 + idx)
        except Exception as exc:  # noqa: BLE001 - report, then fail the criterion
            failures.append(f"instance {idx} ({m},{n},{r}): {exc}")
            continue
        if not result.params:
            failures.append(f"instance {idx} ({m},{n},{r}): empty result")
            continue
        for param in result.params:
            if not verify_membership(pencil, r, param):
                failures.append(f"instance {idx} ({m},{n},{r}): membership failed")
    elapsed = time.monotonic() - t0
    report(
        "criterion 6: 20 planted instances nonempty with certified membership",
        not failures and elapsed < 1800.0,
        f"{elapsed:.0f}s; " + ("; ".join(failures) if failures else "all nonempty"),
    )


def test_criterion_7_base_case_degree():
    t0 = time.monotonic()
    ok = True
    details = []
    for m, r in [(2, 1), (3, 2), (4, 3)]:
        n = 2 * m - 2 * r - 1
        cap = comb(2 * m - r - 1, r)
        for seed in range(3):
            pencil = random_pencil(m, n, 300 + seed)
            draw = draw_parameters(seed, 0, m, n, r)
            inc = incidence_system(pencil, draw.u_list[r], r)
            out = zero_dim_solve(inc.polys, list(range(n)), seed=seed + 4)
            degs = [p.degree() for p in out.params]
            if any(d > cap for d in degs):
                ok = False
            details.append(f"({m},{r}): deg {degs} <= {cap}")
    elapsed = time.monotonic() - t0
    report(
        "criterion 7: base-case incidence degree within the binomial cap",
        ok and elapsed < 300.0,
        f"{elapsed:.1f}s; " + "; ".join(details),
    )


def test_criterion_8_property_suites_without_solves():
    # the per-module property tests cover ring axioms, Sturm counts,
    # serialization round-trips, and combinator algebra; this spot-runs
    # the same checks to prove they need no solver machinery
    import random as _random

    t0 = time.monotonic()
    from hankelrank.poly import MultiPoly
    from hankelrank.realroots import isolate_real_roots
    from hankelrank.serialize import dump_pencil, load_pencil
    from hankelrank.driver import lift_params, union_params

    rng = _random.Random(99)
    for _ in range(10):
        terms = {
            tuple(rng.randint(0, 2) for _ in range(3)): Fraction(rng.randint(-9, 9))
            for _ in range(4)
        }
        p = MultiPoly(3, terms)
        q = MultiPoly(3, dict(reversed(list(terms.items()))))
        assert p * q == q * p
    roots = sorted(rng.sample(range(-25, 25), 12))
    poly = [Fraction(1)]
    for root in roots:
        poly = uv.mul(poly, [Fraction(-root), Fraction(1)])
    assert len(isolate_real_roots(poly)) == 12
    pencil = random_pencil(3, 2, 1)
    assert load_pencil(dump_pencil(pencil)).mats == pencil.mats
    from hankelrank.solver import RationalParametrization

    def point_param(*coords):
        return RationalParametrization(
            "t",
            [Fraction(-1), Fraction(1)],
            [Fraction(1)],
            [[Fraction(c)] for c in coords],
            [f"x{i+1}" for i in range(len(coords))],
            [],
        )

    lifted = lift_params([point_param(2)], 3)
    assert len(union_params([point_param(1, 3)], lifted)) == 2
    elapsed = time.monotonic() - t0
    report(
        "criterion 8: property suites run with no solver invocation",
        elapsed < 60.0,
        f"{elapsed:.2f}s",
    )


def test_criterion_9_timings_informational_only():
    # wall-clock benchmark timings are recorded but never asserted:
    # the solving engine differs by design
    from hankelrank.verify import RowReport, TableRow

    row = RowReport(row=TableRow(3, 2, 2, 9, 6), timings=[123.0])
    report(
        "criterion 9: timings carried as information, no assertion on them",
        isinstance(row.timings, list),
        "timings field exists and is never compared",
    )
