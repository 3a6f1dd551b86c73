"""Degree budgets: how many solutions can the whole pipeline emit?

Run:  python demos/02_degree_budgets.py
"""

from hankelrank import (
    delta_bound,
    delta_oracle,
    homotopy_terms,
    total_output_bound,
)

# The per-level bound counts isolated solutions of one multiplier
# system.  Two independent computations must agree: a closed-form
# binomial sum, and literal coefficient extraction from a product of
# multidegree forms truncated by pure powers.
print("per-level bound, closed form vs extraction oracle:")
for m, n, p in [(3, 2, 2), (3, 3, 2), (4, 3, 3), (5, 6, 3)]:
    print(f"  delta({m},{n},{p}) = {delta_bound(m, n, p)} / oracle {delta_oracle(m, n, p)}")

# The deformation-curve variant adds three correction terms; the first
# term is always the plain bound.
t1, t2, t3, t4 = homotopy_terms(3, 2, 2)
print(f"\nhomotopy curve terms for (3,2,2): {t1} + {t2} + {t3} + {t4} = {t1+t2+t3+t4}")

# The full budget for a recursive solve: one base term plus the sum of
# per-level bounds over every recursion level and rank stratum.
for m, n, r in [(3, 2, 2), (3, 4, 2), (4, 3, 3)]:
    rep = total_output_bound(m, n, r)
    print(f"\nbudget for m={m}, n={n}, r={r}:")
    print(f"  base degree {rep.base_degree}")
    for k in rep.level_range():
        row = ", ".join(f"p={p}: {rep.per_level[(k, p)]}" for p in range(r + 1))
        print(f"  level n={k}: {row}")
    print(f"  total {rep.total}")
