"""End-to-end: sample points on the rank-deficient locus of a pencil.

Run:  python demos/03_sample_points.py
"""

from fractions import Fraction

from hankelrank import (
    build_pencil,
    low_rank_hankel,
    total_output_bound,
    verify_membership,
)

# H(x) = [[x, 1], [1, x]]: the rank <= 1 locus is {x = 1} u {x = -1}.
pencil = build_pencil(2, 1, [[0, 1, 0], [1, 0, 1]])
result = low_rank_hankel(pencil, 1, seed=42)

print("parametrizations:")
for param in result.params:
    print(f"  q(t) of degree {param.degree()}: {[str(c) for c in param.q]}")
    for name, coeffs in zip(param.var_names, param.coords):
        print(f"    {name}(t) = {[str(c) for c in coeffs]}")

print("\nreal sample boxes (exact rationals):")
for box in result.boxes:
    print("  ", [(str(lo), str(hi)) for lo, hi in box.intervals])

bound = total_output_bound(pencil.m, pencil.n, 1).total
print(f"\ntotal output degree {result.total_degree} within budget {bound}")
print("membership certificates:",
      all(verify_membership(pencil, 1, p) for p in result.params))

# A 3x3 pencil in two variables: the solve recurses once (critical
# points of the projection onto x1, then a generic section x1 = alpha).
from hankelrank.verify import random_pencil

pencil2 = random_pencil(3, 2, seed=17)
result2 = low_rank_hankel(pencil2, 2, seed=5)
print(f"\nrandom 3x3 pencil, rank <= 2: total degree {result2.total_degree}, "
      f"{len(result2.boxes)} real boxes")
for lvl in result2.trace.levels:
    print(f"  depth {lvl.depth} (n={lvl.n}): {lvl.branch}, degrees {lvl.degrees}")
