"""A first look at Hankel pencils and the rectangular reformulation.

Run:  python demos/01_pencils_and_rank.py
"""

from fractions import Fraction

from hankelrank import (
    build_pencil,
    eval_pencil,
    kernel_pattern,
    rank_at,
    rect_system,
)

# The smallest interesting pencil: H(x) = [[x, 1], [1, x]].
# Generators are the skew diagonals: H0 contributes (0, 1, 0) and the
# x-coefficient matrix contributes (1, 0, 1).
pencil = build_pencil(2, 1, [[0, 1, 0], [1, 0, 1]])

print("H(x) at a few points:")
for x in (Fraction(0), Fraction(1), Fraction(2)):
    h = eval_pencil(pencil, [x])
    print(f"  x = {x}:  {h.to_matrix()}   rank {rank_at(pencil, [x])}")

# The determinant x^2 - 1 vanishes exactly at x = +-1, which is where
# the rank drops to 1.

# The rank condition is checked on a rectangular matrix of linear
# forms rather than the square pencil: rank H(x) = p exactly when this
# (2m-p-1) x (p+1) matrix has rank p.  For larger sizes this is the
# difference between a handful of minors and hundreds.
bigger = build_pencil(4, 2, [
    [1, 0, 2, -1, 0, 3, 1],
    [0, 1, 0, 0, 2, 0, -1],
    [2, 0, 0, 1, 0, 1, 0],
])
rect = rect_system(bigger, 2)
print(f"\nrank-2 test matrix for a 4x4 pencil: {rect.rows} x {rect.cols}")
print("entry (0,0):", rect.entry(0, 0))
print("entry (1,1):", rect.entry(1, 1), " (same linear form shifted: Hankel structure)")

# The kernel of a rank-r Hankel matrix is spanned by shifted copies of
# one short vector; this banded pattern is what makes the incidence
# lift small.
print("\nkernel pattern for m=4, r=2 (columns are shifts of y):")
pattern = kernel_pattern(4, 2)
for i in range(pattern.rows):
    print("  ", [str(pattern.entry(i, j)) for j in range(pattern.cols)])
