"""Planted instances and exact certificates.

Run:  python demos/04_certificates_and_planting.py
"""

from fractions import Fraction

from hankelrank import (
    PlantSpec,
    build_pencil,
    check_property_g,
    low_rank_hankel,
    plant_rank_deficient,
    rank_at,
    verify_membership,
)

# Plant a pencil whose value at x0 = (1, 2) has rank exactly 2: the
# planted value is a Hankel matrix built from two geometric sequences,
# so its rank is certain, and the remaining coefficient matrices are
# random.
spec = PlantSpec(m=3, n=2, r=2, x0=[Fraction(1), Fraction(2)], seed=4)
pencil = plant_rank_deficient(spec)
print("rank at planted point:", rank_at(pencil, spec.x0))

result = low_rank_hankel(pencil, 2, seed=11)
print(f"solve found {len(result.boxes)} real box(es), total degree {result.total_degree}")

# Certificates are exact: substitute the parametrized point into every
# maximal minor of the rectangular matrix, clear denominators, reduce
# modulo q(t); everything must vanish identically.
print("membership:", all(verify_membership(pencil, 2, p) for p in result.params))

# The regularity property behind the smoothness assumptions is also
# decidable exactly: the system plus all maximal minors of its
# Jacobian must generate the unit ideal.
u = (Fraction(1), Fraction(2), Fraction(1))
print("regularity at p=2:", check_property_g(pencil, u, 2))
zero_pencil = build_pencil(2, 1, [[0, 0, 0], [0, 0, 0]])
print("regularity of the zero pencil (must fail):",
      check_property_g(zero_pencil, (Fraction(1), Fraction(1)), 1))
