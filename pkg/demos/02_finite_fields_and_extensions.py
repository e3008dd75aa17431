#!/usr/bin/env python3
"""Residue fields F_{p^N} and the unramified rings that lift them.

Run: python demos/02_finite_fields_and_extensions.py
"""

import math

from padicspec import (
    build_modulus,
    enumerate_teichmuller,
    finite_field,
    fq_frobenius,
    sigma_fixed_points,
    teichmuller_lift_ext,
)

# Deterministic moduli: the lexicographically smallest monic irreducible.
for p, n in [(2, 2), (2, 3), (3, 2), (5, 2)]:
    print(f"modulus for F_{p}^{n}:", build_modulus(p, n))

# Frobenius generates the Galois group; its orbit on the generator of F_9:
f9 = finite_field(3, 2)
x = f9.generator()
print("\nFrobenius orbit of X in F_9:", x.coords, "->", fq_frobenius(x).coords,
      "->", fq_frobenius(fq_frobenius(x)).coords)

# Lifting F_9 into O_K / 3^3 O_K: each element gets a unique sigma^2-fixed lift.
w = teichmuller_lift_ext(x, 3)
print("lift of X:", w.vector(), "| sigma^2-fixed:", w.sigma_window(2).vector() == w.vector())

# The period-N census: exactly p^N points, one per residue-field element.
points = enumerate_teichmuller(3, 2, 2)
print(f"\n|T_2| over Z_3 at precision 2: {len(points)} points")
print("sample:", [pt.vector() for pt in points[:4]], "...")

# Containment of period sets follows divisibility, inside one common ring.
print("\ncontainment of period sets inside the degree-lcm ring (p = 2):")
for n, n_star in [(1, 2), (2, 4), (2, 3), (3, 6), (4, 6)]:
    degree = math.lcm(n, n_star)
    small = {w.vector() for w in sigma_fixed_points(2, degree, n, 2)}
    large = {w.vector() for w in sigma_fixed_points(2, degree, n_star, 2)}
    verdict = "T_%d <= T_%d" % (n, n_star) if small <= large else "T_%d !<= T_%d" % (n, n_star)
    print(f"  N={n}, N*={n_star}: {verdict}  (divides: {n_star % n == 0})")
