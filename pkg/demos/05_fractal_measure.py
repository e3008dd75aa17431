#!/usr/bin/env python3
"""The projector-valued measure on the balls of Z_p and its integral.

Run: python demos/05_fractal_measure.py
"""

from padicspec import PrecisionContext, UMatrix, spectral_integral, spectral_measure
from padicspec.matrix import inverse

ctx = PrecisionContext(3, 4)


def show(matrix):
    return [[e.residue() for e in row] for row in matrix.rows]


# diag(1, 4): both eigenvalues reduce to 1 mod 3, then separate at the
# next digit.  Level 0 holds one ball; level 1 splits it in two.
a = UMatrix.from_ints([[1, 0], [0, 4]], ctx)
measure = spectral_measure(a, depth=3)
print("ball tree of diag(1, 4):")
for level in range(measure.depth):
    radius = f"1/{ctx.p ** (level + 1)}"
    print(f"  level {level} (balls of radius {radius}):")
    for address, projector in measure.level(level):
        center = measure.ball_center(address, ctx).residue()
        print(f"    path {address} (center {center}): {show(projector)}")

identity_check, reconstruction = spectral_integral(measure)
print("\nintegral of dE = I:", identity_check.congruent(UMatrix.identity(2, ctx)))
print("integral of lambda dE == A:", reconstruction.congruent(a))

# Conjugating moves the projectors but not the tree shape or centers.
u = UMatrix.from_ints([[1, 1], [0, 1]], ctx)
b = u * a * inverse(u)
measure_b = spectral_measure(b, depth=2)
print("\nconjugated operator, depth-2 balls:")
for address, projector in measure_b.level(1):
    print(f"  ball {address}: {show(projector)}")

# Depth controls reconstruction accuracy: error valuation >= depth.
for depth in (1, 2, 3, 4):
    _, recon = spectral_integral(spectral_measure(b, depth))
    print(f"depth {depth}: |reconstruction - A| has valuation {(recon - b).valuation}")
