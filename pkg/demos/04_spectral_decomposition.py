#!/usr/bin/env python3
"""Lagrange resolution of operators fixed by iterates of the p-power map.

Run: python demos/04_spectral_decomposition.py
"""

from padicspec import PrecisionContext, UMatrix, teichmuller_spectral


def show(matrix):
    return [[e.residue() for e in row] for row in matrix.rows]


ctx = PrecisionContext(3, 4)

# The swap matrix satisfies x^3 = x, so it resolves against the three
# fixed points of the cube map: 0, 1, -1.  The 0-projector vanishes.
swap = UMatrix.from_ints([[0, 1], [1, 0]], ctx)
dec = teichmuller_spectral(swap, 1)
print("swap matrix, period 1:")
for lam, proj in dec.points:
    print(f"  eigenvalue {lam.residue()} -> projector {show(proj)}")

# Identities: projectors sum to 1 and weight back to the operator.
total = dec.projectors[0]
weighted = dec.projectors[0].scale(dec.eigenvalues[0])
for lam, proj in dec.points[1:]:
    total = total + proj
    weighted = weighted + proj.scale(lam)
print("  sum of projectors == I:", total.congruent(UMatrix.identity(2, ctx)))
print("  weighted sum == x:", weighted.congruent(swap))

# A rotation satisfies x^9 = x but not x^3 = x: its eigenvalues are the
# square roots of -1, which live in the degree-2 unramified extension.
rot = UMatrix.from_ints([[0, 1], [-1, 0]], ctx)
dec2 = teichmuller_spectral(rot, 2)
print("\nrotation matrix, period 2:")
for lam, proj in dec2.points:
    print(f"  eigenvalue {lam.vector()} (square: {(lam * lam).vector()})")
print("  the p-power map swaps the two conjugate eigenvalues:",
      {lam.sigma_window().vector() for lam, _ in dec2.points}
      == {lam.vector() for lam, _ in dec2.points})
