#!/usr/bin/env python3
"""The multiplicative/nilpotent split and the commutator inequality.

Run: python demos/06_jordan_and_uncertainty.py
"""

from padicspec import (
    NotHermiteError,
    PadicScalar,
    PrecisionContext,
    UMatrix,
    hermite_digits_matrix,
    jordan_decompose,
    spectrum_diameter,
    uncertainty_check,
)

ctx = PrecisionContext(3, 4)


def show(matrix):
    return [[e.residue() for e in row] for row in matrix.rows]


# A unipotent matrix is identity plus nilpotent; repeated cubing walks it
# back to the identity, which is the multiplicative part.
a = UMatrix.from_ints([[1, 1], [0, 1]], ctx)
pair = jordan_decompose(a, 4)
print("unipotent [[1,1],[0,1]]:")
print("  multiplicative part:", show(pair.semisimple))
print("  nilpotent part:", show(pair.nilpotent), f"(dies after {pair.steps_to_kill} step)")

# The same matrix has no digit expansion: the nilpotent residue blocks digit 1.
try:
    hermite_digits_matrix(a, 1)
except NotHermiteError as err:
    print("  digit expansion:", err.reason)

# An expandable operator has a spectrum; its diameter bounds commutators.
d = UMatrix.from_ints([[1, 0], [0, 80]], ctx)     # diag(1, -1)
swap = UMatrix.from_ints([[0, 1], [1, 0]], ctx)
print("\ndiam diag(1,-1) =", spectrum_diameter(d).diameter)
print("diam swap       =", spectrum_diameter(swap).diameter)

psi = (PadicScalar.one(ctx), PadicScalar.zero(ctx))
report = uncertainty_check(d, swap, psi)
print(f"|[A,B]psi| = {report.lhs_norm} <= diam(A)*diam(B) = {report.rhs_norm}:",
      report.holds)

# Scalar operators have zero diameter and commute with everything.
scalar_op = UMatrix.identity(2, ctx).scale(PadicScalar.from_int(7, ctx))
report = uncertainty_check(scalar_op, d, psi)
print("scalar operator: lhs", report.lhs_norm, "rhs", report.rhs_norm, "->", report.holds)
