#!/usr/bin/env python3
"""GL_n(Z_p), orthonormal columns, and certified orthogonal projections.

Run: python demos/03_orthogonal_projections.py
"""

from padicspec import (
    PrecisionContext,
    UMatrix,
    certify_orthogonal_projection,
    determinant,
    is_gl_zp,
    is_orthonormal_columns,
    lift_idempotent,
    scalar_from_rational,
)

ctx = PrecisionContext(3, 4)

# GL_n(Z_p) membership is integrality plus a unit determinant.
u = UMatrix.from_ints([[3, 1], [1, 0]], ctx)
print("det [[3,1],[1,0]] =", determinant(u), "| in GL_2(Z_3):", is_gl_zp(u))
not_gl = UMatrix.from_ints([[3, 0], [0, 1]], ctx)
print("det [[3,0],[0,1]] =", determinant(not_gl), "| in GL_2(Z_3):", is_gl_zp(not_gl))

# Columns of GL members are exactly the orthonormal systems for the sup norm.
print("orthonormal columns of [[1,1],[0,1]]:", is_orthonormal_columns(UMatrix.from_ints([[1, 1], [0, 1]], ctx)))

# An orthogonal projection: norm 1, idempotent, idempotent reduction.
swap = UMatrix.from_ints([[0, 1], [1, 0]], ctx)
pi = (UMatrix.identity(2, ctx) + swap).scale(scalar_from_rational(1, 2, ctx))
cert = certify_orthogonal_projection(pi, samples=16)
print("\naveraged swap projection (I + s)/2:")
print("  norm:", cert.norm_of_pi, "| defect:", cert.idempotency_defect,
      "| decomposition identity held:", cert.max_decomposition_checked,
      "| valid:", cert.valid)

# A defective candidate is reported with the failing condition.
broken = UMatrix.from_ints([[1, 3], [1, 0]], ctx)
print("broken candidate ->", certify_orthogonal_projection(broken, samples=8).failures)

# An idempotent mod p lifts to a unique exact idempotent fixed by the
# p-power map (unique within anything that commutes with it).
rep = UMatrix.from_ints([[1, 3], [0, 0]], ctx)  # diag(1,0) + 3*E12
pi = lift_idempotent(rep)
print("\nlift of diag(1,0) + 3*E12:", [[e.residue() for e in row] for row in pi.rows])
print("exactly idempotent:", (pi * pi).congruent(pi), "| sigma-fixed:", pi.sigma_window().congruent(pi))
