#!/usr/bin/env python3
"""Creation/annihilation ladders on Mahler and Tate coefficient spaces.

Run: python demos/07_ladder_operators.py
"""

from padicspec import (
    MahlerVector,
    PrecisionContext,
    TateVector,
    commutator_defect,
    euler_operator,
    interior_basis,
    kochubei_lower,
    kochubei_raise,
    number_operator,
    tate_creation,
    tate_derivative,
    tate_raise,
)

ctx = PrecisionContext(3, 5)
M = 10


def coeffs(vec):
    return [c.residue() for c in vec.coeffs]


# The binomial-coefficient basis: raising sends P_n to (n+1) P_{n+1},
# lowering shifts coefficients down, their composition is diagonal.
p2 = MahlerVector.basis(2, M, ctx)
print("P_2 coefficients:", coeffs(p2))
print("raise P_2:", coeffs(kochubei_raise(p2)))
print("lower P_2:", coeffs(kochubei_lower(p2)))
print("number operator on P_2:", coeffs(number_operator(p2)))

# The eigenrelation holds for every basis slot below the truncation.
print("\nnumber-operator eigenvalues:",
      [number_operator(MahlerVector.basis(n, M, ctx)).coeffs[n].residue() for n in range(M)])

# Truncation loss is flagged, never silent.
top = MahlerVector.basis(M - 1, M, ctx)
print("raising the top slot flags truncation:", kochubei_raise(top).truncated)

# Interior commutators are exactly 1 for all three ladder pairs.
print("\n[lower, raise] - 1 on the interior:",
      commutator_defect(kochubei_raise, kochubei_lower, interior_basis(MahlerVector, M, ctx)))
print("[d/dX, X] - 1 on the interior:",
      commutator_defect(tate_raise, tate_derivative, interior_basis(TateVector, M, ctx)))

# Tate side: the degree operator is diagonal with eigenvalue k on X^k.
f = TateVector.from_ints([5, 1, 0, 2] + [0] * (M - 4), ctx)
print("\nEuler operator on 5 + X + 2X^3:", coeffs(euler_operator(f)))

# Creation operators are not unique: X + h(d/dX) works for any small h.
from padicspec import PadicScalar

h = [PadicScalar.from_int(2, ctx), PadicScalar.from_int(1, ctx)]
creation = tate_creation(h)
print("[d/dX, X + h(d/dX)] - 1 on the interior:",
      commutator_defect(creation, tate_derivative, interior_basis(TateVector, M, ctx)[: M - 3]))
