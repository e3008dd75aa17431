#!/usr/bin/env python3
"""A tour of exact p-adic scalars: norms, multiplicative lifts, digits, orbits.

Run: python demos/01_scalars_and_lifts.py
"""

from padicspec import (
    PadicScalar,
    PrecisionContext,
    classify_orbit,
    frobenius_step,
    scalar_from_rational,
    teichmuller_digits,
    teichmuller_lift,
)

# Work in Q_3 with 4 significant base-3 digits.
ctx = PrecisionContext(3, 4)

# Rationals embed exactly as long as their digits fit the window.
half = scalar_from_rational(1, 2, ctx)
print("1/2 in Z_3 at precision 4:", half)            # unit 41, since 2*41 = 1 mod 81
print("1/2 + 1/2 =", half + half)                    # back to 1
print("|1/9| =", scalar_from_rational(1, 9, ctx).norm)  # norm 9.0: outside Z_3

# The p-power map contracts the unit ball; iterating it lands on the
# multiplicative lift of the starting residue.
ctx5 = PrecisionContext(5, 3)
x = PadicScalar.from_int(2, ctx5)
print("\nsigma-orbit of 2 in Z/125:", end=" ")
y = x
for _ in range(4):
    print(y.residue(), end=" -> ")
    y = frobenius_step(y)
print(y.residue())
omega = teichmuller_lift(2, ctx5)
print("multiplicative lift of 2:", omega.residue(), "(fixed:", (omega**5).residue(), ")")

# Every scalar peels into digits that are themselves fixed points.
digits = teichmuller_digits(x)
print("\ndigit expansion of 2:", [d.residue() for d in digits.digits])
print("reassembled:", digits.reassemble().residue())

# Orbit classification at precision: periodic, quasi-periodic, nilpotent.
print("\norbit of 7 mod 25:", classify_orbit(PadicScalar.from_int(7, PrecisionContext(5, 2)), 3).kind.value)
print("orbit of 2 mod 25:", classify_orbit(PadicScalar.from_int(2, PrecisionContext(5, 2)), 3).kind.value)
print("orbit of 5 mod 25:", classify_orbit(PadicScalar.from_int(5, PrecisionContext(5, 2)), 3).kind.value)
