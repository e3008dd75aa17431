"""Shared generators and independent brute-force oracles for the tests.

The int-matrix helpers here deliberately avoid the package's residue
machinery so they can serve as independent cross-checks.
"""

from __future__ import annotations

import random

from padicspec import PadicScalar, PrecisionContext, UMatrix, is_gl_zp, teichmuller_lift
from padicspec.matrix import inverse


# -- independent integer-matrix arithmetic (oracle side) ----------------------


def int_matmul(a, b, q):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) % q for j in range(n)]
        for i in range(n)
    ]


def int_matpow(a, e, q):
    n = len(a)
    out = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    acc = [row[:] for row in a]
    while e:
        if e & 1:
            out = int_matmul(out, acc, q)
        acc = int_matmul(acc, acc, q)
        e >>= 1
    return out


def int_matvec(a, v, q):
    n = len(a)
    return [sum(a[i][k] * v[k] for k in range(n)) % q for i in range(n)]


def int_det(a):
    """Exact integer determinant by cofactor expansion (small n only)."""
    n = len(a)
    if n == 1:
        return a[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in a[1:]]
        total += (-1) ** j * a[0][j] * int_det(minor)
    return total


# -- random generators ----------------------------------------------------------


def rand_residue_matrix(ctx: PrecisionContext, n: int, rng: random.Random) -> UMatrix:
    return UMatrix.from_residues(
        [[rng.randrange(ctx.modulus) for _ in range(n)] for _ in range(n)], ctx
    )


def rand_gl(ctx: PrecisionContext, n: int, rng: random.Random) -> UMatrix:
    while True:
        candidate = rand_residue_matrix(ctx, n, rng)
        if is_gl_zp(candidate):
            return candidate


def diag_matrix(ctx: PrecisionContext, residues) -> UMatrix:
    n = len(residues)
    return UMatrix.from_residues(
        [[residues[i] if i == j else 0 for j in range(n)] for i in range(n)], ctx
    )


def conjugate(u: UMatrix, d: UMatrix) -> UMatrix:
    return u * d * inverse(u)


def rand_hermite(ctx: PrecisionContext, n: int, rng: random.Random, diag=None):
    """U diag U^-1 for random U in GL_n(Z_p); Hermite by construction."""
    residues = diag if diag is not None else [rng.randrange(ctx.modulus) for _ in range(n)]
    u = rand_gl(ctx, n, rng)
    return conjugate(u, diag_matrix(ctx, residues)), u, residues


def rand_teich_diag(ctx: PrecisionContext, n: int, rng: random.Random):
    return [teichmuller_lift(rng.randrange(ctx.p), ctx).residue() for _ in range(n)]


def rand_unit_norm_matrix(ctx: PrecisionContext, n: int, rng: random.Random) -> UMatrix:
    while True:
        candidate = rand_residue_matrix(ctx, n, rng)
        if candidate.valuation == 0:
            return candidate


def rand_poly_in(a: UMatrix, rng: random.Random, degree: int = 2) -> UMatrix:
    """Random integer polynomial of a matrix; commutes with it."""
    ctx = a.ctx
    acc = UMatrix.identity(a.n, ctx).scale(PadicScalar.from_int(rng.randrange(ctx.modulus), ctx))
    power = a
    for _ in range(degree):
        coeff = PadicScalar.from_int(rng.randrange(ctx.modulus), ctx)
        acc = acc + power.scale(coeff)
        power = power * a
    return acc


def residues_of(a: UMatrix):
    return [[e.residue() for e in row] for row in a.rows]
