"""Square matrices over p-adic scalars with the sup norm.

The norm of a matrix is the maximum of the entry norms.  It is
submultiplicative and ultrametric, and the unit group of the integral
matrices under it is GL_n(Z_p): integral entries plus unit determinant,
equivalently an invertible reduction mod p.  Columns of such matrices
are exactly the orthonormal bases of Q_p^n, and idempotents of norm 1
are exactly the orthogonal projections.

Entries are PadicScalar or ExtScalar; the two cases are tagged "base"
and "ext".  Window computations (everything that only matters mod p^m)
run on plain residue representatives for speed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .padic import INFINITE, PadicScalar, PrecisionContext
from .unramified import ExtRing, ExtScalar

Scalar = Union[PadicScalar, ExtScalar]


@dataclass(frozen=True)
class UMatrix:
    """Immutable n x n matrix over one scalar ring."""

    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square and nonempty")
        first = self.rows[0][0]
        for row in self.rows:
            for entry in row:
                if type(entry) is not type(first):
                    raise ValueError("mixed entry types in matrix")

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_scalars(cls, rows: Sequence[Sequence[Scalar]]) -> "UMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_ints(cls, rows: Sequence[Sequence[int]], ctx: PrecisionContext) -> "UMatrix":
        return cls(
            tuple(tuple(PadicScalar.from_int(v, ctx) for v in row) for row in rows)
        )

    @classmethod
    def from_residues(cls, rows: Sequence[Sequence[int]], ctx: PrecisionContext) -> "UMatrix":
        return cls(
            tuple(tuple(PadicScalar.from_residue(v, ctx) for v in row) for row in rows)
        )

    @classmethod
    def from_ext_vectors(cls, rows: Sequence[Sequence[tuple]], ring: ExtRing) -> "UMatrix":
        return cls(
            tuple(tuple(ExtScalar.from_vector(ring, v) for v in row) for row in rows)
        )

    @classmethod
    def identity(cls, n: int, ctx: PrecisionContext) -> "UMatrix":
        one, zero = PadicScalar.one(ctx), PadicScalar.zero(ctx)
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int, ctx: PrecisionContext) -> "UMatrix":
        zero = PadicScalar.zero(ctx)
        return cls(tuple((zero,) * n for _ in range(n)))

    # -- structure -------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def ring_tag(self) -> str:
        return "ext" if isinstance(self.rows[0][0], ExtScalar) else "base"

    @property
    def ext_ring(self) -> Optional[ExtRing]:
        entry = self.rows[0][0]
        return entry.ring if isinstance(entry, ExtScalar) else None

    @property
    def ctx(self) -> PrecisionContext:
        return self.rows[0][0].ctx

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    @property
    def valuation(self):
        """Minimum entry valuation; +inf for the zero matrix."""
        return min((e.valuation for row in self.rows for e in row), default=INFINITE)

    @property
    def norm(self) -> float:
        v = self.valuation
        if v == INFINITE:
            return 0.0
        return float(self.ctx.p) ** (-v)

    @property
    def is_integral(self) -> bool:
        return self.valuation >= 0

    def residues(self) -> tuple:
        """Entry representatives mod p^m (ints for base, vectors for ext)."""
        if not self.is_integral:
            raise ValueError("matrix has norm > 1, no residues mod p^m")
        if self.ring_tag == "base":
            return tuple(tuple(e.residue() for e in row) for row in self.rows)
        return tuple(tuple(e.vector() for e in row) for row in self.rows)

    def congruent(self, other: "UMatrix") -> bool:
        """Entrywise equality mod p^m."""
        return self.residues() == other.residues()

    def is_zero_mod_precision(self) -> bool:
        key = self.residues()
        return all(_entry_is_zero(e) for row in key for e in row)

    # -- arithmetic --------------------------------------------------------

    def _scalar_zero(self) -> Scalar:
        e = self.rows[0][0]
        if isinstance(e, ExtScalar):
            return e.ring.zero()
        return PadicScalar.zero(self.ctx)

    def __add__(self, other: "UMatrix") -> "UMatrix":
        self._check(other)
        return UMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: "UMatrix") -> "UMatrix":
        self._check(other)
        return UMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __neg__(self) -> "UMatrix":
        return UMatrix(tuple(tuple(-a for a in row) for row in self.rows))

    def __mul__(self, other: "UMatrix") -> "UMatrix":
        self._check(other)
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self._scalar_zero()
                for a, b in zip(self.rows[i], cols[j]):
                    acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return UMatrix(tuple(out))

    def scale(self, c: Scalar) -> "UMatrix":
        return UMatrix(tuple(tuple(c * a for a in row) for row in self.rows))

    def shift(self, k: int) -> "UMatrix":
        """Multiply by p^k (base matrices only; exact valuation shift)."""
        if self.ring_tag != "base":
            raise ValueError("shift is defined for base matrices")
        return UMatrix(tuple(tuple(a.shift(k) for a in row) for row in self.rows))

    def apply(self, vector: Sequence[Scalar]) -> tuple:
        if len(vector) != self.n:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.rows:
            acc = self._scalar_zero()
            for a, v in zip(row, vector):
                acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def _check(self, other: "UMatrix"):
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        if self.ring_tag != other.ring_tag or self.ctx != other.ctx:
            raise ValueError("mixed matrix rings")

    def promote(self, ring: ExtRing) -> "UMatrix":
        """Embed a base matrix into an extension ring (constant coordinates)."""
        if self.ring_tag == "ext":
            if self.ext_ring != ring:
                raise ValueError("matrix already lives in a different extension ring")
            return self
        return UMatrix(tuple(tuple(ring.embed(a) for a in row) for row in self.rows))

    # -- window operations (mod p^m) ----------------------------------------

    def _ring_ops(self):
        if self.ring_tag == "base":
            return _BaseOps(self.ctx.modulus, self.ctx.p)
        return _ExtOps(self.ext_ring)

    def window_pow(self, exponent: int) -> "UMatrix":
        """Matrix power computed on residues mod p^m; needs |A| <= 1."""
        ops = self._ring_ops()
        power = _res_matpow(self.residues(), exponent, ops)
        return _wrap_residues(power, self)

    def sigma_window(self, period: int = 1) -> "UMatrix":
        """The p-power map A -> A^(p^period) in the window."""
        return self.window_pow(self.ctx.p**period)

    def residue_key(self) -> tuple:
        return self.residues()

    def __repr__(self):
        return f"UMatrix(n={self.n}, ring={self.ring_tag}, p={self.ctx.p}, m={self.ctx.m})"


def _entry_is_zero(e) -> bool:
    if isinstance(e, int):
        return e == 0
    return all(c == 0 for c in e)


class _BaseOps:
    """Residue arithmetic mod p^m on int entries."""

    def __init__(self, q: int, p: int):
        self.q = q
        self.p = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def mul(self, a, b):
        return (a * b) % self.q

    def neg(self, a):
        return (-a) % self.q

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a % self.p != 0

    def inv_unit(self, a):
        return pow(a, -1, self.q)


class _ExtOps:
    """Residue arithmetic on coordinate-vector entries."""

    def __init__(self, ring: ExtRing):
        self.ring = ring
        self.p = ring.ctx.p
        self.zero = ring.zero_vec()
        self.one = ring.one_vec()

    def add(self, a, b):
        return self.ring.vec_add(a, b)

    def sub(self, a, b):
        return self.ring.vec_sub(a, b)

    def mul(self, a, b):
        return self.ring.vec_mul(a, b)

    def neg(self, a):
        return self.ring.vec_neg(a)

    def is_zero(self, a):
        return not any(a)

    def is_unit(self, a):
        return not self.ring.reduce_vec(a).is_zero

    def inv_unit(self, a):
        return self.ring.vec_inverse(a)


def residue_ops(ring_tag: str, ctx: PrecisionContext, ring: Optional[ExtRing] = None):
    """Entry arithmetic for residue matrices of the given ring at ctx."""
    if ring_tag == "base":
        return _BaseOps(ctx.modulus, ctx.p)
    return _ExtOps(ring)


def _res_matmul(a: tuple, b: tuple, ops) -> tuple:
    n = len(a)
    bcols = list(zip(*b))
    out = []
    for i in range(n):
        row = []
        arow = a[i]
        for j in range(n):
            acc = ops.zero
            for x, y in zip(arow, bcols[j]):
                acc = ops.add(acc, ops.mul(x, y))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _res_identity(n: int, ops) -> tuple:
    return tuple(tuple(ops.one if i == j else ops.zero for j in range(n)) for i in range(n))


def _res_matpow(a: tuple, exponent: int, ops) -> tuple:
    result = _res_identity(len(a), ops)
    acc = a
    e = exponent
    while e:
        if e & 1:
            result = _res_matmul(result, acc, ops)
        acc = _res_matmul(acc, acc, ops)
        e >>= 1
    return result


def _wrap_residues(rows: tuple, like: UMatrix) -> UMatrix:
    if like.ring_tag == "base":
        return UMatrix.from_residues(rows, like.ctx)
    return UMatrix.from_ext_vectors(rows, like.ext_ring)


# -- GL_n(Z_p) and orthogonality -------------------------------------------


def _reduction_det_nonzero(a: UMatrix) -> bool:
    if a.ring_tag == "ext":
        from .finite_field import fq_matrix_det
        from .unramified import reduce_mod_p

        return not fq_matrix_det(reduce_mod_p(a)).is_zero
    p = a.ctx.p
    work = [[e.residue() % p for e in row] for row in a.rows]
    n = a.n
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] % p != 0), None)
        if pivot is None:
            return False
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
        inv = pow(work[col][col], -1, p)
        for r in range(col + 1, n):
            factor = (work[r][col] * inv) % p
            if factor:
                for c in range(col, n):
                    work[r][c] = (work[r][c] - factor * work[col][c]) % p
    return True


def is_gl_zp(u: UMatrix) -> bool:
    """Membership in GL_n(Z_p): integral entries and unit determinant.

    Unit determinant is equivalent to an invertible reduction mod p, which
    is what gets tested.
    """
    return u.is_integral and _reduction_det_nonzero(u)


def determinant(a: UMatrix) -> Scalar:
    """Exact determinant (fraction-free on representatives).

    Base matrices factor out the global valuation and run Bareiss
    elimination over the integers; a result whose window image vanishes
    is reported as zero at precision.  Extension matrices use the
    division-free expansion on residue vectors.
    """
    n = a.n
    if a.ring_tag == "ext":
        vec = _berkowitz_det(a.residues(), _ExtOps(a.ext_ring))
        return ExtScalar.from_vector(a.ext_ring, vec)
    k = a.valuation
    if k == INFINITE:
        return PadicScalar.zero(a.ctx)
    work = a if k >= 0 else a.shift(-k)
    det_int = _bareiss_det([[e.residue() for e in row] for row in work.rows])
    det = PadicScalar.from_residue(det_int, a.ctx)
    return det if k >= 0 else det.shift(n * k)


def _bareiss_det(rows: list) -> int:
    n = len(rows)
    m = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _berkowitz_det(rows: tuple, ops) -> object:
    """Division-free determinant via iterated Samuelson-Berkowitz vectors."""
    n = len(rows)
    polys = [(ops.one,)]  # char poly of the empty matrix
    for size in range(1, n + 1):
        sub = [row[:size] for row in rows[:size]]
        a = sub[size - 1][size - 1]
        col = [sub[i][size - 1] for i in range(size - 1)]
        rowv = [sub[size - 1][j] for j in range(size - 1)]
        block = [row[: size - 1] for row in sub[: size - 1]]
        # Toeplitz coefficients: 1, -a, -(row col), -(row block col), ...
        coeffs = [ops.one, ops.neg(a)]
        cur = col
        for _ in range(size - 1):
            dot = ops.zero
            for x, y in zip(rowv, cur):
                dot = ops.add(dot, ops.mul(x, y))
            coeffs.append(ops.neg(dot))
            cur = [_dotrow(block[i], cur, ops) for i in range(size - 1)]
        prev = polys[-1]
        new = [ops.zero] * (size + 1)
        for i, c in enumerate(coeffs):
            for j, pcoef in enumerate(prev):
                if i + j <= size:
                    new[i + j] = ops.add(new[i + j], ops.mul(c, pcoef))
        polys.append(tuple(new))
    const = polys[-1][n]
    return const if n % 2 == 0 else ops.neg(const)


def _dotrow(row, vec, ops):
    acc = ops.zero
    for x, y in zip(row, vec):
        acc = ops.add(acc, ops.mul(x, y))
    return acc


def inverse(u: UMatrix) -> UMatrix:
    """Inverse of a GL_n member; anything without unit determinant is refused."""
    if not is_gl_zp(u):
        raise ValueError("matrix is not in GL_n (unit determinant required)")
    n = u.n
    ops = u._ring_ops()
    work = [
        list(row) + list(ident_row)
        for row, ident_row in zip(u.residues(), _res_identity(n, ops))
    ]
    for col in range(n):
        pivot = next(r for r in range(col, n) if ops.is_unit(work[r][col]))
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
        scale = ops.inv_unit(work[col][col])
        work[col] = [ops.mul(scale, x) for x in work[col]]
        for r in range(n):
            if r == col:
                continue
            factor = work[r][col]
            if ops.is_zero(factor):
                continue
            nf = ops.neg(factor)
            work[r] = [ops.add(x, ops.mul(nf, y)) for x, y in zip(work[r], work[col])]
    rows = tuple(tuple(work[i][n:]) for i in range(n))
    return _wrap_residues(rows, u)


# -- vectors -----------------------------------------------------------------


def vector_valuation(vector: Sequence[Scalar]):
    return min((v.valuation for v in vector), default=INFINITE)


def vector_norm(vector: Sequence[Scalar], ctx: PrecisionContext) -> float:
    v = vector_valuation(vector)
    if v == INFINITE:
        return 0.0
    return float(ctx.p) ** (-v)


def sample_vector(
    ctx: PrecisionContext,
    n: int,
    rng: random.Random,
    unit_norm: bool = False,
    ring: Optional[ExtRing] = None,
) -> tuple:
    """Random vector with entry valuations spanning 0..m-1.

    With unit_norm=True, resample until some coordinate is a unit, so the
    sup norm is exactly 1.  Passing an extension ring draws the entries
    there instead (integral coordinates).
    """
    while True:
        entries = []
        for _ in range(n):
            v = rng.randrange(ctx.m + 1)
            if v >= ctx.m:
                entries.append(ring.zero() if ring else PadicScalar.zero(ctx))
            elif ring is not None:
                coords = [rng.randrange(ctx.modulus) for _ in range(ring.degree)]
                while all(c % ctx.p == 0 for c in coords):
                    coords = [rng.randrange(ctx.modulus) for _ in range(ring.degree)]
                scale = ctx.p**v
                entries.append(ring.element([c * scale for c in coords]))
            else:
                unit = rng.randrange(1, ctx.modulus)
                while unit % ctx.p == 0:
                    unit = rng.randrange(1, ctx.modulus)
                entries.append(PadicScalar(ctx, v, unit))
        if not unit_norm or vector_valuation(entries) == 0:
            return tuple(entries)


def sample_unit_vector(ctx: PrecisionContext, n: int, rng: random.Random) -> tuple:
    """Coordinates drawn uniformly mod p^m, rejected unless the sup norm is 1."""
    while True:
        entries = tuple(
            PadicScalar.from_residue(rng.randrange(ctx.modulus), ctx) for _ in range(n)
        )
        if vector_valuation(entries) == 0:
            return entries


# -- orthogonal projection certification --------------------------------------


@dataclass(frozen=True)
class ProjectionCertificate:
    """Evidence that an idempotent is (or is not) an orthogonal projection.

    A valid certificate asserts: the idempotency defect vanishes mod p^m,
    |pi| = 1, the sampled decomposition identity |x| = max(|pi x|,
    |(1-pi) x|) held on every sample, and the reduction mod p is a
    projection.
    """

    idempotency_defect: float
    norm_of_pi: float
    max_decomposition_checked: bool
    samples: int
    unit_ball_stable: bool
    reduction_idempotent: bool
    valid: bool
    failures: tuple


def certify_orthogonal_projection(
    pi: UMatrix, samples: int = 32, seed: int = 0
) -> ProjectionCertificate:
    """Check the equivalent orthogonality conditions on a projection.

    Conditions evaluated: operator norm 1; unit-ball stability and the
    norm-decomposition identity on seeded random vectors spanning all
    valuation strata (plus the standard basis); idempotency of the
    reduction mod p.  For a nonzero idempotent these agree, and any
    disagreement at precision is reported through the failure list.
    """
    ctx = pi.ctx
    n = pi.n
    failures = []

    defect_matrix = pi * pi - pi
    defect = defect_matrix.norm
    # Idempotency is judged modulo the window that pi^2 can resolve:
    # p^m for integral pi, shifted by twice the valuation floor otherwise.
    pi_val = pi.valuation
    floor = 2 * min(0, int(pi_val)) if pi_val != INFINITE else 0
    if defect_matrix.valuation < ctx.m + floor:
        failures.append("idempotency")

    norm_of_pi = pi.norm
    if norm_of_pi != 1.0:
        failures.append("norm_not_one")

    rng = random.Random(seed)
    ring = pi.ext_ring
    ident = UMatrix.identity(n, ctx) if ring is None else UMatrix.identity(n, ctx).promote(ring)
    one = PadicScalar.one(ctx) if ring is None else ring.one()
    zero = PadicScalar.zero(ctx) if ring is None else ring.zero()
    complement = ident - pi
    decomposition_ok = True
    ball_stable = True
    checked = 0
    basis = [tuple(one if i == j else zero for j in range(n)) for i in range(n)]
    vectors = basis + [
        sample_vector(ctx, n, rng, ring=ring) for _ in range(max(0, samples - n))
    ]
    for x in vectors:
        vx = vector_valuation(x)
        v_proj = vector_valuation(pi.apply(x))
        v_comp = vector_valuation(complement.apply(x))
        if min(v_proj, v_comp) != vx:
            decomposition_ok = False
        if vx >= 0 and v_proj < 0:
            ball_stable = False
        checked += 1
    if not decomposition_ok:
        failures.append("norm_decomposition")
    if not ball_stable:
        failures.append("unit_ball")

    reduction_ok = pi.is_integral
    if reduction_ok and ring is None:
        p = ctx.p
        red = [[e.residue() % p for e in row] for row in pi.rows]
        sq = [
            [sum(red[i][k] * red[k][j] for k in range(n)) % p for j in range(n)]
            for i in range(n)
        ]
        reduction_ok = sq == red
    elif reduction_ok:
        red = [[e.reduction() for e in row] for row in pi.rows]
        field = ring.residue_field
        for i in range(n):
            for j in range(n):
                acc = field.zero()
                for k in range(n):
                    acc = acc + red[i][k] * red[k][j]
                if acc != red[i][j]:
                    reduction_ok = False
    if not reduction_ok:
        failures.append("reduction_idempotent")

    return ProjectionCertificate(
        idempotency_defect=defect,
        norm_of_pi=norm_of_pi,
        max_decomposition_checked=decomposition_ok,
        samples=checked,
        unit_ball_stable=ball_stable,
        reduction_idempotent=reduction_ok,
        valid=not failures,
        failures=tuple(failures),
    )


def is_orthonormal_columns(u: UMatrix, samples: int = 16, seed: int = 0) -> bool:
    """Whether the columns form an orthonormal system for the sup norm.

    Equivalent to GL_n membership; the norm identity
    |sum c_i col_i| = max |c_i| is additionally spot-checked on seeded
    random coefficient vectors, including coefficients of norm > 1.
    """
    if not is_gl_zp(u):
        return False
    ctx = u.ctx
    ring = u.ext_ring
    rng = random.Random(seed)
    for _ in range(samples):
        if ring is not None:
            # extension scalars model the integers of K, so the sampled
            # coefficients stay integral there
            coeffs = sample_vector(ctx, u.n, rng, ring=ring)
        else:
            coeffs = []
            for _ in range(u.n):
                v = rng.randrange(-2, ctx.m)
                unit = rng.randrange(1, ctx.modulus)
                while unit % ctx.p == 0:
                    unit = rng.randrange(1, ctx.modulus)
                if rng.random() < 0.15:
                    coeffs.append(PadicScalar.zero(ctx))
                else:
                    coeffs.append(PadicScalar(ctx, v, unit))
        combo = u.apply(tuple(coeffs))
        if vector_valuation(combo) != vector_valuation(coeffs):
            return False
    return True
