"""Spectral decomposition of operators through the p-power map.

An operator in the unit ball whose sigma^N-orbit is stationary mod p^m
splits against the p^N fixed points of sigma^N: each point gets a
Lagrange projector, nonzero projectors are orthogonal, and the operator
is the projector-weighted sum of the points.  Operators whose digit
expansion consists of such fixed points (one per power of p) carry a
finitely additive projector-valued measure on the balls of Z_p, indexed
by digit paths; integrating the ball centers against it reconstructs the
operator to the resolved depth.

The same machinery yields the canonical splitting A = A_s + A_n into a
multiplicative part and a topologically nilpotent part, the spectrum
diameter, and the commutator inequality
|[A, B] psi| <= diam(A) * diam(B) for unit psi.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .finite_field import ENUMERATION_LIMIT
from .matrix import (
    UMatrix,
    _res_matmul,
    _res_matpow,
    _wrap_residues,
    residue_ops,
    vector_valuation,
)
from .padic import INFINITE, PadicScalar, PrecisionContext, teichmuller_points
from .unramified import ExtScalar, ext_ring, sigma_fixed_points


class NotHermiteError(Exception):
    """Digit peeling met a residue that is not divisible by p.

    stage is the index of the digit that failed to materialise;
    defect_norm is the sup norm of the obstruction.
    """

    def __init__(self, stage: int, defect_norm: float, reason: str):
        super().__init__(reason)
        self.stage = stage
        self.defect_norm = defect_norm
        self.reason = reason


class PeriodExceededError(Exception):
    """No period up to the requested bound stabilised within the budget."""

    def __init__(self, period_bound: int, budget: int):
        super().__init__(
            f"sigma-iterates found no period <= {period_bound} within {budget} steps"
        )
        self.period_bound = period_bound
        self.budget = budget


# -- residue-level sigma machinery -------------------------------------------


def _res_sub(a: tuple, b: tuple, ops) -> tuple:
    return tuple(tuple(ops.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _vanishes_mod_p(rows: tuple, p: int) -> bool:
    for row in rows:
        for e in row:
            if isinstance(e, int):
                if e % p:
                    return False
            elif any(c % p for c in e):
                return False
    return True


def _rows_are_zero(rows: tuple) -> bool:
    for row in rows:
        for e in row:
            if isinstance(e, int):
                if e:
                    return False
            elif any(e):
                return False
    return True


def _div_p(rows: tuple, p: int) -> tuple:
    out = []
    for row in rows:
        new = []
        for e in row:
            if isinstance(e, int):
                new.append(e // p)
            else:
                new.append(tuple(c // p for c in e))
        out.append(tuple(new))
    return tuple(out)


def _sigma_limit(rows: tuple, period: int, ctx: PrecisionContext, ops, budget: int):
    """Stationary point of y -> y^(p^period) mod p^m, or None on a cycle."""
    exponent = ctx.p**period
    seen = {rows}
    cur = rows
    for _ in range(budget):
        nxt = _res_matpow(cur, exponent, ops)
        if nxt == cur:
            return cur
        if nxt in seen:
            return None
        seen.add(nxt)
        cur = nxt
    return None


def _matrix_ops(a: UMatrix):
    return a._ring_ops()


# -- unique idempotent lifting -------------------------------------------------


def lift_idempotent(a: UMatrix) -> UMatrix:
    """Lift an idempotent mod p to the exact idempotent fixed by sigma.

    The sigma-iterates of any representative stabilise mod p^m; the limit
    is idempotent, congruent to the input mod p, and independent of the
    representative within the commutative algebra the input generates
    (perturbing by p times anything that commutes gives the same limit).
    """
    if not a.is_integral:
        raise ValueError("lift_idempotent requires |a| <= 1")
    ctx = a.ctx
    ops = _matrix_ops(a)
    rows = a.residues()
    defect = _res_sub(_res_matmul(rows, rows, ops), rows, ops)
    if not _vanishes_mod_p(defect, ctx.p):
        raise ValueError("input is not idempotent mod p")
    limit = _sigma_limit(rows, 1, ctx, ops, ctx.budget())
    if limit is None:
        raise RuntimeError("idempotent lift failed to stabilise (internal defect)")
    pi = _wrap_residues(limit, a)
    sq = _res_matmul(limit, limit, ops)
    if sq != limit:
        raise RuntimeError("sigma limit of an idempotent is not idempotent (internal defect)")
    if not _vanishes_mod_p(_res_sub(limit, rows, ops), ctx.p):
        raise RuntimeError("idempotent lift changed the reduction (internal defect)")
    return pi


# -- Lagrange spectral decomposition -------------------------------------------


@dataclass(frozen=True)
class SpectralDecomposition:
    """Resolution of a sigma^N-fixed operator against the period-N points.

    points holds (eigenvalue, projector) pairs for the nonzero projectors
    only.  The four defining identities (projectors sum to 1, weighted
    sum reproduces the operator, idempotency, pairwise orthogonality) are
    verified mod p^m at construction; residual_identity_defect records
    the sup norm of sum(projectors) - 1 and is 0.0 for every emitted
    decomposition.
    """

    period: int
    points: tuple
    residual_identity_defect: float

    @property
    def eigenvalues(self) -> tuple:
        return tuple(lam for lam, _ in self.points)

    @property
    def projectors(self) -> tuple:
        return tuple(proj for _, proj in self.points)


def _spectral_points(x: UMatrix, period: int):
    """Candidate eigenvalues and the ambient matrix for the Lagrange product.

    The ambient ring must contain all p^N fixed points of sigma^N, so a
    base matrix is promoted to the degree-N extension, and an extension
    matrix requires N to divide its ring degree.
    """
    ctx = x.ctx
    if period == 1 and x.ring_tag == "base":
        return teichmuller_points(ctx), x
    if x.ring_tag == "base":
        ring = ext_ring(ctx.p, period, ctx.m)
        return sigma_fixed_points(ctx.p, period, period, ctx.m), x.promote(ring)
    ring = x.ext_ring
    if ring.degree % period != 0:
        raise ValueError(
            f"period {period} does not divide the extension degree {ring.degree}"
        )
    return sigma_fixed_points(ctx.p, ring.degree, period, ctx.m), x


def teichmuller_spectral(x: UMatrix, period: int = 1) -> SpectralDecomposition:
    """Lagrange resolution of a sigma^N-fixed matrix over the period-N points.

    Each projector is the product of (x - mu)/(lambda - mu) over the other
    candidate points mu; the denominators are units because distinct
    fixed points have distinct reductions, and this is asserted at
    runtime.  Zero projectors are dropped.
    """
    ctx = x.ctx
    if not x.is_integral:
        raise ValueError("teichmuller_spectral requires |x| <= 1")
    if ctx.p**period > ENUMERATION_LIMIT:
        raise ValueError("p^N exceeds the enumeration bound")
    image = x.sigma_window(period)
    if not image.congruent(x):
        defect = (image - x).norm
        raise ValueError(
            f"input is not fixed by sigma^{period} mod p^m (defect norm {defect})"
        )
    points, ambient = _spectral_points(x, period)
    n = ambient.n
    ops = _matrix_ops(ambient)
    rows = ambient.residues()
    if ambient.ring_tag == "base":
        lam_res = [pt.residue() for pt in points]
    else:
        lam_res = [pt.vector() for pt in points]
    kept = []
    for k, lam in enumerate(lam_res):
        numerator = None
        denominator = ops.one
        for j, mu in enumerate(lam_res):
            if j == k:
                continue
            shifted = tuple(
                tuple(
                    ops.sub(e, mu) if r == c else e for c, e in enumerate(row)
                )
                for r, row in enumerate(rows)
            )
            numerator = shifted if numerator is None else _res_matmul(numerator, shifted, ops)
            denominator = ops.mul(denominator, ops.sub(lam, mu))
        if not ops.is_unit(denominator):
            raise RuntimeError("Lagrange denominator is not a unit (internal defect)")
        inv = ops.inv_unit(denominator)
        projector = tuple(tuple(ops.mul(inv, e) for e in row) for row in numerator)
        if any(not ops.is_zero(e) for row in projector for e in row):
            kept.append((points[k], projector))
    _verify_decomposition(rows, kept, lam_res, points, ops, n)
    wrapped = tuple((lam, _wrap_residues(proj, ambient)) for lam, proj in kept)
    return SpectralDecomposition(period, wrapped, 0.0)


def _verify_decomposition(rows, kept, lam_res, points, ops, n):
    from .matrix import _res_identity

    ident = _res_identity(n, ops)
    total = None
    weighted = None
    lam_by_point = {id(pt): res for pt, res in zip(points, lam_res)}
    for lam_pt, proj in kept:
        if not any(ops.is_unit(e) for row in proj for e in row):
            raise RuntimeError("nonzero projector has norm != 1 (internal defect)")
        if _res_matmul(proj, proj, ops) != proj:
            raise RuntimeError("projector is not idempotent (internal defect)")
        total = proj if total is None else _res_add(total, proj, ops)
        lam = lam_by_point[id(lam_pt)]
        term = tuple(tuple(ops.mul(lam, e) for e in row) for row in proj)
        weighted = term if weighted is None else _res_add(weighted, term, ops)
    if total != ident:
        raise RuntimeError("projectors do not sum to 1 (internal defect)")
    if weighted != rows:
        raise RuntimeError("weighted projectors do not reproduce x (internal defect)")
    for i in range(len(kept)):
        for j in range(len(kept)):
            if i == j:
                continue
            product = _res_matmul(kept[i][1], kept[j][1], ops)
            if any(not ops.is_zero(e) for row in product for e in row):
                raise RuntimeError("projectors are not pairwise orthogonal (internal defect)")


def _res_add(a: tuple, b: tuple, ops) -> tuple:
    return tuple(tuple(ops.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


# -- digit expansion -------------------------------------------------------------


@dataclass(frozen=True)
class HermiteDigitsMatrix:
    """Digit expansion A = sum_i x_i p^(k+i) with sigma^N-fixed commuting digits."""

    lead_valuation: int
    digits: tuple
    period: int

    @property
    def ctx(self) -> PrecisionContext:
        return self.digits[0].ctx

    def reassemble(self) -> UMatrix:
        acc = None
        for i, digit in enumerate(self.digits):
            if digit.ring_tag == "base":
                term = digit.shift(self.lead_valuation + i)
            else:
                ring = digit.ext_ring
                term = digit.scale(ring.embed(pow(digit.ctx.p, self.lead_valuation + i)))
            acc = term if acc is None else acc + term
        return acc


def hermite_digits_matrix(a: UMatrix, period: int = 1) -> HermiteDigitsMatrix:
    """Decide the digit expansion of an operator, digit by digit.

    The valuation is factored out first.  At stage i the sigma^N-limit of
    the current tail is the candidate digit; the remainder must vanish
    mod p so the next digit can be formed.  A remainder with a unit entry
    is a topologically nilpotent obstruction and is reported through
    NotHermiteError with the index of the digit that could not be formed;
    a tail whose sigma^N-orbit cycles without stabilising fails at the
    current digit.

    Each division by p consumes one digit of accuracy, so the peeling
    runs at doubled internal precision on the canonical representatives
    and reduces the digits back to precision m; this keeps every emitted
    digit exact mod p^m and the digits pairwise commuting mod p^m.
    """
    ctx = a.ctx
    k = a.valuation
    if k == INFINITE:
        zero = UMatrix.zeros(a.n, ctx) if a.ring_tag == "base" else a
        return HermiteDigitsMatrix(0, (zero,) * ctx.m, period)
    if a.ring_tag == "base" and k != 0:
        work = a.shift(-k)
    elif a.ring_tag == "ext" and k > 0:
        work = _wrap_residues(_div_p_k(a.residues(), ctx.p, k), a)
    else:
        work = a
    ctx_hi = PrecisionContext(ctx.p, 2 * ctx.m)
    if work.ring_tag == "base":
        ops_hi = residue_ops("base", ctx_hi)
    else:
        ops_hi = residue_ops("ext", ctx_hi, ext_ring(ctx.p, work.ext_ring.degree, ctx_hi.m))
    budget = ctx_hi.budget(period)
    rows = work.residues()
    digits = []
    for i in range(ctx.m):
        limit = _sigma_limit(rows, period, ctx_hi, ops_hi, budget)
        if limit is None:
            raise NotHermiteError(
                stage=i,
                defect_norm=1.0,
                reason=f"sigma^{period} orbit of digit {i} does not stabilise",
            )
        tail = _res_sub(rows, limit, ops_hi)
        if not _vanishes_mod_p(tail, ctx.p):
            raise NotHermiteError(
                stage=i + 1,
                defect_norm=1.0,
                reason=f"nilpotent residue at digit {i + 1}",
            )
        digits.append(_wrap_residues(_reduce_rows(limit, ctx.modulus), work))
        rows = _div_p(tail, ctx.p)
    return HermiteDigitsMatrix(int(k), tuple(digits), period)


def _reduce_rows(rows: tuple, q: int) -> tuple:
    out = []
    for row in rows:
        new = []
        for e in row:
            if isinstance(e, int):
                new.append(e % q)
            else:
                new.append(tuple(c % q for c in e))
        out.append(tuple(new))
    return tuple(out)


def _div_p_k(rows: tuple, p: int, k: int) -> tuple:
    for _ in range(k):
        rows = _div_p(rows, p)
    return rows


# -- the projector-valued measure -------------------------------------------------


@dataclass(frozen=True)
class SpectralMeasure:
    """Finitely additive projector assignment on depth-d digit balls.

    nodes maps digit-path addresses (i_0, ..., i_j) to the product of the
    per-digit projectors along the path; zero products are omitted.  The
    stored projectors at each level sum to the identity, refine their
    parents, and are pairwise orthogonal.
    """

    depth: int
    lead_valuation: int
    nodes: tuple  # ((address, projector), ...) sorted by level then address

    def level(self, j: int) -> list:
        return [(addr, proj) for addr, proj in self.nodes if len(addr) == j + 1]

    def node_map(self) -> dict:
        return {addr: proj for addr, proj in self.nodes}

    def ball_center(self, address: tuple, ctx: PrecisionContext) -> PadicScalar:
        """The Z_p number picked out by a digit path, scaled by p^k."""
        total = 0
        from .padic import teichmuller_lift

        for j, idx in enumerate(address):
            total += teichmuller_lift(idx, ctx).residue() * ctx.p**j
        return PadicScalar.from_residue(total, ctx).shift(self.lead_valuation)


def spectral_measure(a: UMatrix, depth: int) -> SpectralMeasure:
    """Build the nested projector tree of a period-1 operator to a given depth.

    Each digit of the expansion is resolved against the p fixed points of
    sigma; level j of the tree multiplies the first j+1 resolutions
    together.  Nonzero products are orthogonal projections, and in
    dimension n at most n of them survive at any level.
    """
    ctx = a.ctx
    if a.ring_tag != "base":
        raise ValueError("the ball measure is built over Z_p (base matrices)")
    if not 1 <= depth <= ctx.m:
        raise ValueError(f"depth must be in [1, m]; got {depth}")
    expansion = hermite_digits_matrix(a, 1)
    ident = UMatrix.identity(a.n, ctx)
    nodes = []
    frontier = [((), ident)]
    for level in range(depth):
        digit = expansion.digits[level]
        resolution = teichmuller_spectral(digit, 1)
        index_of = {lam.residue() % ctx.p: proj for lam, proj in resolution.points}
        new_frontier = []
        for address, parent in frontier:
            for idx in sorted(index_of):
                child = parent * index_of[idx] if address else index_of[idx]
                if child.is_zero_mod_precision():
                    continue
                new_frontier.append((address + (idx,), child))
        frontier = new_frontier
        nodes.extend(frontier)
    measure = SpectralMeasure(depth, expansion.lead_valuation, tuple(nodes))
    _verify_measure(measure, ident, depth)
    return measure


def _verify_measure(measure: SpectralMeasure, ident: UMatrix, depth: int):
    for j in range(depth):
        layer = measure.level(j)
        total = None
        for _, proj in layer:
            total = proj if total is None else total + proj
        if total is None or not total.congruent(ident):
            raise RuntimeError(f"level {j} projectors do not sum to 1 (internal defect)")
        for i, (_, pa) in enumerate(layer):
            for k, (_, pb) in enumerate(layer):
                if i < k and not (pa * pb).is_zero_mod_precision():
                    raise RuntimeError("same-level projectors overlap (internal defect)")
    by_addr = measure.node_map()
    for addr, proj in by_addr.items():
        if len(addr) >= depth:
            continue
        children = [q for a2, q in by_addr.items() if len(a2) == len(addr) + 1 and a2[: len(addr)] == addr]
        total = None
        for q in children:
            total = q if total is None else total + q
        if total is None or not total.congruent(proj):
            raise RuntimeError("projector does not refine into its children (internal defect)")


def spectral_integral(measure: SpectralMeasure):
    """Sum the deepest level of the measure, plain and center-weighted.

    Returns (identity_check, reconstruction): the bare sum of the deepest
    projectors, which must be the identity, and the ball-center weighted
    sum, which approximates the source operator to p^-(k + depth).
    """
    deepest = measure.level(measure.depth - 1)
    if not deepest:
        raise ValueError("measure has no nodes at its deepest level")
    ctx = deepest[0][1].ctx
    identity_check = None
    reconstruction = None
    for addr, proj in deepest:
        identity_check = proj if identity_check is None else identity_check + proj
        weighted = proj.scale(measure.ball_center(addr, ctx))
        reconstruction = weighted if reconstruction is None else reconstruction + weighted
    return identity_check, reconstruction


# -- Jordan decomposition ----------------------------------------------------------


@dataclass(frozen=True)
class JordanPair:
    """Canonical splitting A = A_s + A_n.

    semisimple is fixed by sigma^period mod p^m; sigma-iterates of the
    nilpotent part reach 0 mod p^m after steps_to_kill applications.
    """

    semisimple: UMatrix
    nilpotent: UMatrix
    period: int
    steps_to_kill: int


def jordan_decompose(a: UMatrix, period_bound: int = 8) -> JordanPair:
    """Split an integral matrix into its multiplicative and nilpotent parts.

    Repeated p-th powers of A enter a cycle whose length is the period of
    the multiplicative part; the cycle element whose index is a multiple
    of that period is the canonical A_s (it has the same reduction as the
    semisimple part of A mod p).  The remainder A - A_s is checked to be
    topologically nilpotent.  If no period up to period_bound appears
    within the budget, the verdict is PeriodExceededError.
    """
    if not a.is_integral:
        raise ValueError("jordan_decompose requires |A| <= 1")
    ctx = a.ctx
    ops = _matrix_ops(a)
    budget = ctx.budget(period_bound) + period_bound
    iterates = [a.residues()]
    found = None
    for k in range(1, budget + 1):
        iterates.append(_res_matpow(iterates[-1], ctx.p, ops))
        for period in range(1, min(period_bound, k) + 1):
            if iterates[k - period] == iterates[k]:
                found = (k, period)
                break
        if found:
            break
    if not found:
        raise PeriodExceededError(period_bound, budget)
    k, period = found
    start = k - period
    j = start + (-start) % period
    semisimple = _wrap_residues(iterates[j], a)
    nilpotent = a - semisimple
    steps = _steps_to_zero(nilpotent, ops, ctx)
    return JordanPair(semisimple, nilpotent, period, steps)


def _steps_to_zero(a: UMatrix, ops, ctx: PrecisionContext) -> int:
    rows = a.residues()
    if _rows_are_zero(rows):
        return 0
    for step in range(1, ctx.budget(1) + 1):
        rows = _res_matpow(rows, ctx.p, ops)
        if _rows_are_zero(rows):
            return step
    raise RuntimeError("nilpotent part failed to vanish (internal defect)")


# -- spectrum, diameter, uncertainty --------------------------------------------


def operator_spectrum(a: UMatrix, period: int = 1) -> list:
    """Eigenvalue/projector pairs from the fully refined digit resolution.

    Digits are resolved one power of p at a time; surviving nested
    products give the projectors and the digit paths give the
    eigenvalues, as scalars of the ambient ring.
    """
    ctx = a.ctx
    expansion = hermite_digits_matrix(a, period)
    k = expansion.lead_valuation
    base_ring = expansion.digits[0].ring_tag == "base"
    if base_ring and period > 1:
        if k < 0:
            raise ValueError(
                "period > 1 spectra are supported for integral operators only"
            )
        ring = ext_ring(ctx.p, period, ctx.m)
    elif not base_ring:
        ring = expansion.digits[0].ext_ring
    else:
        ring = None
    frontier = None
    for level, digit in enumerate(expansion.digits):
        resolution = teichmuller_spectral(digit, period)
        terms = []
        for lam, proj in resolution.points:
            if ring is None:
                center_term = lam.shift(k + level)
            else:
                center_term = lam * ring.embed(pow(ctx.p, k + level, ctx.modulus))
            terms.append((center_term, lam, proj))
        if frontier is None:
            frontier = [(center, proj) for center, _, proj in terms]
            continue
        new_frontier = []
        for center, proj in frontier:
            for term_center, _, pi in terms:
                child = proj * pi
                if child.is_zero_mod_precision():
                    continue
                new_frontier.append((center + term_center, child))
        frontier = new_frontier
    return frontier or []


@dataclass(frozen=True)
class SpectrumDiameter:
    """Largest pairwise eigenvalue distance, with the operator-norm cross-check."""

    diameter: float
    diameter_valuation: object
    operator_norm: float
    spectrum: tuple
    period: int


def spectrum_diameter(a: UMatrix, period: int = 1) -> SpectrumDiameter:
    """diam(A) = max |lambda - mu| over the spectrum.

    Cross-checks that the operator norm is the largest eigenvalue norm
    and that every translation A - mu by a spectrum point has norm equal
    to the diameter (at the resolved precision).
    """
    ctx = a.ctx
    points = operator_spectrum(a, period)
    lams = [lam for lam, _ in points]
    diam_val = INFINITE
    for i in range(len(lams)):
        for j in range(i + 1, len(lams)):
            diff = lams[i] - lams[j]
            diam_val = min(diam_val, diff.valuation)
    diam = 0.0 if diam_val == INFINITE else float(ctx.p) ** (-diam_val)
    lam_val = min((lam.valuation for lam in lams), default=INFINITE)
    if lam_val != a.valuation:
        raise RuntimeError("operator norm differs from max eigenvalue norm (internal defect)")
    _check_translations(a, points, diam_val, ctx)
    return SpectrumDiameter(
        diameter=diam,
        diameter_valuation=diam_val,
        operator_norm=a.norm,
        spectrum=tuple(lams),
        period=period,
    )


def _check_translations(a: UMatrix, points, diam_val, ctx: PrecisionContext):
    k = min(lam.valuation for lam, _ in points) if points else 0
    resolved = (0 if k == INFINITE else int(min(k, 0))) + ctx.m
    for lam, _ in points:
        if isinstance(lam, ExtScalar):
            shifted = a.promote(lam.ring) - UMatrix.identity(a.n, ctx).promote(lam.ring).scale(lam)
        else:
            shifted = a - UMatrix.identity(a.n, ctx).scale(lam)
        val = shifted.valuation
        if diam_val == INFINITE:
            if val < resolved:
                raise RuntimeError("translation law failed for a singleton spectrum (internal defect)")
        elif val != diam_val:
            raise RuntimeError("translation by a spectrum point changed the norm (internal defect)")


@dataclass(frozen=True)
class UncertaintyReport:
    """Both sides of |[A, B] psi| <= diam(A) diam(B), and the verdict."""

    lhs_norm: float
    rhs_norm: float
    holds: bool
    lhs_valuation: object
    diam_a: SpectrumDiameter
    diam_b: SpectrumDiameter


def uncertainty_check(
    a: UMatrix, b: UMatrix, psi: Sequence, period: int = 1
) -> UncertaintyReport:
    """Evaluate the commutator inequality on a normalised vector.

    Both operators must pass the digit expansion (NotHermiteError
    propagates) and psi must have sup norm exactly 1.  A violation is
    returned with holds=False so the caller can persist the
    counterexample; it never passes silently.
    """
    if vector_valuation(psi) != 0:
        raise ValueError("psi must have sup norm 1")
    da = spectrum_diameter(a, period)
    db = spectrum_diameter(b, period)
    commutator = a * b - b * a
    image = commutator.apply(tuple(psi))
    lhs_val = vector_valuation(image)
    # the commutator is only resolved to the window p^(k_A + k_B + m);
    # anything beyond it is zero at precision
    ka = 0 if a.valuation == INFINITE else min(0, int(a.valuation))
    kb = 0 if b.valuation == INFINITE else min(0, int(b.valuation))
    if lhs_val >= ka + kb + a.ctx.m:
        lhs_val = INFINITE
    lhs_norm = 0.0 if lhs_val == INFINITE else float(a.ctx.p) ** (-lhs_val)
    if da.diameter_valuation == INFINITE or db.diameter_valuation == INFINITE:
        rhs_norm = 0.0
        holds = lhs_val == INFINITE
    else:
        rhs_val = da.diameter_valuation + db.diameter_valuation
        rhs_norm = float(a.ctx.p) ** (-rhs_val)
        holds = lhs_val == INFINITE or lhs_val >= rhs_val
    return UncertaintyReport(
        lhs_norm=lhs_norm,
        rhs_norm=rhs_norm,
        holds=holds,
        lhs_valuation=lhs_val,
        diam_a=da,
        diam_b=db,
    )
