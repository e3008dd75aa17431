"""Spectral projectors, digit expansions, the ball measure, Jordan splitting."""

import itertools
import random

import pytest

from helpers import (
    conjugate,
    diag_matrix,
    int_matvec,
    rand_gl,
    rand_hermite,
    rand_poly_in,
    rand_teich_diag,
    residues_of,
)
from padicspec import (
    INFINITE,
    NotHermiteError,
    PadicScalar,
    PeriodExceededError,
    PrecisionContext,
    UMatrix,
    hermite_digits_matrix,
    jordan_decompose,
    lift_idempotent,
    operator_spectrum,
    scalar_from_rational,
    spectral_integral,
    spectral_measure,
    spectrum_diameter,
    teichmuller_lift,
    teichmuller_spectral,
    uncertainty_check,
)
CTX = PrecisionContext(3, 4)


# -- idempotent lifting -----------------------------------------------------------


def test_lift_identity_is_identity():
    ident = UMatrix.identity(2, CTX)
    assert lift_idempotent(ident).congruent(ident)


def test_lift_of_exact_idempotent_is_itself():
    a = UMatrix.from_ints([[0, 1], [0, 1]], CTX)
    assert lift_idempotent(a).congruent(a)


def test_lift_diag_with_p_noise():
    a = UMatrix.from_ints([[1, 3], [0, 0]], CTX)  # diag(1,0) + p*E12
    pi = lift_idempotent(a)
    assert (pi * pi).congruent(pi)
    assert pi.sigma_window().congruent(pi)
    p = CTX.p
    assert [[e.residue() % p for e in row] for row in pi.rows] == [[1, 0], [0, 0]]


def test_lift_rejects_non_idempotent():
    with pytest.raises(ValueError):
        lift_idempotent(UMatrix.from_ints([[1, 1], [1, 1]], CTX))


def test_lift_independent_of_commuting_representative():
    rng = random.Random(11)
    for _ in range(20):
        u = rand_gl(CTX, 3, rng)
        base = conjugate(u, diag_matrix(CTX, [1, 1, 0]))
        pi0 = lift_idempotent(base)
        noise = rand_poly_in(base, rng).scale(PadicScalar.from_int(CTX.p, CTX))
        perturbed = base + noise
        assert lift_idempotent(perturbed).congruent(pi0)


def test_lift_preserves_complete_orthogonal_families():
    rng = random.Random(12)
    ctx = PrecisionContext(5, 3)
    for _ in range(10):
        u = rand_gl(ctx, 4, rng)
        masks = [[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1]]
        diag = diag_matrix(ctx, [7, 7, 7, 7])
        reps = []
        for mask in masks:
            core = conjugate(u, diag_matrix(ctx, mask))
            noise = rand_poly_in(core, rng).scale(PadicScalar.from_int(ctx.p, ctx))
            reps.append(core + noise)
        lifted = [lift_idempotent(r) for r in reps]
        total = lifted[0]
        for pi in lifted[1:]:
            total = total + pi
        assert total.congruent(UMatrix.identity(4, ctx))
        for i, a in enumerate(lifted):
            for j, b in enumerate(lifted):
                if i != j:
                    assert (a * b).is_zero_mod_precision()


# -- Lagrange decomposition ----------------------------------------------------------


def test_spectral_of_identity():
    dec = teichmuller_spectral(UMatrix.identity(2, CTX), 1)
    assert len(dec.points) == 1
    lam, proj = dec.points[0]
    assert lam.residue() == 1
    assert proj.congruent(UMatrix.identity(2, CTX))


def test_spectral_of_swap_matrix():
    swap = UMatrix.from_ints([[0, 1], [1, 0]], CTX)
    dec = teichmuller_spectral(swap, 1)
    by_lam = {lam.residue(): proj for lam, proj in dec.points}
    assert set(by_lam) == {1, CTX.modulus - 1}
    half = scalar_from_rational(1, 2, CTX)
    plus = (UMatrix.identity(2, CTX) + swap).scale(half)
    minus = (UMatrix.identity(2, CTX) - swap).scale(half)
    assert by_lam[1].congruent(plus)
    assert by_lam[CTX.modulus - 1].congruent(minus)


def test_spectral_of_teichmuller_diagonal():
    ctx = PrecisionContext(5, 2)
    d = diag_matrix(ctx, [1, 7])
    dec = teichmuller_spectral(d, 1)
    by_lam = {lam.residue(): proj for lam, proj in dec.points}
    assert set(by_lam) == {1, 7}
    assert residues_of(by_lam[1]) == [[1, 0], [0, 0]]
    assert residues_of(by_lam[7]) == [[0, 0], [0, 1]]


def test_spectral_rejects_non_fixed_input():
    with pytest.raises(ValueError):
        teichmuller_spectral(UMatrix.from_ints([[1, 1], [0, 1]], CTX), 1)


def test_spectral_identities_on_random_conjugates():
    rng = random.Random(13)
    for p, n in [(2, 3), (3, 4), (5, 3)]:
        ctx = PrecisionContext(p, 4)
        for _ in range(10):
            u = rand_gl(ctx, n, rng)
            x = conjugate(u, diag_matrix(ctx, rand_teich_diag(ctx, n, rng)))
            dec = teichmuller_spectral(x, 1)
            total = None
            weighted = None
            for lam, proj in dec.points:
                assert proj.norm == 1.0
                assert (proj * proj).congruent(proj)
                total = proj if total is None else total + proj
                weighted = proj.scale(lam) if weighted is None else weighted + proj.scale(lam)
            assert total.congruent(UMatrix.identity(n, ctx))
            assert weighted.congruent(x)


def test_spectral_period_two_rotation():
    """x^2 = -1 over Z_3 splits against the degree-2 extension points."""
    rot = UMatrix.from_ints([[0, 1], [-1, 0]], CTX)
    dec = teichmuller_spectral(rot, 2)
    assert len(dec.points) == 2
    lams = {lam.vector() for lam, _ in dec.points}
    ring = dec.points[0][0].ring
    for lam, _ in dec.points:
        assert (lam * lam).vector() == ring.embed(-1).vector()
    # the p-power map permutes the two conjugate eigenvalues
    assert {lam.sigma_window().vector() for lam, _ in dec.points} == lams


def test_period_two_projectors_certify_over_extension():
    from padicspec import certify_orthogonal_projection

    rot = UMatrix.from_ints([[0, 1], [-1, 0]], CTX)
    for _, proj in teichmuller_spectral(rot, 2).points:
        cert = certify_orthogonal_projection(proj, samples=10)
        assert cert.valid, cert.failures
        assert cert.norm_of_pi == 1.0


def test_spectral_requires_period_dividing_ext_degree():
    rot = UMatrix.from_ints([[0, 1], [-1, 0]], CTX)
    dec = teichmuller_spectral(rot, 2)
    ext_matrix = dec.points[0][1]
    with pytest.raises(ValueError):
        teichmuller_spectral(ext_matrix, 3)


# -- brute-force eigenspace oracle ---------------------------------------------------


def _brute_eigen_check(x_rows, dec, ctx, n, vectors):
    """pi_lam v = v exactly when x v = lam v, for every sampled vector."""
    q = ctx.modulus
    proj_by_lam = {lam.residue(): residues_of(proj) for lam, proj in dec.points}
    fixed = [teichmuller_lift(r, ctx).residue() for r in range(ctx.p)]
    for v in vectors:
        for lam in fixed:
            is_eigen = int_matvec(x_rows, v, q) == [(lam * c) % q for c in v]
            proj = proj_by_lam.get(lam)
            projected = int_matvec(proj, v, q) if proj else [0] * n
            assert is_eigen == (projected == list(v))


def test_brute_force_oracle_exhaustive_vectors():
    rng = random.Random(14)
    for p in (2, 3):
        ctx = PrecisionContext(p, 2)
        q = ctx.modulus
        all_vectors = list(itertools.product(range(q), repeat=2))
        for _ in range(10):
            u = rand_gl(ctx, 2, rng)
            x = conjugate(u, diag_matrix(ctx, rand_teich_diag(ctx, 2, rng)))
            dec = teichmuller_spectral(x, 1)
            _brute_eigen_check(residues_of(x), dec, ctx, 2, all_vectors)


def test_brute_force_oracle_sampled_dimension_three():
    rng = random.Random(15)
    for p in (2, 3):
        ctx = PrecisionContext(p, 3)
        q = ctx.modulus
        for _ in range(8):
            u = rand_gl(ctx, 3, rng)
            x = conjugate(u, diag_matrix(ctx, rand_teich_diag(ctx, 3, rng)))
            dec = teichmuller_spectral(x, 1)
            vectors = [tuple(rng.randrange(q) for _ in range(3)) for _ in range(40)]
            _brute_eigen_check(residues_of(x), dec, ctx, 3, vectors)


# -- digit expansions -----------------------------------------------------------------


def test_hermite_digits_worked_example():
    a = UMatrix.from_ints([[1, 3], [0, 4]], CTX)
    expansion = hermite_digits_matrix(a, 1)
    assert expansion.lead_valuation == 0
    assert residues_of(expansion.digits[0]) == [[1, 0], [0, 1]]
    assert residues_of(expansion.digits[1]) == [[0, 1], [0, 1]]
    assert expansion.digits[2].is_zero_mod_precision()
    assert expansion.reassemble().congruent(a)


def test_hermite_rejects_unipotent():
    with pytest.raises(NotHermiteError) as err:
        hermite_digits_matrix(UMatrix.from_ints([[1, 1], [0, 1]], CTX), 1)
    assert err.value.stage == 1
    assert "digit 1" in err.value.reason


def test_hermite_rejects_wrong_period_with_unstable_orbit():
    # the rotation is fixed by sigma^2, so its sigma^1 orbit cycles forever
    rot = UMatrix.from_ints([[0, 1], [-1, 0]], CTX)
    with pytest.raises(NotHermiteError) as err:
        hermite_digits_matrix(rot, 1)
    assert err.value.stage == 0
    assert "stabilise" in err.value.reason
    hermite_digits_matrix(rot, 2)  # but the period-2 expansion exists


def test_hermite_stage_tracks_perturbation_depth():
    rng = random.Random(16)
    ctx = PrecisionContext(3, 4)
    for stage in range(1, ctx.m):
        u = rand_gl(ctx, 3, rng)
        core = diag_matrix(ctx, [2, 2, 5])
        bump = UMatrix.from_ints(
            [[0, 3**stage, 0], [0, 0, 0], [0, 0, 0]], ctx
        )
        with pytest.raises(NotHermiteError) as err:
            hermite_digits_matrix(conjugate(u, core + bump), 1)
        assert err.value.stage == stage + 1


def test_hermite_diagonal_of_scalars():
    ctx = PrecisionContext(5, 3)
    a = diag_matrix(ctx, [3, 17])
    expansion = hermite_digits_matrix(a, 1)
    from padicspec import teichmuller_digits

    d0 = teichmuller_digits(PadicScalar.from_int(3, ctx))
    top_left = [residues_of(dig)[0][0] for dig in expansion.digits]
    assert top_left == [dig.residue() for dig in d0.digits]


def test_hermite_factors_negative_valuation():
    third = scalar_from_rational(1, 3, CTX)
    a = UMatrix.from_ints([[1, 3], [0, 4]], CTX).scale(third)
    expansion = hermite_digits_matrix(a, 1)
    assert expansion.lead_valuation == -1
    # reassembly agrees to the shifted window p^(k+m)
    diff = expansion.reassemble() - a
    assert diff.valuation >= expansion.lead_valuation + CTX.m


def test_hermite_zero_matrix():
    expansion = hermite_digits_matrix(UMatrix.zeros(3, CTX), 1)
    assert all(d.is_zero_mod_precision() for d in expansion.digits)


def test_hermite_digits_commute_and_are_fixed():
    rng = random.Random(17)
    ctx = PrecisionContext(3, 5)
    for _ in range(10):
        a, _, _ = rand_hermite(ctx, 4, rng)
        expansion = hermite_digits_matrix(a, 1)
        digits = expansion.digits
        for d in digits:
            assert d.sigma_window().congruent(d)
        for i, di in enumerate(digits):
            for dj in digits[i + 1 :]:
                assert (di * dj).congruent(dj * di)
        assert expansion.reassemble().congruent(a)


def test_gl_equivalence_positive_and_negative():
    """Conjugated diagonals pass; unipotent blocks fail with a located stage."""
    rng = random.Random(18)
    for p in (2, 3, 5):
        ctx = PrecisionContext(p, 4)
        for _ in range(10):
            a, _, _ = rand_hermite(ctx, 3, rng)
            expansion = hermite_digits_matrix(a, 1)
            assert expansion.reassemble().congruent(a)
        for _ in range(10):
            u = rand_gl(ctx, 3, rng)
            lam = rng.randrange(ctx.modulus)
            core = diag_matrix(ctx, [lam, lam, rng.randrange(ctx.modulus)])
            bump = UMatrix.from_ints([[0, 1, 0], [0, 0, 0], [0, 0, 0]], ctx)
            with pytest.raises(NotHermiteError):
                hermite_digits_matrix(conjugate(u, core + bump), 1)


def test_commuting_hermite_closure():
    """Sums and products of commuting expandable operators stay expandable."""
    rng = random.Random(19)
    ctx = PrecisionContext(3, 4)
    for _ in range(10):
        u = rand_gl(ctx, 3, rng)
        a = conjugate(u, diag_matrix(ctx, [rng.randrange(ctx.modulus) for _ in range(3)]))
        b = conjugate(u, diag_matrix(ctx, [rng.randrange(ctx.modulus) for _ in range(3)]))
        assert (a * b).congruent(b * a)
        hermite_digits_matrix(a + b, 1)
        hermite_digits_matrix(a * b, 1)


def test_spectrum_invariant_under_conjugation():
    rng = random.Random(20)
    ctx = PrecisionContext(3, 3)
    a, _, _ = rand_hermite(ctx, 3, rng)
    spec_a = sorted(lam.residue() for lam, _ in operator_spectrum(a))
    u = rand_gl(ctx, 3, rng)
    b = conjugate(u, a)
    spec_b = sorted(lam.residue() for lam, _ in operator_spectrum(b))
    assert spec_a == spec_b


def test_classify_matrix_orbits():
    from padicspec import OrbitKind, classify_orbit

    nil = UMatrix.from_ints([[0, 1], [0, 0]], CTX)
    assert classify_orbit(nil, 2).kind is OrbitKind.TOP_NILPOTENT
    swap = UMatrix.from_ints([[0, 1], [1, 0]], CTX)
    report = classify_orbit(swap, 2)
    assert report.kind is OrbitKind.PERIODIC and report.period == 1
    # unipotent orbits stabilise onto the identity they do not start on
    uni = UMatrix.from_ints([[1, 1], [0, 1]], CTX)
    report = classify_orbit(uni, 2)
    assert report.kind is OrbitKind.QUASI_PERIODIC
    assert report.limit.congruent(UMatrix.identity(2, CTX))


# -- the ball measure ----------------------------------------------------------------


def test_measure_worked_example():
    ctx = PrecisionContext(3, 4)
    a = diag_matrix(ctx, [1, 4])
    measure = spectral_measure(a, 2)
    nodes = measure.node_map()
    assert set(nodes) == {(1,), (1, 0), (1, 1)}
    assert residues_of(nodes[(1,)]) == [[1, 0], [0, 1]]
    assert residues_of(nodes[(1, 0)]) == [[1, 0], [0, 0]]
    assert residues_of(nodes[(1, 1)]) == [[0, 0], [0, 1]]
    assert measure.ball_center((1, 0), ctx).residue() == 1
    assert measure.ball_center((1, 1), ctx).residue() == 4


def test_measure_scalar_operator_single_path():
    ctx = PrecisionContext(5, 3)
    lam = teichmuller_lift(2, ctx)
    a = UMatrix.identity(2, ctx).scale(lam)
    measure = spectral_measure(a, 2)
    for level in range(2):
        layer = measure.level(level)
        assert len(layer) == 1
        assert layer[0][1].congruent(UMatrix.identity(2, ctx))


def test_measure_conjugated_example_has_rank_one_balls():
    ctx = PrecisionContext(3, 4)
    u = UMatrix.from_ints([[1, 1], [0, 1]], ctx)
    a = conjugate(u, diag_matrix(ctx, [1, 4]))
    measure = spectral_measure(a, 2)
    deepest = measure.level(1)
    assert len(deepest) == 2
    for _, proj in deepest:
        assert proj.norm == 1.0


def test_measure_depth_bounds():
    a = diag_matrix(CTX, [1, 4])
    with pytest.raises(ValueError):
        spectral_measure(a, 0)
    with pytest.raises(ValueError):
        spectral_measure(a, CTX.m + 1)


def test_measure_node_count_bounded_by_dimension():
    rng = random.Random(21)
    ctx = PrecisionContext(3, 4)
    for _ in range(8):
        a, _, _ = rand_hermite(ctx, 4, rng)
        measure = spectral_measure(a, ctx.m)
        counts = [len(measure.level(j)) for j in range(ctx.m)]
        assert all(c <= 4 for c in counts)
        assert counts == sorted(counts)  # refinement never merges balls


def test_integral_of_identity():
    measure = spectral_measure(UMatrix.identity(2, CTX), 2)
    identity_check, reconstruction = spectral_integral(measure)
    assert identity_check.congruent(UMatrix.identity(2, CTX))
    assert reconstruction.congruent(UMatrix.identity(2, CTX))


def test_integral_reconstructs_worked_example():
    ctx = PrecisionContext(3, 2)
    a = diag_matrix(ctx, [1, 4])
    identity_check, reconstruction = spectral_integral(spectral_measure(a, 2))
    assert identity_check.congruent(UMatrix.identity(2, ctx))
    assert reconstruction.congruent(a)


def test_integral_error_decays_with_depth():
    rng = random.Random(22)
    ctx = PrecisionContext(5, 4)
    a, _, _ = rand_hermite(ctx, 3, rng)
    last = -1
    for depth in range(1, ctx.m + 1):
        _, reconstruction = spectral_integral(spectral_measure(a, depth))
        err = (reconstruction - a).valuation
        assert err >= depth
        assert err >= last
        last = err


@pytest.mark.parametrize("shift", [-1, 1])
def test_measure_with_shifted_valuation(shift):
    """Lead valuation k scales the centers; the error bound moves to k + d."""
    rng = random.Random(27)
    ctx = PrecisionContext(3, 4)
    base, _, _ = rand_hermite(ctx, 2, rng)
    a = base.shift(shift)
    measure = spectral_measure(a, 2)
    assert measure.lead_valuation == base.valuation + shift
    identity_check, reconstruction = spectral_integral(measure)
    assert identity_check.congruent(UMatrix.identity(2, ctx))
    assert (reconstruction - a).valuation >= measure.lead_valuation + 2


# -- Jordan decomposition ----------------------------------------------------------------


def test_jordan_unipotent_example():
    a = UMatrix.from_ints([[1, 1], [0, 1]], CTX)
    pair = jordan_decompose(a, 4)
    assert pair.semisimple.congruent(UMatrix.identity(2, CTX))
    assert residues_of(pair.nilpotent) == [[0, 1], [0, 0]]
    assert pair.period == 1
    assert pair.steps_to_kill == 1
    assert (pair.semisimple + pair.nilpotent).congruent(a)


def test_jordan_of_teichmuller_element():
    rng = random.Random(23)
    x = conjugate(rand_gl(CTX, 3, rng), diag_matrix(CTX, rand_teich_diag(CTX, 3, rng)))
    pair = jordan_decompose(x, 4)
    assert pair.semisimple.congruent(x)
    assert pair.nilpotent.is_zero_mod_precision()


def test_jordan_of_strictly_upper_triangular():
    a = UMatrix.from_ints([[0, 2, 1], [0, 0, 5], [0, 0, 0]], CTX)
    pair = jordan_decompose(a, 4)
    assert pair.semisimple.is_zero_mod_precision()
    assert pair.nilpotent.congruent(a)


def test_jordan_splits_exactly_and_survives_perturbation():
    rng = random.Random(24)
    ctx = PrecisionContext(3, 4)
    for _ in range(10):
        a = UMatrix.from_residues(
            [[rng.randrange(ctx.modulus) for _ in range(3)] for _ in range(3)], ctx
        )
        if a.valuation != 0:
            continue
        pair = jordan_decompose(a, 6)
        assert (pair.semisimple + pair.nilpotent).congruent(a)
        assert pair.semisimple.sigma_window(pair.period).congruent(pair.semisimple)
        # recomputing from a commuting p-perturbation of the lift gives the same part
        noise = rand_poly_in(a, rng).scale(PadicScalar.from_int(ctx.p, ctx))
        again = jordan_decompose(pair.semisimple + noise, 6)
        assert again.semisimple.congruent(pair.semisimple)


def test_jordan_period_two_rotation():
    rot = UMatrix.from_ints([[0, 1], [-1, 0]], CTX)
    pair = jordan_decompose(rot, 4)
    assert pair.period == 2
    assert pair.semisimple.congruent(rot)


def test_jordan_period_exceeded():
    rot = UMatrix.from_ints([[0, 1], [-1, 0]], CTX)
    with pytest.raises(PeriodExceededError):
        jordan_decompose(rot, 1)


def test_jordan_rejects_norm_above_one():
    bad = UMatrix.identity(2, CTX).scale(scalar_from_rational(1, 3, CTX))
    with pytest.raises(ValueError):
        jordan_decompose(bad)


def test_jordan_and_lift_over_extension_ring():
    from padicspec import ext_ring, lift_idempotent

    ring = ext_ring(3, 2, 3)
    x = ring.element((0, 1))  # sigma^2-fixed: X^9 = X mod X^2 + 1
    a = UMatrix.from_scalars([[x, ring.zero()], [ring.zero(), ring.one()]])
    pair = jordan_decompose(a, 4)
    assert pair.period == 2
    assert pair.semisimple.congruent(a)
    assert pair.nilpotent.is_zero_mod_precision()
    proj = UMatrix.from_scalars([[ring.one(), ring.zero()], [ring.zero(), ring.zero()]])
    assert lift_idempotent(proj).congruent(proj)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_engine_at_minimal_precision(p):
    """Everything degrades gracefully to one digit (m = 1)."""
    ctx = PrecisionContext(p, 1)
    a = diag_matrix(ctx, [1, p - 1] if p > 2 else [1, 0])
    expansion = hermite_digits_matrix(a, 1)
    assert len(expansion.digits) == 1
    measure = spectral_measure(a, 1)
    identity_check, reconstruction = spectral_integral(measure)
    assert identity_check.congruent(UMatrix.identity(2, ctx))
    assert (reconstruction - a).valuation >= 1
    pair = jordan_decompose(a, 2)
    assert (pair.semisimple + pair.nilpotent).congruent(a)


# -- diameter and the commutator bound ------------------------------------------------------


def test_diameter_of_scalar_operator_is_zero():
    ctx = PrecisionContext(5, 3)
    lam = teichmuller_lift(2, ctx)
    report = spectrum_diameter(UMatrix.identity(3, ctx).scale(lam))
    assert report.diameter == 0.0
    assert report.diameter_valuation == INFINITE


def test_diameter_examples():
    assert spectrum_diameter(diag_matrix(CTX, [1, 4])).diameter == pytest.approx(1 / 3)
    minus_one = CTX.modulus - 1
    assert spectrum_diameter(diag_matrix(CTX, [1, minus_one])).diameter == 1.0


def test_diameter_of_period_two_operator():
    rot = UMatrix.from_ints([[0, 1], [-1, 0]], CTX)
    report = spectrum_diameter(rot, period=2)
    assert report.diameter == 1.0  # |i - (-i)| = |2i| = 1 at p = 3
    assert len(report.spectrum) == 2


def test_diameter_operator_norm_cross_check():
    rng = random.Random(25)
    ctx = PrecisionContext(3, 4)
    for _ in range(10):
        a, _, _ = rand_hermite(ctx, 3, rng)
        report = spectrum_diameter(a)
        assert report.operator_norm == a.norm


def test_uncertainty_worked_example():
    a = diag_matrix(CTX, [1, CTX.modulus - 1])
    b = UMatrix.from_ints([[0, 1], [1, 0]], CTX)
    psi = (PadicScalar.one(CTX), PadicScalar.zero(CTX))
    report = uncertainty_check(a, b, psi)
    assert report.lhs_norm == 1.0
    assert report.rhs_norm == 1.0
    assert report.holds


def test_uncertainty_commuting_operators():
    rng = random.Random(26)
    ctx = PrecisionContext(3, 3)
    u = rand_gl(ctx, 3, rng)
    a = conjugate(u, diag_matrix(ctx, [1, 4, 7]))
    b = conjugate(u, diag_matrix(ctx, [2, 5, 8]))
    psi = (PadicScalar.one(ctx), PadicScalar.zero(ctx), PadicScalar.zero(ctx))
    report = uncertainty_check(a, b, psi)
    assert report.lhs_norm == 0.0
    assert report.holds


def test_uncertainty_scalar_operator_zero_rhs():
    ctx = PrecisionContext(5, 2)
    a = UMatrix.identity(2, ctx).scale(teichmuller_lift(3, ctx))
    b = diag_matrix(ctx, [1, 7])
    psi = (PadicScalar.one(ctx), PadicScalar.zero(ctx))
    report = uncertainty_check(a, b, psi)
    assert report.rhs_norm == 0.0
    assert report.lhs_norm == 0.0
    assert report.holds


def test_uncertainty_rejects_unnormalised_vector():
    a = diag_matrix(CTX, [1, 4])
    psi = (PadicScalar.from_int(3, CTX), PadicScalar.from_int(9, CTX))
    with pytest.raises(ValueError):
        uncertainty_check(a, a, psi)


def test_uncertainty_propagates_not_hermite():
    bad = UMatrix.from_ints([[1, 1], [0, 1]], CTX)
    psi = (PadicScalar.one(CTX), PadicScalar.zero(CTX))
    with pytest.raises(NotHermiteError):
        uncertainty_check(bad, bad, psi)
