import io
import math

import numpy as np
import pytest

from diskops import blaschke as bl
from diskops import operators as op
from diskops import report as rp
from diskops import series as ps
from diskops import spaces as sp
from diskops.errors import (
    ConvergenceError,
    DomainError,
    PreconditionError,
    TruncationError,
)

S12 = sp.s12()


def random_poly(rng, max_degree=12, min_degree=0):
    deg = int(rng.integers(min_degree, max_degree + 1))
    return ps.PowerSeries(rng.uniform(-1, 1, deg + 1) + 1j * rng.uniform(-1, 1, deg + 1))


shift_z = bl.BlaschkeProduct(-1.0, (0j,))  # the symbol z as a Blaschke product


class TestMultiplicationMatrix:
    def test_identity_symbol(self):
        t = op.multiplication_matrix(S12, ps.one(), 16)
        assert np.array_equal(t.entries, np.eye(17))

    def test_shift_weights(self):
        # subdiagonal entries sqrt((n+3)/(n+1)) in the orthonormal basis
        t = op.multiplication_matrix(S12, ps.monomial(1), 12)
        n = np.arange(12.0)
        assert np.allclose(np.diag(t.entries, -1), np.sqrt((n + 3) / (n + 1)), rtol=1e-15)

    def test_band_profile(self):
        rng = np.random.default_rng(0)
        f = random_poly(rng, max_degree=5, min_degree=5)
        t = op.multiplication_matrix(S12, f, 20)
        i, j = np.nonzero(t.entries)
        assert np.all(i >= j) and np.all(i - j <= 5)

    def test_adjoint_consistency(self):
        rng = np.random.default_rng(1)
        t = op.multiplication_matrix(S12, random_poly(rng), 40)
        x = rng.normal(size=41) + 1j * rng.normal(size=41)
        y = rng.normal(size=41) + 1j * rng.normal(size=41)
        lhs = np.vdot(y, t.entries @ x)
        rhs = np.vdot(t.adjoint_entries() @ y, x)
        assert abs(lhs - rhs) < 1e-12 * (1 + abs(lhs))

    def test_csv_export(self):
        t = op.multiplication_matrix(S12, ps.monomial(1), 2)
        buf = io.StringIO()
        t.to_csv(buf)
        rows = buf.getvalue().strip().splitlines()
        assert len(rows) == 3
        assert rows[1].split('","')[0].lstrip('"') == f"{math.sqrt(3):.17g},0"


class TestOperatorNorm:
    def test_identity(self):
        assert op.operator_norm(op.multiplication_matrix(S12, ps.one(), 8)) == 1.0

    def test_monomial_multiplier_norms(self):
        for k in range(11):
            est = op.operator_norm(op.multiplication_matrix(S12, ps.monomial(k), 64))
            want = math.sqrt((k + 1) * (k + 2) / 2.0)
            assert abs(est - want) < 1e-10

    def test_one_plus_z_exceeds_sqrt_4_5(self):
        est = op.multiplication_norm(S12, ps.from_coefficients([1, 1]), 512)
        assert est > math.sqrt(4.5)

    def test_matfree_matches_dense(self):
        rng = np.random.default_rng(2)
        f = random_poly(rng)
        dense = op.operator_norm(op.multiplication_matrix(S12, f, 500))
        matfree = op.multiplication_norm(S12, f, 500)
        assert abs(dense - matfree) < 1e-9 * dense

    def test_monotone_in_truncation(self):
        f = ps.from_coefficients([1, 1])
        values = [op.multiplication_norm(S12, f, n) for n in (32, 64, 128, 256)]
        assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))

    def test_convergence_profile_stabilizes_for_monomial(self):
        est, n_used = op.convergence_profile(S12, op.MULTIPLICATION, ps.monomial(2), tol=1e-8)
        assert abs(est - math.sqrt(6.0)) < 1e-9
        assert n_used == 128

    def test_convergence_profile_cap(self):
        # compression norms of f -> f(z^2) climb like 1/n toward the limit,
        # so a tight tolerance must hit the cap
        with pytest.raises(ConvergenceError):
            op.convergence_profile(
                S12, op.COMPOSITION, ps.monomial(2), tol=1e-8, cap=256
            )

    def test_norm_sandwich(self):
        rng = np.random.default_rng(3)
        for _ in range(40):
            f = random_poly(rng)
            est = op.operator_norm(op.multiplication_matrix(S12, f, 256))
            norm = sp.space_norm(S12, f)
            assert max(sp.sup_norm(f), norm) <= est <= 2 * math.sqrt(2) * norm + 1e-12

    def test_strict_sup_gap(self):
        rng = np.random.default_rng(4)
        for _ in range(10):
            f = random_poly(rng, min_degree=1)
            est = op.multiplication_norm(S12, f, 512)
            assert est > sp.sup_norm(f)


class TestCompositionMatrix:
    def test_identity_symbol(self):
        t = op.composition_matrix(S12, ps.monomial(1), 24)
        assert np.allclose(t.entries, np.eye(25), atol=1e-15)

    def test_half_z_is_diagonal(self):
        t = op.composition_matrix(S12, ps.from_coefficients([0, 0.5]), 16)
        assert np.allclose(t.entries, np.diag(0.5 ** np.arange(17.0)), atol=1e-15)

    def test_monomial_block_structure(self):
        t = op.composition_matrix(S12, ps.monomial(3), 30)
        w = S12.weights(30)
        for j in range(11):
            expected = math.sqrt(w[3 * j] / w[j])
            assert abs(t.entries[3 * j, j] - expected) < 1e-14
        est = op.operator_norm(t)
        best = max(math.sqrt(w[3 * j] / w[j]) for j in range(11))
        assert abs(est - best) < 1e-12

    def test_rejects_bad_symbol(self):
        with pytest.raises(DomainError):
            op.composition_matrix(S12, ps.from_coefficients([1.0, 0.1]), 8)

    def test_monomial_norm_limit(self):
        for k in range(1, 9):
            value = op.composition_monomial_norm(S12, k)
            assert abs(value - k) < 1e-8
            assert value <= k  # certified lower bound approaching the limit


class TestHilbertSchmidt:
    def test_zero_symbol(self):
        assert op.hilbert_schmidt_norm_sq(S12, ps.from_coefficients([0.0]), 64) == 1.0

    def test_half_z_geometric(self):
        # ||(z/2)^n||^2 / ||z^n||^2 = 4^-n, so the sum telescopes to 4/3
        value = op.hilbert_schmidt_norm_sq(S12, ps.from_coefficients([0, 0.5]), 200)
        oracle = sum(0.25**n for n in range(201))
        assert abs(value - oracle) < 1e-13
        assert abs(value - 4.0 / 3.0) < 1e-13

    def test_bound_for_small_sup(self):
        rng = np.random.default_rng(5)
        for _ in range(5):
            f = random_poly(rng, max_degree=8, min_degree=1)
            f = ps.scale(f, 0.8 / sp.sup_norm(f))
            value = op.hilbert_schmidt_norm_sq(S12, f, 256)
            bound = 1.0 + 2.0 * sp.space_norm_sq(S12, f) / (1.0 - sp.sup_norm(f) ** 2)
            assert value <= bound


class TestIsometryDefect:
    def test_s12_shift_is_3_isometry(self):
        rng = np.random.default_rng(6)
        t = op.multiplication_matrix(S12, ps.monomial(1), 64)
        for _ in range(40):
            assert abs(op.isometry_defect(t, 3, random_poly(rng))) < 1e-12

    def test_s12_shift_beta2_at_one(self):
        t = op.multiplication_matrix(S12, ps.monomial(1), 16)
        # ||z^2||^2 - 2 ||z||^2 + 1 = 6 - 6 + 1
        assert op.isometry_defect(t, 2, ps.one()) == 1.0

    def test_hardy_shift_isometric(self):
        rng = np.random.default_rng(7)
        t = op.multiplication_matrix(sp.hardy(), ps.monomial(1), 32)
        for _ in range(10):
            assert abs(op.isometry_defect(t, 1, random_poly(rng))) < 1e-13

    def test_km_shifts(self):
        rng = np.random.default_rng(8)
        for m in (1, 2, 3):
            space = sp.km(m)
            t = op.multiplication_matrix(space, ps.monomial(1), 64)
            for _ in range(5):
                probe = random_poly(rng, max_degree=8)
                probe = ps.scale(probe, 1.0 / sp.space_norm(space, probe))
                assert abs(op.isometry_defect(t, m + 2, probe)) < 1e-12
            assert op.isometry_defect(t, m + 1, ps.one()) == 1.0

    def test_probe_budget(self):
        t = op.multiplication_matrix(S12, ps.monomial(1), 8)
        with pytest.raises(TruncationError):
            op.isometry_defect(t, 3, ps.monomial(7))


class TestShiftClassification:
    def test_s12_weights(self):
        n = np.arange(64.0)
        result = op.shift_isometry_order((n + 3) / (n + 1), 6)
        assert result.order == 3
        assert np.max(np.abs(np.array(result.polynomial) - [1.0, 1.5, 0.5])) < 1e-8
        assert result.residual < 1e-10

    def test_constant_weights(self):
        result = op.shift_isometry_order(np.ones(48), 4)
        assert result.order == 1
        assert abs(result.polynomial[0] - 1.0) < 1e-12

    def test_s2_weights_unclassifiable(self):
        wsq = np.ones(64)
        n = np.arange(1.0, 64.0)
        wsq[1:] = (n + 1) ** 2 / n**2
        result = op.shift_isometry_order(wsq, 6)
        assert result.order is None
        assert result.residual > 1e-8

    def test_km_weights(self):
        from numpy.polynomial import polynomial as npoly

        n = np.arange(64.0)
        for m in (1, 2, 3):
            result = op.shift_isometry_order((n + m + 2) / (n + 1), m + 3)
            assert result.order == m + 2
            target = npoly.polyfromroots([-i for i in range(1, m + 2)]).real
            target /= target[0]
            assert np.max(np.abs(np.array(result.polynomial) - target)) < 1e-8

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            op.shift_isometry_order([1.0, -2.0], 3)


class TestBlaschkeIdentities:
    def test_shift_symbol_weight_arithmetic(self):
        # ||z^3||^2 - 3||z^2||^2 + 3||z||^2 - 1 = 10 - 18 + 9 - 1
        value = op.blaschke_power_defect(S12, shift_z, 3, ps.one(), 32)
        assert value == 0.0
        w = S12.weights(3)
        assert (w[3], w[2], w[1]) == (10.0, 6.0, 3.0)

    def test_z_phi04_probes(self):
        report = op.blaschke_isometry_check(
            S12, bl.z_times_phi(0.4), [ps.one(), ps.from_coefficients([1, 1])], 1024
        )
        assert report.status == rp.PASS

    def test_phi_pair_probes(self):
        report = op.blaschke_isometry_check(
            S12, bl.phi_pair(0.5), [ps.one(), ps.monomial(1)], 1024
        )
        assert report.status == rp.PASS

    def test_s2_scale_correction(self):
        # for symbols vanishing at 0 the identity on the S2 scale misses
        # by exactly -|f(0)|^2
        value = op.blaschke_power_defect(sp.s2(), bl.z_times_phi(0.4), 3, ps.one(), 1024)
        assert abs(value + 1.0) < 1e-8

    def test_truncation_guard(self):
        psi = bl.BlaschkeProduct(1.0, (0.95, -0.95, 0.95j))
        with pytest.raises(TruncationError):
            op.blaschke_isometry_check(S12, psi, [ps.one()], 48)


class TestGrowthFormulas:
    def test_monomial_powers_on_s2(self):
        report = op.growth_formula_check(sp.s2(), shift_z, ps.one(), 6, tol=1e-12, order=64)
        assert report.status == rp.PASS
        for n in range(1, 7):
            assert sp.space_norm_sq(sp.s2(), ps.monomial(n)) == float(n * n)

    @pytest.mark.parametrize("space", [sp.s2(), S12])
    def test_blaschke_cases(self, space):
        for psi in (shift_z, bl.z_times_phi(0.3)):
            for f in (ps.one(), ps.from_coefficients([1, 1])):
                report = op.growth_formula_check(space, psi, f, 6, tol=1e-8, order=512)
                assert report.status == rp.PASS, (space.label, psi, f.coeffs)

    def test_phi_pair_on_s12(self):
        report = op.growth_formula_check(S12, bl.phi_pair(0.5), ps.monomial(1), 6, order=512)
        assert report.status == rp.PASS

    def test_direct_power_oracle(self):
        # independent check of one S2 case: build psi^4 f without the helper
        psi = bl.z_times_phi(0.3)
        f = ps.one()
        series = psi.series(400)
        u = ps.truncate(f, 400)
        for _ in range(4):
            u = ps.cauchy_product(u, series, 400)
        lhs = sp.space_norm_sq(sp.s2(), u)
        two = ps.cauchy_product(ps.cauchy_product(ps.truncate(f, 400), series, 400), series, 400)
        one_ = ps.cauchy_product(ps.truncate(f, 400), series, 400)
        n = 4
        rhs = (
            n * (n - 1) / 2 * sp.space_norm_sq(sp.s2(), two)
            - n * (n - 2) * sp.space_norm_sq(sp.s2(), one_)
            + (n - 1) * (n - 2) / 2 * (sp.space_norm_sq(sp.s2(), f) - 1.0)
        )
        assert abs(lhs - rhs) < 1e-8

    def test_rejects_other_spaces(self):
        with pytest.raises(ValueError):
            op.growth_formula_check(sp.hardy(), shift_z, ps.one(), 4)


class TestDirichletLinearity:
    def test_shift_monomials(self):
        report = op.dirichlet_linearity_check(shift_z, ps.one(), 5, order=64)
        assert report.status == rp.PASS

    @pytest.mark.parametrize(
        "psi,f,n_max",
        [
            (bl.BlaschkeProduct(1.0, (0.6,)), ps.one(), 5),
            (bl.z_times_phi(0.2), ps.from_coefficients([1, 0, 1]), 4),
        ],
    )
    def test_blaschke_cases(self, psi, f, n_max):
        report = op.dirichlet_linearity_check(psi, f, n_max, order=512)
        assert report.status == rp.PASS


class TestCompositionBounds:
    def test_zero_symbol(self):
        report = op.composition_norm_bound_check(S12, ps.from_coefficients([0.0]), n=64)
        assert report.status == rp.CONSISTENT
        est_sq = next(v.value for v in report.computed if v.label == "composition_norm_sq_estimate")
        assert abs(est_sq - 1.0) < 1e-12

    def test_d2_constant_half(self):
        report = op.composition_norm_bound_check(
            sp.dirichlet(), ps.from_coefficients([0.5]), n=256
        )
        assert report.status == rp.CONSISTENT
        est_sq = next(v.value for v in report.computed if v.label == "composition_norm_sq_estimate")
        lower = math.log(1.0 / 0.75) / 0.25
        assert abs(est_sq.real - lower) < 1e-10
        assert est_sq.real <= 3.0

    def test_half_z_on_s12(self):
        report = op.composition_norm_bound_check(S12, ps.from_coefficients([0, 0.5]), n=128)
        assert report.status == rp.CONSISTENT

    def test_precondition_large_multiplier(self):
        with pytest.raises(PreconditionError):
            op.composition_norm_bound_check(S12, ps.from_coefficients([0, 3.0]), n=64)

    def test_precondition_space(self):
        with pytest.raises(PreconditionError):
            op.composition_norm_bound_check(sp.bergman(), ps.from_coefficients([0, 0.5]), n=64)
