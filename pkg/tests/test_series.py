import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diskops import series as ps
from diskops.errors import DomainError


def coefficient_lists(max_len=8, magnitude=1.0, min_const=0.0):
    def build(draw):
        n = draw(st.integers(1, max_len))
        re = draw(st.lists(st.floats(-magnitude, magnitude), min_size=n, max_size=n))
        im = draw(st.lists(st.floats(-magnitude, magnitude), min_size=n, max_size=n))
        c = np.array(re) + 1j * np.array(im)
        if min_const > 0 and abs(c[0]) < min_const:
            c[0] = min_const * (1.0 + 1j)
        return ps.PowerSeries(c)

    return st.composite(lambda draw: build(draw))()


class TestConstruction:
    def test_invariant_length(self):
        f = ps.from_coefficients([1, 2, 3])
        assert f.order == 2 and len(f.coeffs) == 3

    def test_rejects_nan(self):
        with pytest.raises(DomainError):
            ps.from_coefficients([1.0, float("nan")])

    def test_immutable(self):
        f = ps.from_coefficients([1, 2])
        with pytest.raises(ValueError):
            f.coeffs[0] = 5.0

    def test_json_round_trip(self):
        f = ps.from_coefficients([1 + 2j, -0.5, 0.25j])
        pairs = ps.to_pairs(f)
        assert ps.from_pairs(json.loads(json.dumps(pairs))) == f


class TestCauchyProduct:
    def test_binomial_square(self):
        one_plus_z = ps.from_coefficients([1, 1])
        sq = ps.cauchy_product(one_plus_z, one_plus_z, 2)
        assert np.allclose(sq.coeffs, [1, 2, 1])

    def test_identity_element(self):
        f = ps.from_coefficients([2, -1j, 0.5])
        assert ps.cauchy_product(f, ps.one(), f.order) == f

    def test_extremal_times_one_plus_z(self):
        # coefficient n of (1+z) * sum 2/((n+1)(n+2)) z^n is 4/(n(n+2))
        n = np.arange(33.0)
        extremal = ps.PowerSeries(2.0 / ((n + 1) * (n + 2)))
        product = ps.cauchy_product(extremal, ps.from_coefficients([1, 1]), 32)
        k = np.arange(1.0, 33.0)
        assert abs(product.coeffs[0] - 1.0) < 1e-15
        assert np.max(np.abs(product.coeffs[1:] - 4.0 / (k * (k + 2)))) < 1e-15

    def test_truncation_is_silent(self):
        f = ps.from_coefficients([1, 1, 1])
        assert ps.cauchy_product(f, f, 1).order == 1


class TestDerivative:
    def test_termwise(self):
        assert np.allclose(ps.derivative(ps.from_coefficients([1, 1, 1])).coeffs, [1, 2])

    def test_constant_maps_to_zero(self):
        assert ps.derivative(ps.from_coefficients([7.0])) == ps.zero(0)

    def test_mobius_derivative_expansion(self):
        # d/dz (a-z)/(1-conj(a)z) = (-1+|a|^2) sum (n+1) conj(a)^n z^n
        alpha = 0.5
        geom = ps.PowerSeries(alpha ** np.arange(10).astype(complex))
        phi = ps.cauchy_product(ps.from_coefficients([alpha, -1]), geom, 9)
        derived = ps.derivative(phi)
        n = np.arange(8.0)
        expected = (-1 + alpha**2) * (n + 1) * alpha**n
        assert np.max(np.abs(derived.coeffs[:8] - expected) / np.abs(expected)) < 1e-12


class TestCompose:
    def test_identity_symbol(self):
        f = ps.from_coefficients([3, 1j, -2])
        assert ps.compose(f, ps.monomial(1), 2) == f

    def test_monomial_powers(self):
        assert ps.compose(ps.monomial(4), ps.monomial(3), 12) == ps.monomial(12)

    def test_geometric_composed_with_half_z(self):
        # 1/(1-z/2) at z/2 equals 1/(1-z/4): coefficients 4^-n
        geom_half = ps.PowerSeries(0.5 ** np.arange(30).astype(complex))
        composed = ps.compose(geom_half, ps.from_coefficients([0, 0.5]), 20)
        expected = 0.25 ** np.arange(21)
        assert np.max(np.abs(composed.coeffs - expected)) < 1e-15

    def test_rejects_symbol_leaving_disk(self):
        with pytest.raises(DomainError):
            ps.compose(ps.one(), ps.from_coefficients([1.0, 0.5]), 4)


class TestReciprocal:
    def test_geometric(self):
        geom = ps.PowerSeries(np.ones(6, dtype=complex))
        assert np.allclose(ps.reciprocal(geom, 5).coeffs, [1, -1, 0, 0, 0, 0])

    def test_s2_kernel_expansion(self):
        # 1 / (1 + sum_{n>=1} t^n/n^2) = 1 - t + (3/4) t^2 + ...
        n = np.arange(1.0, 9.0)
        f = ps.PowerSeries(np.concatenate([[1.0], 1.0 / n**2]).astype(complex))
        rec = ps.reciprocal(f, 4)
        assert np.allclose(rec.coeffs[:3], [1.0, -1.0, 0.75], atol=1e-15)

    def test_s22_kernel_expansion(self):
        # 1 / sum t^n/(1+n^2) = 1 - t/2 + t^2/20 + ...
        n = np.arange(9.0)
        f = ps.PowerSeries((1.0 / (1.0 + n**2)).astype(complex))
        rec = ps.reciprocal(f, 4)
        assert np.allclose(rec.coeffs[:3], [1.0, -0.5, 0.05], atol=1e-15)

    def test_rejects_zero_constant(self):
        with pytest.raises(DomainError):
            ps.reciprocal(ps.monomial(1), 3)


class TestEvaluate:
    def test_square_at_one(self):
        assert ps.evaluate(ps.from_coefficients([1, 2, 1]), 1.0) == 4.0

    def test_zero_series(self):
        assert ps.evaluate(ps.zero(5), 0.3 + 0.1j) == 0.0

    def test_extremal_at_one(self):
        n = np.arange(10_001.0)
        extremal = ps.PowerSeries((2.0 / ((n + 1) * (n + 2))).astype(complex))
        # telescoping partial sum: 2 - 2/(N+2)
        assert abs(ps.evaluate(extremal, 1.0) - 2.0) < 2e-4


# ---------------------------------------------------------------------------
# property-based invariants
# ---------------------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(coefficient_lists(), coefficient_lists(), coefficient_lists())
def test_product_distributes_over_sum(a, b, c):
    order = max(a.order, b.order, c.order) + 4
    left = ps.cauchy_product(ps.add(a, b), c, order)
    right = ps.add(ps.cauchy_product(a, c, order), ps.cauchy_product(b, c, order))
    scale = 1.0 + float(np.abs(left.coeffs).max())
    assert np.max(np.abs(left.coeffs - right.coeffs)) < 1e-12 * scale


@settings(max_examples=60, deadline=None)
@given(coefficient_lists(magnitude=0.2, min_const=0.5))
def test_reciprocal_round_trip(f):
    # tail coefficients kept small so the inverse recurrence stays
    # well-conditioned over the working order
    order = 32
    back = ps.reciprocal(ps.reciprocal(f, order), order)
    target = ps.truncate(f, order)
    assert np.max(np.abs(back.coeffs - target.coeffs)) < 1e-10 * (1 + np.abs(f.coeffs).max())


@settings(max_examples=40, deadline=None)
@given(coefficient_lists(max_len=5, magnitude=0.5), coefficient_lists(max_len=4, magnitude=0.4),
       coefficient_lists(max_len=4, magnitude=0.25))
def test_compose_associativity(f, phi, psi):
    if abs(phi.coeffs[0]) >= 1.0 or abs(psi.coeffs[0]) >= 0.9:
        return
    order = 48
    inner_first = ps.compose(f, ps.compose(phi, psi, order), order)
    outer_first = ps.compose(ps.compose(f, phi, order), psi, order)
    scale = 1.0 + float(np.abs(inner_first.coeffs).max())
    assert np.max(np.abs(inner_first.coeffs - outer_first.coeffs)) < 1e-9 * scale


@settings(max_examples=60, deadline=None)
@given(coefficient_lists(), coefficient_lists())
def test_derivative_product_rule(a, b):
    order = a.order + b.order
    left = ps.derivative(ps.cauchy_product(a, b, order))
    right = ps.add(
        ps.cauchy_product(ps.derivative(a), b, max(order - 1, 0)),
        ps.cauchy_product(a, ps.derivative(b), max(order - 1, 0)),
    )
    scale = 1.0 + float(np.abs(right.coeffs).max())
    assert np.max(np.abs(ps.truncate(left, right.order).coeffs - right.coeffs)) < 1e-12 * scale
