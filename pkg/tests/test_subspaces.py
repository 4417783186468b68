import cmath
import math

import numpy as np
import pytest

from numrange.blaschke import BlaschkeProduct
from numrange.errors import (
    CommonZeroError,
    DuplicateZeroError,
    NotSingleZeroError,
    TruncationInsufficientError,
)
from numrange.linalg import hermitian_eig
from numrange.model_operator import compress_shift_adjoint
from numrange.numerical_range import numerical_radius
from numrange.subspaces import (
    cross_gram,
    g_bound,
    radius_estimate,
    sin_angle_lower_bound,
    subspace_cos_angle,
)


def single(z, m=1):
    return BlaschkeProduct.single_zero(z, m)


def test_gram_of_basis_with_itself_is_identity():
    phi = BlaschkeProduct.monomial(4)
    assert np.max(np.abs(cross_gram(phi, phi) - np.eye(4))) < 1e-12


def test_gram_entry_against_kernel_formula():
    g = cross_gram(single(0.0), single(0.5))
    assert abs(g[0, 0] - math.sqrt(0.75)) < 1e-12


def test_gram_entries_obey_cauchy_schwarz():
    rng = np.random.default_rng(2)
    for _ in range(5):
        z1 = 0.7 * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())
        z2 = 0.7 * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())
        g = cross_gram(single(z1, 2), single(z2, 2))
        assert np.max(np.abs(g)) <= 1.0 + 1e-10


def test_gram_truncation_guard():
    with pytest.raises(TruncationInsufficientError):
        cross_gram(single(0.9, 2), single(-0.85, 2), n_terms=16)


def test_angle_between_kernel_lines():
    rep = subspace_cos_angle(single(0.0), single(0.5))
    assert abs(rep.cos_angle - math.sqrt(0.75)) < 1e-10
    assert abs(rep.sin_angle - 0.5) < 1e-10
    assert abs(rep.sin_lower_bound - 0.25) < 1e-14
    assert rep.sin_angle >= rep.sin_lower_bound


def test_angle_common_zero_rejected():
    with pytest.raises(CommonZeroError):
        subspace_cos_angle(single(0.3), single(0.3, 2))


def test_angle_opposite_zeros():
    rep = subspace_cos_angle(single(0.1), single(-0.1))
    bound = abs(0.2 / 1.01) ** 2
    assert rep.sin_angle >= bound - 1e-6
    # one-dimensional spaces: sine equals the pseudo-hyperbolic distance
    assert abs(rep.sin_angle - 0.2 / 1.01) < 1e-9


def test_sin_lower_bound_values():
    assert sin_angle_lower_bound(single(0.4), single(0.4, 3)) == 0.0
    assert abs(sin_angle_lower_bound(single(0.0), single(0.5)) - 0.25) < 1e-15
    assert abs(sin_angle_lower_bound(single(0.0, 2), single(0.5)) - 0.5**4) < 1e-15


def test_sin_lower_bound_needs_single_zero():
    two = BlaschkeProduct(((0.1, 1), (0.2, 1)))
    with pytest.raises(NotSingleZeroError):
        sin_angle_lower_bound(two, single(0.5))


def test_sine_dominates_bound_on_random_pairs():
    rng = np.random.default_rng(5)
    for _ in range(25):
        z1 = 0.7 * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())
        z2 = 0.7 * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())
        if abs(z1 - z2) < 1e-6:
            continue
        n1, n2 = int(rng.integers(1, 4)), int(rng.integers(1, 4))
        rep = subspace_cos_angle(single(z1, n1), single(z2, n2))
        assert rep.sin_angle >= rep.sin_lower_bound - 1e-6


def test_estimate_of_two_scalar_factors():
    est = radius_estimate([single(0.05), single(-0.05)])
    assert abs(est.delta - 0.05) < 1e-12
    assert est.p == 2
    # nearly coincident model lines: the angle condition fails by far
    assert not est.applicable
    assert est.bound is None


def test_estimate_duplicate_zero_rejected():
    with pytest.raises(DuplicateZeroError):
        radius_estimate([single(0.3), single(0.3, 2)])


def test_estimate_proxy_matches_two_factor_closed_form():
    phi1, phi2 = single(0.25, 2), single(-0.4)
    est = radius_estimate([phi1, phi2], rho_mode="f-proxy")
    b = sin_angle_lower_bound(phi1, phi2)
    rho = math.sqrt(1.0 - b)
    from numrange.radius import radius_single_zero

    delta = max(radius_single_zero(0.25, 2), radius_single_zero(-0.4, 1))
    assert abs(est.rho - rho) < 1e-12
    assert est.applicable == (rho < (1 - delta) / 2)
    if est.applicable:
        assert abs(est.bound - (delta + rho) / (1 - rho)) < 1e-12


def test_estimate_numeric_rho_no_larger_than_proxy():
    rng = np.random.default_rng(7)
    for _ in range(10):
        z1 = 0.6 * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())
        z2 = 0.6 * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())
        if abs(z1 - z2) < 1e-6:
            continue
        est = radius_estimate([single(z1), single(z2)])
        proxy = radius_estimate([single(z1), single(z2)], rho_mode="f-proxy")
        assert est.rho <= proxy.rho + 1e-9


def test_estimate_bound_holds_whenever_applicable():
    rng = np.random.default_rng(11)
    for _ in range(20):
        zs = []
        while len(zs) < 2:
            z = 0.9 * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())
            if all(abs(z - w) > 1e-3 for w in zs):
                zs.append(z)
        factors = [single(z) for z in zs]
        est = radius_estimate(factors)
        if est.applicable:
            product = factors[0] * factors[1]
            r = numerical_radius(compress_shift_adjoint(product).matrix)
            assert r <= est.bound + 1e-8
            assert est.bound < 1.0


def test_pair_sum_identity():
    rng = np.random.default_rng(13)
    for _ in range(10):
        p = int(rng.integers(2, 8))
        xs = rng.standard_normal(p)
        pair_sum = sum(xs[i] + xs[j] for i in range(p) for j in range(i + 1, p))
        assert abs(pair_sum - (p - 1) * xs.sum()) < 1e-12 * max(1.0, abs(xs.sum()) * p)


def test_hollow_ones_matrix_spectrum():
    for n in (2, 5, 9):
        b = np.ones((n, n)) - np.eye(n)
        vals = hermitian_eig(b).values
        assert np.max(np.abs(vals[:-1] + 1.0)) < 1e-10
        assert abs(vals[-1] - (n - 1)) < 1e-10


def test_bound_matrix_radius_identity():
    # radius of delta I + rho (ones - I) is delta + rho (p - 1)
    for p, rho, delta in ((3, 0.1, 0.5), (5, 0.05, 0.7)):
        a = delta * np.eye(p) + rho * (np.ones((p, p)) - np.eye(p))
        assert abs(numerical_radius(a) - (delta + rho * (p - 1))) < 1e-10
        assert abs(g_bound(rho, delta, p) * (1 - rho * (p - 1)) - (delta + rho * (p - 1))) < 1e-14


def test_bound_tends_to_delta_for_separated_zeros():
    # opposite zeros marching to the boundary: rho drops, the bound closes in on delta
    gaps = []
    for r in (0.9, 0.95, 0.99):
        est = radius_estimate([single(r), single(-r)])
        gaps.append(g_bound(est.rho, est.delta, 2) - est.delta)
        assert gaps[-1] > 0
    assert gaps[0] > gaps[1] > gaps[2]
