from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fischer_cauchy.fischer import norm_sq_rF
from fischer_cauchy.harmonic import (
    apply_F,
    eigenvalue_d,
    gauss_decompose,
    harmonic_projection,
    laplacian_radial_constant,
    min_eigenvalue_e,
    min_eigenvalue_from_moments,
)
from fischer_cauchy.numerics import shifted_moment_ratio
from fischer_cauchy.polynomials import HomPoly, laplacian, multiply, norm_sq_poly, random_hompoly
from strategies import hompolys


def test_gauss_decomposition_example():
    f = HomPoly.monomial((2, 0))
    dec = gauss_decompose(f)
    assert dec.component(1) == HomPoly.constant(2, Fraction(1, 2))
    assert dec.component(0) == HomPoly(2, 2, {(2, 0): Fraction(1, 2), (0, 2): Fraction(-1, 2)})
    assert dec.component(0).to_text() == "(1/2)*x1^2 + (-1/2)*x2^2"


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 3).flatmap(lambda n: hompolys(n=n, max_degree=8)))
def test_gauss_decomposition_reconstructs(f):
    dec = gauss_decompose(f)
    assert dec.reconstruct() == f
    assert all(laplacian(h).is_zero() for _, h in dec.components)
    assert gauss_decompose(dec.reconstruct()) == dec


def test_eigenvalue_examples():
    assert eigenvalue_d(1, 0, 2, 2) == 12
    assert eigenvalue_d(1, 1, 0, 2) == 16
    assert min_eigenvalue_e(1, 0, 2) == 4
    assert min_eigenvalue_e(2, 0, 2) == 64
    assert laplacian_radial_constant(1, 0, 2) == 4


def test_apply_F_examples():
    assert apply_F(HomPoly.constant(2, 1), 1) == HomPoly.constant(2, 4)
    assert apply_F(norm_sq_poly(2), 1) == norm_sq_poly(2).scale(16)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_F_acts_diagonally_on_gauss_components(n):
    rng = np.random.default_rng(n)
    for m in range(7):
        f = random_hompoly(rng, n, m)
        dec = gauss_decompose(f)
        for p in (1, 2):
            expected = HomPoly.zero(n, m)
            for s, h in dec.components:
                expected = expected + multiply(norm_sq_poly(n, s), h).scale(eigenvalue_d(p, s, m - 2 * s, n))
            assert apply_F(f, p) == expected


def test_min_eigenvalue_is_minimal_and_moment_form():
    for p in range(1, 4):
        for m in range(13):
            for n in range(1, 5):
                e = min_eigenvalue_e(p, m, n)
                assert e == min_eigenvalue_from_moments(p, m, n) == eigenvalue_d(p, 0, m, n)
                if n >= 2:
                    assert e == min(eigenvalue_d(p, s, m - 2 * s, n) for s in range(m // 2 + 1))


@settings(max_examples=40, deadline=None)
@given(hompolys(max_degree=6), st.integers(1, 2))
def test_F_lower_bound(f, p):
    e = min_eigenvalue_e(p, f.degree, f.n)
    assert norm_sq_rF(apply_F(f, p)).real() >= e * e * norm_sq_rF(f).real()


@settings(max_examples=40, deadline=None)
@given(hompolys(max_degree=6), st.integers(1, 2))
def test_multiplication_by_norm_power_is_exact(f, k):
    lhs = norm_sq_rF(multiply(norm_sq_poly(f.n, k), f)).real()
    assert lhs == shifted_moment_ratio(2 * f.degree + f.n - 1, 2 * k) * norm_sq_rF(f).real()


def test_harmonic_projection_is_harmonic():
    f = HomPoly(3, 4, {(4, 0, 0): 1, (1, 1, 2): 3})
    assert laplacian(harmonic_projection(f)).is_zero()
