import math
from fractions import Fraction

import pytest
from hypothesis import given
from scipy import integrate

from fischer_cauchy.numerics import (
    GaussianRational,
    SqrtPiScaled,
    binomial,
    factorial,
    moment_ratio,
    radial_moment,
)
from strategies import gaussian, nonzero_gaussian


def quad_moment(m):
    return integrate.quad(lambda r: math.exp(-r * r) * r**m, 0, math.inf)[0]


def test_radial_moment_examples():
    assert radial_moment(0) == SqrtPiScaled(Fraction(1, 2), 1)
    assert radial_moment(1) == SqrtPiScaled(Fraction(1, 2), 0)
    assert radial_moment(4) == SqrtPiScaled(Fraction(3, 8), 1)


@pytest.mark.parametrize("m", range(0, 16))
def test_radial_moment_against_quadrature(m):
    assert float(radial_moment(m)) == pytest.approx(quad_moment(m), rel=1e-10)


def test_radial_moment_recurrence():
    for m in range(41):
        assert radial_moment(m + 2).ratio(radial_moment(m)) == Fraction(m + 1, 2)


def test_moment_ratio_examples():
    assert moment_ratio(1, 1, 1, 2) == 2
    # I_6 / I_4 = (15/8) / (3/4)
    assert moment_ratio(1, 1, 1, 3) == Fraction(5, 2)


def test_moment_ratio_matches_quotient_grid():
    for m in range(1, 7):
        for k in range(1, 7):
            for j in range(1, 7):
                for n in range(1, 7):
                    num = radial_moment(2 * m + 2 * j * k + n - 1)
                    den = radial_moment(2 * m + n - 1)
                    assert moment_ratio(m, k, j, n) == num.ratio(den)


def test_moment_ratio_rejects_nonpositive():
    with pytest.raises(ValueError):
        moment_ratio(1, 0, 1, 2)


def test_mixed_parity_quotient_is_not_rational():
    with pytest.raises(ValueError):
        radial_moment(3).ratio(radial_moment(2))


def test_factorial_binomial():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert binomial(26, 2) == 325


@given(gaussian, gaussian, gaussian)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(gaussian, nonzero_gaussian)
def test_division_inverts_multiplication(a, b):
    assert (a / b) * b == a


@given(gaussian, gaussian)
def test_conjugation_is_involutive_automorphism(a, b):
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert a.abs2() >= 0
    assert a * a.conjugate() == GaussianRational(a.abs2())


def test_mixed_scalar_arithmetic():
    z = GaussianRational(1, 2)
    assert z + 1 == GaussianRational(2, 2)
    assert 2 * z == GaussianRational(2, 4)
    assert Fraction(1, 2) * z == GaussianRational(Fraction(1, 2), 1)
    assert GaussianRational(0, 1) ** 2 == -1
    assert 1 / GaussianRational(0, 1) == GaussianRational(0, -1)
    assert str(GaussianRational(Fraction(1, 2), -3)) == "1/2-3i"
