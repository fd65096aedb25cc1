"""Named worked problems used by the tests, the CLI fixtures and the scripts."""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .ellipticity import wave_substitution
from .numerics import GaussianRational
from .polynomials import GradedSeries, HomPoly, LinearChange, norm_sq_poly, random_hompoly
from .solver import OperatorSpec, Problem


def pythagorean_xi(xi: Fraction) -> Fraction:
    """``sqrt(1 + xi^2)`` when it is rational (e.g. xi = 3/4 -> 5/4)."""
    s = 1 + xi * xi
    num, den = s.numerator, s.denominator
    rn, rd = _isqrt_exact(num), _isqrt_exact(den)
    if rn is None or rd is None:
        raise ValueError(f"sqrt(1 + xi^2) is irrational for xi = {xi}")
    return Fraction(rn, rd)


def _isqrt_exact(k: int):
    r = math.isqrt(k)
    return r if r * r == k else None


def xi_matrix(xi: Fraction = Fraction(3, 4)) -> LinearChange:
    """``((i xi, -s), (s, i xi))`` with ``s = sqrt(1 + xi^2)``; orthogonal for ``Sigma``."""
    s = pythagorean_xi(xi)
    return LinearChange(((GaussianRational(0, xi), GaussianRational(-s)), (GaussianRational(s), GaussianRational(0, xi))))


def xi_quartic(xi: Fraction = Fraction(3, 4)) -> HomPoly:
    """Complex quartic whose transform by the xi-matrix is ``x1^4 + x2^4``.

    Not real on ``R^2`` (for xi != 0), so not elliptic in the usual sense.
    """
    s = pythagorean_xi(xi)
    c4 = xi**4 + (1 + xi**2) ** 2
    c22 = -12 * xi**2 * (1 + xi**2)
    c_odd = 4 * xi * s * (1 + 2 * xi**2)
    return HomPoly(
        2,
        4,
        {
            (4, 0): c4,
            (0, 4): c4,
            (2, 2): c22,
            (3, 1): GaussianRational(0, -c_odd),
            (1, 3): GaussianRational(0, c_odd),
        },
    )


def const_series(n: int, cutoff: int, c=1) -> GradedSeries:
    return GradedSeries(n, cutoff, {0: HomPoly.constant(n, c)} if c else {})


def laplace_plus_one(max_degree: int = 2) -> Problem:
    """``(Delta + 1)(|x|^2 q) = 1`` in the plane."""
    n = 2
    return Problem(
        OperatorSpec.laplacian_power(n, 1, [((0, 0), const_series(n, max_degree))]),
        norm_sq_poly(n, 1),
        const_series(n, max_degree),
        max_degree,
    )


def laplace_norm_divisor(max_degree: int = 4) -> Problem:
    """``Delta(|x|^2 q) = 1`` in the plane; solution ``q = 1/4``."""
    n = 2
    return Problem(OperatorSpec.laplacian_power(n, 1), norm_sq_poly(n, 1), const_series(n, max_degree), max_degree)


def singular_product(max_degree: int = 2) -> Problem:
    """Complex Laplacian with divisor ``z1 z2``: the degree-0 map is zero."""
    n = 2
    return Problem(OperatorSpec.laplacian_power(n, 1), HomPoly.monomial((1, 1)), const_series(n, max_degree), max_degree)


def quartic_divisor_problem(max_degree: int = 16, seed: int = 0, coeff_degree: int = 4) -> Problem:
    """``Delta^2 + a_1 d/dx1 + b`` with random polynomial ``a_1, b, f`` and divisor ``x1^4 + x2^4``."""
    n = 2
    rng = np.random.default_rng(seed)

    def rand_series(max_deg):
        return GradedSeries.from_polys(
            n, max_degree, [random_hompoly(rng, n, d, complex_coeffs=False, bound=3) for d in range(max_deg + 1)]
        )

    lower = [((1, 0), rand_series(coeff_degree)), ((0, 0), rand_series(coeff_degree))]
    return Problem(
        OperatorSpec.laplacian_power(n, 2, lower),
        HomPoly(n, 4, {(4, 0): 1, (0, 4): 1}),
        rand_series(coeff_degree),
        max_degree,
    )


def light_cone_divisor(space_dim: int = 2) -> HomPoly:
    """``x_1^2 + ... + x_d^2 - t^2`` with ``t`` the last variable."""
    n = space_dim + 1
    terms = {tuple(2 if i == j else 0 for i in range(n)): 1 for j in range(space_dim)}
    terms[tuple(2 if i == space_dim else 0 for i in range(n))] = -1
    return HomPoly(n, 2, terms)


def wave_problem(space_dim: int = 2, max_degree: int = 10, potential=1) -> Problem:
    """After ``t -> i y``: ``(Delta + a)(P~ q) = 1`` with ``P~ = |x|^2 + y^2``."""
    n = space_dim + 1
    P = wave_substitution(light_cone_divisor(space_dim), [space_dim])
    lower = [((0,) * n, const_series(n, max_degree, potential))] if potential else []
    return Problem(OperatorSpec.laplacian_power(n, 1, lower), P, const_series(n, max_degree), max_degree)
