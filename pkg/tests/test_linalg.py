import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fischer_cauchy.linalg import determinant, eliminate, inverse, matvec, solve
from fischer_cauchy.numerics import GaussianRational
from strategies import gaussian


def permutation_det(M):
    n = len(M)
    total = GaussianRational(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = GaussianRational(sign)
        for i in range(n):
            term = term * M[i][perm[i]]
        total = total + term
    return total


square = st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(gaussian, min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=80)
@given(square)
def test_determinant_matches_permutation_expansion(M):
    assert determinant(M) == permutation_det(M)


@settings(max_examples=60)
@given(square, st.data())
def test_solve_round_trip(M, data):
    b = data.draw(st.lists(gaussian, min_size=len(M), max_size=len(M)))
    if determinant(M) == 0:
        with pytest.raises(ZeroDivisionError):
            solve(M, b)
        return
    x = solve(M, b)
    assert matvec(M, x) == list(b)


def test_inverse_and_singular():
    M = [[GaussianRational(2), GaussianRational(0, 1)], [GaussianRational(1), GaussianRational(1)]]
    Minv = inverse(M)
    for i in range(2):
        col = [Minv[r][i] for r in range(2)]
        assert matvec(M, col) == [GaussianRational(int(i == r)) for r in range(2)]
    res = eliminate([[1, 2], [2, 4]])
    assert res.det == 0 and res.solution is None and res.rank_deficient_at == 1


def test_large_rational_matrix_against_float():
    rng = np.random.default_rng(5)
    A = rng.integers(-9, 10, size=(8, 8))
    M = [[GaussianRational(Fraction(int(v), 3)) for v in row] for row in A]
    assert float(determinant(M).re) == pytest.approx(np.linalg.det(A / 3), rel=1e-9)
